"""
Feature pyramid and fusion
==========================

Both networks expose a five-level pyramid (strides 1, 2, 4, 8, 8). The neck
projects each level with a 1x1 conv, resizes it to the 1/8 grid and mixes
the concatenation into one fused map.
"""
import torch

from bckd.models import build, count_macs, count_parameters, student_preset, teacher_preset

x = torch.rand(2, 3, 64, 64)
for cfg in (teacher_preset(), student_preset()):
    net = build(cfg).eval()
    with torch.no_grad():
        logits, pyramid, fused = net.forward_all(x)
    print(cfg.role)
    for level in pyramid.levels:
        print(f"  stride {level.stride}: {tuple(level.data.shape)}")
    print(f"  fused {tuple(fused.data.shape)} at stride {fused.reference_stride}")
    print(f"  logits {tuple(logits.shape)}")
    print(f"  params {count_parameters(net):,}  MACs {count_macs(net):,}")

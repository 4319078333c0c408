"""
Evaluation metrics
==================

mIoU, the local Hausdorff distance between boundary point sets, the
Monte-Carlo Lipschitz estimate behind manifold stability, and the Jacobian
gap diagnostic.
"""
import numpy as np
import torch

from bckd.data import SceneSpec, boundary_points_from_mask, generate_scene
from bckd.metrics import (MfsConfig, jacobian_gap, lhd_aggregate, lipschitz_estimate, mfs_rho,
                          miou)
from bckd.models import build, student_preset, teacher_preset

pred = np.array([[0, 0], [1, 1]])
gt = np.array([[0, 1], [1, 1]])
print("mIoU (7/12):", miou(pred, gt, 2))

_, mask = generate_scene(SceneSpec(seed=4))
b = boundary_points_from_mask(mask)
shifted = b.points + np.array([0, 2])
print("LHD(gt, gt):", lhd_aggregate(b, b))
print("LHD(gt shifted by 2 px, gt):", lhd_aggregate(shifted, b))

teacher = build(teacher_preset()).eval()
student = build(student_preset()).eval()
image = torch.from_numpy(generate_scene(SceneSpec(seed=4))[0])
cfg = MfsConfig(num_directions=16, num_probes=2)
lt = lipschitz_estimate(teacher.fused_features, image, cfg)
ls = lipschitz_estimate(student.fused_features, image, cfg)
print(f"Lipschitz teacher {lt:.3f} student {ls:.3f} rho {mfs_rho(lt, ls, cfg):.3f}")

# local Jacobian gap at two fused-grid cells, input window under each cell;
# both maps must share a width, so compare two student initialisations
other = build(student_preset(seed=1)).eval()
gap = jacobian_gap(student.fused_features, other.fused_features, image[:, :24, :24],
                   [(1, 1), (1, 2)], eps=1e-3)
print(f"Jacobian gap (untrained nets, diagnostic only): {gap:.3f}")

"""
Pixel self-relations
====================

Aligned features are column-normalised, their Gram matrix is scaled by
1/sqrt(d) and row-softmaxed: each pixel gets a distribution over all pixels.
"""
import torch

from bckd.context import (Aligner, align_features, context_loss, self_relation, symmetrize)
from bckd.fusion import FusedFeatureMap
from bckd.metrics import weyl_check

torch.manual_seed(0)
teacher = FusedFeatureMap(torch.randn(16, 3, 3))
student = FusedFeatureMap(torch.randn(16, 3, 3))
align = Aligner(16).requires_grad_(False)

rt = self_relation(align_features(teacher, align), tau=1.0)
rs = self_relation(align_features(student, align), tau=1.0)
print("relation", tuple(rt.values.shape), "row sums", rt.values.sum(-1)[:3].tolist())

# scaling the features does not change the relation once columns are normalised
scaled = self_relation(align_features(FusedFeatureMap(teacher.data * 40), align), 1.0)
print("max change under scaling:", (scaled.values - rt.values).abs().max().item())

print("context loss teacher->student:", context_loss(rt, rs, 2.0).item())
print("context loss teacher->teacher:", context_loss(rt, rt, 2.0).item())

# eigenvalue gaps of the symmetrised relations stay below the Frobenius distance
v = weyl_check(symmetrize(rt.values).numpy(), symmetrize(rs.values).numpy())
print(f"weyl: gap {v.max_gap:.4f} <= frob {v.frob:.4f}: {v.holds}")

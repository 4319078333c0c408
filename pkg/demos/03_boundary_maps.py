"""
Boundary maps from path affinity
================================

A scalar field is read off the fused features. Two pixels are affine when
every step along the straight pixel path between them is similar; a pixel's
boundary score is one minus its weakest affinity to any neighbour in radius.
"""
import torch

from bckd.boundary import BoundaryConfig, BoundaryMap, boundary_loss, boundary_map, path_affinity

# a field with a step down the middle
field = torch.zeros(6, 6, dtype=torch.float64)
field[:, 3:] = 1.0
cfg = BoundaryConfig(neighborhood_radius=2)

print("hard map (radius 2):")
print(boundary_map(field, cfg, mode="hard").scores.int())
print("soft map:")
print(boundary_map(field, cfg).scores.numpy().round(3))

# affinity along one path that crosses the step
print("affinity (2,1)->(2,3):", path_affinity(field, (2, 1), (2, 3), cfg).item())

# a constant field has affinity sigmoid(5) everywhere, so scores are tiny
flat = boundary_map(torch.zeros(4, 4, dtype=torch.float64)).scores
print("constant field score:", flat[0, 0].item())

# the loss compares spatial softmax distributions of two maps
t = boundary_map(field, cfg)
moved = torch.zeros(6, 6, dtype=torch.float64)
moved[:, 1:] = 1.0
s = boundary_map(moved, cfg)
print("boundary loss, step in the wrong place:", boundary_loss(t, s, tau=1.0).item())
print("boundary loss, identical student:", boundary_loss(t, BoundaryMap(t.scores), 1.0).item())

"""
Distillation losses and schedule
================================

The total loss adds the boundary and context terms to the task loss, both
scaled by r(t) = 1 - (t - 1) / t_max. The temperature grows by 1.05 whenever
the minibatch feature range exceeds 0.5.
"""
import torch

from bckd.distill import DistillSchedule, kd_loss, schedule_r, temperature_step, total_loss

z = torch.zeros(2, 1)
print("kd loss on uniform logits (ln 2):", kd_loss(z, z, 1.0).item())

print("r(t) over 5 epochs:", [schedule_r(t, 5) for t in range(1, 6)])

sched = DistillSchedule(t=1, t_max=40)
for t in (1, 20, 40):
    br = total_loss(1.0, 0.1, 0.02, sched.at_epoch(t))
    print(f"epoch {t:2d}: r={br.r_t:.3f} total={br.total:.4f}")

for feature_range in (0.4, 0.6, 0.9, 0.2, 0.7):
    sched = temperature_step(sched, feature_range)
    print(f"range {feature_range}: tau {sched.tau:.4f}")

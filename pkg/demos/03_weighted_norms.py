"""
Weighted Hilbert-Schmidt norms
==============================

The weighted HS norm bounds the operator norm between Sobolev scales,
with equality for rank-one tables.
"""

# %%
import numpy as np

from jsmap import whs

rng = np.random.default_rng(1)
A = rng.standard_normal((16, 16))

# %%
print(" r  p    whs        opnorm")
for r in (-1, 0, 1):
    for p in (0, 1, 2):
        print(f"{r:2d} {p:2d}  {whs.whs_norm(A, (r, p)):9.4f}  {whs.operator_norm_sobolev(A, (r, p)):9.4f}")

# %%
R = np.outer(rng.standard_normal(16), rng.standard_normal(16))
print("rank one:", whs.whs_norm(R, (1, 2)), whs.operator_norm_sobolev(R, (1, 2)))

# %%
# Off-diagonal decay C / (1 + |n - m|^l): membership needs l > r + 1/2
# and p > r + 1/2. The report keeps the analytic test and the numerical
# trend apart.
for w in [(0, 1), (1, 1)]:
    rep = whs.decay_membership(1.0, 2.0, w)
    print(w, rep.conditions_hold, [f"{x:.3f}" for x in rep.norms])

"""
Groups as permutation matrices
==============================

D(g) = sum_h S_h S_{gh}* built from digit isometries turns every group
element into an orthogonal matrix.
"""

# %%
import numpy as np

from jsmap import groups

K = groups.klein_group()
Da = groups.embed_finite(K, "a", 8)
print(Da.matrix.astype(int))

# %%
print(groups.check_homomorphism(K, 8).as_dict())

# %%
# With this definition products come out reversed: D(g) D(f) = D(fg).
# Abelian groups do not notice; S3 does.
rep = groups.check_homomorphism(groups.symmetric_group_3(), 12)
print("S3 product", rep.product, "reversed", rep.reversed_product)

# %%
# The integers only fit on interior columns, away from the truncation edge.
hz = groups.check_homomorphism(groups.IntegerGroup(), 128, window=3)
print("Z ok:", hz.ok, "interior columns:", len(hz.interior))

# %%
# Functional calculus: a square root of D(a).
R = groups.functional_calculus(Da, groups.principal_sqrt)
print("|R^2 - D(a)| =", np.max(np.abs(R @ R - Da.matrix)))
print("eigenvalues of R:", np.round(np.linalg.eigvals(R), 12))

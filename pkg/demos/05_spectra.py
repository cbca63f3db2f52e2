"""
Spectra at truncation
=====================

Eigenvalues of A and of the shift-model D(A) coincide. Only the
multisets are compared; point versus residual spectrum has no finite
counterpart.
"""

# %%
import numpy as np

from jsmap import cuntz, spectra

rng = np.random.default_rng(2)
N = 24
A = np.zeros((N, N), complex)
A[:18, :18] = np.triu(rng.standard_normal((18, 18)) + 1j * rng.standard_normal((18, 18)))

# %%
rep = spectra.compare_spectra(A)
print(rep.summary())

# %%
D = cuntz.shift_model_D(A)
for p in (1, 2, 4, np.inf):
    print(p, spectra.schatten_norm(A, p), spectra.schatten_norm(D, p))

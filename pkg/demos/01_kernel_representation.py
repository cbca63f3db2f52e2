"""
From a matrix to an integral kernel
===================================

A table A_mn on the first N modes of the Hardy space becomes the kernel
K(z, w) = sum A_mn z^m w^-n. Applying that kernel by quadrature on the
torus reproduces the plain matrix-vector product.
"""

# %%
import numpy as np

from jsmap import kernel
from jsmap.hardy import HardyElement, TruncationConfig, sobolev_norm

rng = np.random.default_rng(0)
N = 8
A = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
f = HardyElement(rng.standard_normal((N, 1)) + 0j)

# %%
# The kernel only needs the coefficient table; sampling it on an M x M grid
# is one 2-D FFT.
K = kernel.kernel_from_matrix(A)
print("K at (0.3, 1.1):", K(0.3, 1.1))

# %%
# The uniform rule is exact once M >= 2N + 1, so the default M = 2N + 2
# gives the mat-vec up to rounding.
g = kernel.apply_kernel(K, f)
print("max |g - A f| =", np.max(np.abs(g.coeffs - A @ f.coeffs)))

# %%
# Too coarse a grid aliases and is refused rather than silently wrong.
try:
    kernel.apply_kernel(K, f, M=N + 2)
except ValueError as exc:
    print("refused:", exc)

# %%
# Kernels are compared modulo terms that kill H_+ (constants in w, say).
shifted = lambda phi, psi: K(phi, psi) + 5.0
print(kernel.kernels_equivalent(K, shifted, TruncationConfig(N)))

# %%
# Sobolev norms weight mode n by (n+1)^-p.
for p in (-1, 0, 1):
    print(f"||f||_{p} = {sobolev_norm(f, p):.4f}")

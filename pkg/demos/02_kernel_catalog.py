"""
Closed-form kernels
===================

A handful of operators have kernels that sum in closed form. Each one is
checked against the kernel built from its coefficient table.
"""

# %%
import numpy as np

from jsmap import catalog, kernel
from jsmap import operators as ops
from jsmap.hardy import TruncationConfig

N = 24
cfg = TruncationConfig(N)

# %%
# Geometric weights diag(2^-n): the closed form 1/(1 - e^{i(phi-psi)}/2)
# carries an extra constant 1, which the kernel action ignores.
geo = catalog.geometric_half()
table = kernel.kernel_from_matrix(ops.diagonal(0.5 ** np.arange(1, N + 1)))
print(kernel.kernels_equivalent(geo, table, cfg))
print("K(phi, phi) =", geo(0.7, 0.7))

# %%
# Logarithmic kernel: the closed form equals minus the series
# sum alpha^n/n e^{in(phi-psi)}, so it represents -diag(alpha^n / n).
alpha = 0.5
phi, psi = 0.4, 2.0
n = np.arange(1, N + 1)
series = np.sum(alpha**n / n * np.exp(1j * n * (phi - psi)))
print("closed form :", catalog.log_alpha(alpha)(phi, psi))
print("series      :", series)
print("tail bound  :", catalog.log_series_tail_bound(alpha, N))

# %%
# Jordan form with blocks ending at 3, 7 and 12.
eigs = [1.0, -0.5j, 2.0]
jk = catalog.jordan_form(eigs, [3, 7, 12], 12)
J = ops.jordan(eigs, [3, 4, 5])
print("max |induced - J| =", np.max(np.abs(kernel.induced_matrix(jk, 12) - J.entries)))

# %%
# Toeplitz tables give convolution-like kernels with exactly the same
# coefficients as the table route.
offsets = {-1: 1.0, 0: 2.0, 2: 0.5j}
same = np.array_equal(catalog.toeplitz(offsets, N).coefficients(),
                      kernel.kernel_from_matrix(ops.toeplitz(offsets, N)).coeffs)
print("toeplitz coefficients identical:", same)

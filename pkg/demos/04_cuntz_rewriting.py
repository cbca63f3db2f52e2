"""
Exact arithmetic with Cuntz isometries
======================================

D(A) = sum A_mn s_m s_n* lives in O_inf. Moving to O_2 with
s_k -> s0^{k-1} s1 and then using s1 s1* = Id - s0 s0* leaves a
polynomial in s0 and s0* only.
"""

# %%
import numpy as np

from jsmap import cuntz, kernel
from jsmap.cuntz import CuntzPolynomial

s1 = CuntzPolynomial.word((1,), ())
s2 = CuntzPolynomial.word((2,), ())
print(s1.adjoint() * s1, "|", s1.adjoint() * s2)

# %%
# Multiplicative: D(A) D(B) = D(AB), exact on integer tables.
A = np.array([[1, 2], [0, -1]])
B = np.array([[0, 1], [3, 1]])
print(cuntz.js_D(A) * cuntz.js_D(B) == cuntz.js_D(A @ B))

# %%
# The bilinear form collapses to a multiple of the identity.
f, g = np.array([1, 2]), np.array([3, -1])
print(cuntz.bilinear_form(f, A, g), f @ A @ g)

# %%
P = cuntz.substitute_completeness(cuntz.to_o2(cuntz.js_D(A)))
print(cuntz.to_text(P))

# %%
# The same polynomial read off the symbol F(z, w).
print(P == cuntz.symbol_polynomial(kernel.symbol_F_from_matrix(A)))

# %%
# With s0 as the unilateral shift, the polynomial gives back A.
print(cuntz.shift_model_matrix(P, 2).real)

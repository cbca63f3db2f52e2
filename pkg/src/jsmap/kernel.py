"""Integral-kernel realization of the Jordan-Schwinger image D(A).

On the Hardy model D(A) is the integral operator

    f  ->  (1/2 pi i) \\oint K(A, z, w) f(w) dw / w,
    K(A, z, w) = sum_{m,n>=1} A_mn z^m w^{-n},

so the kernel coefficient table and the operator table coincide. Kernels
are compared by the operator they induce on the truncated H_+; terms
outside the w-modes -N..-1 act as zero there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .hardy import HardyElement, TruncationConfig, project_from_samples, sample_on_torus, torus_grid
from .operators import OperatorMatrix, as_entries

KernelEvaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class KernelSeries:
    """Coefficients of z^m w^{-n}, m, n = 1..N (``coeffs[m-1, n-1]``)."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError(f"kernel table must be square, got {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def N(self) -> int:
        return self.coeffs.shape[0]

    def __call__(self, phi, psi):
        """Evaluate at (z, w) = (e^{i phi}, e^{i psi}); arguments broadcast."""
        phi, psi = np.broadcast_arrays(np.asarray(phi, float), np.asarray(psi, float))
        modes = np.arange(1, self.N + 1)
        zp = np.exp(1j * phi[..., None] * modes)
        wp = np.exp(-1j * psi[..., None] * modes)
        return np.einsum("...m,mn,...n->...", zp, self.coeffs, wp)

    def grid(self, M: int) -> np.ndarray:
        """Samples on the M x M grid of roots of unity, by 2-D FFT."""
        if M < self.N + 1:
            raise ValueError(f"grid size M={M} too small for N={self.N}")
        P = np.zeros((M, M), dtype=complex)
        P[1 : self.N + 1, 1 : self.N + 1] = self.coeffs
        return np.fft.fft(np.fft.ifft(P, axis=0) * M, axis=1)

    def to_matrix(self) -> OperatorMatrix:
        return OperatorMatrix(self.coeffs)


@dataclass(frozen=True)
class SymbolF:
    """F(z, w) with D(A) = F(S0, S0*) after the completeness substitution.

    ``difference[m-1, n-1]`` is the coefficient of z^m w^n (m, n = 1..N),
    ``z_boundary[m]`` that of z^m (m = 0..N-1) and ``w_boundary[n-1]`` that
    of w^n (n = 1..N-1). The table is zero-padded past N, so row and
    column N of ``difference`` hold -A_{N,n} and -A_{m,N}: the edge terms
    that make the truncated operator finite rank.
    """

    difference: np.ndarray
    z_boundary: np.ndarray
    w_boundary: np.ndarray

    @property
    def N(self) -> int:
        return self.difference.shape[0]

    def __call__(self, z, w):
        z, w = np.broadcast_arrays(np.asarray(z, complex), np.asarray(w, complex))
        N = self.N
        m = np.arange(1, N + 1)
        out = np.einsum("...m,mn,...n->...", z[..., None] ** m, self.difference, w[..., None] ** m)
        out = out + np.sum(self.z_boundary * z[..., None] ** np.arange(N), axis=-1)
        out = out + np.sum(self.w_boundary * w[..., None] ** np.arange(1, N), axis=-1)
        return out


def kernel_from_matrix(A) -> KernelSeries:
    return KernelSeries(as_entries(A).copy())


def symbol_F_from_matrix(A) -> SymbolF:
    a = as_entries(A)
    N = a.shape[0]
    padded = np.zeros((N + 1, N + 1), dtype=complex)
    padded[:N, :N] = a
    diff = padded[1:, 1:] - padded[:N, :N]
    return SymbolF(diff, a[:, 0].copy(), a[0, 1:].copy())


def kernel_grid(K, M: int) -> np.ndarray:
    """Kernel samples K(phi_j, psi_k) on the uniform M x M torus grid."""
    if isinstance(K, KernelSeries):
        return K.grid(M)
    theta = torus_grid(M)
    return np.asarray(K(theta[:, None], theta[None, :]), dtype=complex)


def apply_kernel(K, f: HardyElement, M: int | None = None) -> HardyElement:
    """Integral operator with kernel ``K`` applied to ``f`` by uniform quadrature.

    The rule is exact for trigonometric-polynomial kernels once
    ``M >= 2N + 1``. ``K`` may be a :class:`KernelSeries` or any callable
    ``K(phi, psi)`` that broadcasts its arguments.
    """
    N = f.N
    if isinstance(K, KernelSeries) and K.N != N:
        raise ValueError(f"kernel truncation {K.N} does not match element truncation {N}")
    M = 2 * N + 2 if M is None else M
    if M < 2 * N + 1:
        raise ValueError(f"grid size M={M} too small for exact quadrature (need M >= {2 * N + 1})")
    Kg = kernel_grid(K, M)
    fv = sample_on_torus(f, M)
    gv = Kg @ fv / M
    return project_from_samples(gv, N)


def induced_matrix(K, N: int, M: int | None = None) -> np.ndarray:
    """Table T with T[m-1, n-1] = coefficient of z^m in K applied to z^n."""
    M = 2 * N + 2 if M is None else M
    if M < 2 * N + 1:
        raise ValueError(f"grid size M={M} too small for exact quadrature (need M >= {2 * N + 1})")
    Kg = kernel_grid(K, M)
    basis = np.zeros((M, N), dtype=complex)
    basis[1 : N + 1] = np.eye(N)
    samples = np.fft.ifft(basis, axis=0) * M
    images = Kg @ samples / M
    return (np.fft.fft(images, axis=0) / M)[1 : N + 1]


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    max_deviation: float
    worst_entry: tuple
    tol: float

    def __bool__(self):
        return self.equivalent


def kernels_equivalent(K1, K2, cfg: TruncationConfig, tol: float = 1e-10) -> EquivalenceReport:
    """Compare two kernels by their action on z^1..z^N (modulo the annihilator of H_+)."""
    T1 = induced_matrix(K1, cfg.N, cfg.M)
    T2 = induced_matrix(K2, cfg.N, cfg.M)
    dev = np.abs(T1 - T2)
    idx = np.unravel_index(int(np.argmax(dev)), dev.shape)
    worst = float(dev[idx])
    return EquivalenceReport(worst <= tol, worst, (int(idx[0]) + 1, int(idx[1]) + 1), tol)

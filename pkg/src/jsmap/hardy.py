"""Truncated Hardy space H_+(K) = H^2(T) (x) K and its Sobolev scale.

Elements are stored by their Taylor coefficients f_1, ..., f_N, each a
vector in the fiber K = C^d. There is no constant mode: the model is
f(z) = sum_{n>=1} f_n z^n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TruncationConfig:
    N: int
    d: int = 1
    M: int | None = None

    def __post_init__(self):
        if self.N < 1 or self.d < 1:
            raise ValueError("N and d must be positive")
        if self.M is None:
            object.__setattr__(self, "M", 2 * self.N + 2)
        elif self.M < self.N + 1:
            raise ValueError(f"grid size M={self.M} below N+1={self.N + 1}")


@dataclass(frozen=True)
class HardyElement:
    """Truncated element of H_+(K); ``coeffs[n-1]`` is the coefficient of z^n."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim == 1:
            c = c[:, None]
        if c.ndim != 2 or c.shape[0] < 1 or c.shape[1] < 1:
            raise ValueError(f"coefficients must have shape (N, d), got {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def N(self) -> int:
        return self.coeffs.shape[0]

    @property
    def d(self) -> int:
        return self.coeffs.shape[1]

    def __add__(self, other):
        _check_same(self, other)
        return HardyElement(self.coeffs + other.coeffs)

    def __sub__(self, other):
        _check_same(self, other)
        return HardyElement(self.coeffs - other.coeffs)

    def __mul__(self, c):
        return HardyElement(self.coeffs * c)

    __rmul__ = __mul__

    @classmethod
    def zero(cls, N: int, d: int = 1) -> "HardyElement":
        return cls(np.zeros((N, d), dtype=complex))

    @classmethod
    def monomial(cls, n: int, N: int, d: int = 1, fiber: int = 0) -> "HardyElement":
        """z^n times the fiber basis vector ``fiber``."""
        if not 1 <= n <= N:
            raise ValueError(f"mode {n} outside 1..{N}")
        c = np.zeros((N, d), dtype=complex)
        c[n - 1, fiber] = 1.0
        return cls(c)


def _check_same(f: HardyElement, g: HardyElement):
    if f.coeffs.shape != g.coeffs.shape:
        raise ValueError(f"shape mismatch: {f.coeffs.shape} vs {g.coeffs.shape}")


def _modes(N: int) -> np.ndarray:
    return np.arange(1, N + 1)


def inner_product(f: HardyElement, g: HardyElement) -> complex:
    """Scalar product sum_n (f_n, g_n)_K, conjugate-linear in ``g``."""
    _check_same(f, g)
    return complex(np.vdot(g.coeffs, f.coeffs))


def smoothing_J(f: HardyElement, times: int = 1) -> HardyElement:
    """Apply J(f)(z) = z^{-1} int_0^z f(w) dw ``times`` times.

    J multiplies the coefficient of z^n by 1/(n+1); negative ``times``
    applies powers of the inverse z d/dz + 1.
    """
    w = (_modes(f.N) + 1.0) ** (-int(times))
    return HardyElement(f.coeffs * w[:, None])


def sobolev_norm(f: HardyElement, p: int) -> float:
    """Norm in H_+^p(K): sqrt(sum_n ||f_n||^2 / (n+1)^{2p})."""
    w = (_modes(f.N) + 1.0) ** (-2 * int(p))
    return float(np.sqrt(np.sum(w * np.sum(np.abs(f.coeffs) ** 2, axis=1))))


def torus_grid(M: int, shift: float = 0.0) -> np.ndarray:
    """Angles 2 pi (k + shift) / M, k = 0..M-1."""
    return 2 * np.pi * (np.arange(M) + shift) / M


def sample_on_torus(f: HardyElement, M: int) -> np.ndarray:
    """Values f(e^{2 pi i k/M}), shape (M, d)."""
    if M < f.N + 1:
        raise ValueError(f"grid size M={M} too small for N={f.N} (need M >= N+1)")
    spec = np.zeros((M, f.d), dtype=complex)
    spec[1 : f.N + 1] = f.coeffs
    return np.fft.ifft(spec, axis=0) * M


def project_from_samples(values, N: int) -> HardyElement:
    """Keep the Fourier modes 1..N of torus samples (orthogonal projection onto H_+)."""
    v = np.asarray(values, dtype=complex)
    if v.ndim == 1:
        v = v[:, None]
    M = v.shape[0]
    if M < N + 1:
        raise ValueError(f"grid size M={M} too small for N={N} (need M >= N+1)")
    spec = np.fft.fft(v, axis=0) / M
    return HardyElement(spec[1 : N + 1])


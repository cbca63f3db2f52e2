"""Closed-form kernels for the worked examples of diagonal, Jordan and Toeplitz operators.

Each kind is evaluated at (z, w) = (e^{i phi}, e^{i psi}) with t = z / w:

``log_alpha``          ln(1 - alpha t) in closed form (the series route gives the opposite sign)
``geometric_half``     1 / (1 - t/2)
``jordan_form``        t/(t-1) sum_l a_l (t^{n_l} - t^{n_{l-1}}) + z (t/(1-t) - kappa(t))
``two_sided_toeplitz`` t/(1-t) sum_k a_k z^k
``toeplitz``           sum_{m,n} a_{m-n} z^m w^{-n}

The factor t/(1-t) and kappa(t) = sum_k t^{n_k} do not converge on the
circle; both are cut at degree N so the kernel is a trigonometric
polynomial and uniform quadrature stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

KINDS = ("log_alpha", "geometric_half", "jordan_form", "two_sided_toeplitz", "toeplitz")


@dataclass(frozen=True)
class CatalogKernel:
    kind: str
    params: dict = field(default_factory=dict)
    N: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown catalog kernel {self.kind!r}")
        p = self.params
        if self.kind == "log_alpha":
            if abs(complex(p.get("alpha", 0.0))) >= 1:
                raise ValueError("log kernel needs |alpha| < 1")
        elif self.kind == "jordan_form":
            b = [int(x) for x in p["boundaries"]]
            if len(b) != len(p["eigs"]):
                raise ValueError("need one eigenvalue per block boundary")
            if any(x <= y for x, y in zip(b, [0] + b[:-1])):
                raise ValueError("block boundaries must be strictly increasing from n_0 = 0")
            if self.N is None:
                raise ValueError("jordan kernel needs a truncation N")
        elif self.kind in ("toeplitz", "two_sided_toeplitz"):
            if self.N is None:
                raise ValueError(f"{self.kind} kernel needs a truncation N")

    @property
    def alpha(self) -> complex:
        return complex(self.params.get("alpha", 0.0))

    def _offsets(self) -> dict:
        return {int(k): complex(v) for k, v in self.params["offsets"].items()}

    def __call__(self, phi, psi):
        phi, psi = np.broadcast_arrays(np.asarray(phi, float), np.asarray(psi, float))
        theta = phi - psi
        t = np.exp(1j * theta)
        z = np.exp(1j * phi)
        if self.kind == "log_alpha":
            return np.log(1 - self.alpha * t)
        if self.kind == "geometric_half":
            return 1 / (1 - 0.5 * t)
        N = self.N
        if self.kind == "jordan_form":
            eigs = np.asarray(self.params["eigs"], complex)
            bounds = [int(x) for x in self.params["boundaries"]]
            out = np.zeros(t.shape, complex)
            prev = 0
            for a, nb in zip(eigs, bounds):
                # t/(t-1) (t^{n_l} - t^{n_{l-1}})
                out += a * _power_run(t, theta, prev, nb)
                prev = nb
            kappa = sum((t**nk for nk in bounds if nk <= N), np.zeros(t.shape, complex))
            return out + z * (_power_run(t, theta, 0, N) - kappa)
        if self.kind == "two_sided_toeplitz":
            symbol = sum(a * z**k for k, a in self._offsets().items())
            return _power_run(t, theta, 0, N) * symbol
        # toeplitz
        out = np.zeros(t.shape, complex)
        w = np.exp(1j * psi)
        for k, a in self._offsets().items():
            for n in range(max(1, 1 - k), min(N, N - k) + 1):
                out += a * z ** (n + k) * w ** (-n)
        return out

    def coefficients(self, N: int | None = None) -> np.ndarray:
        """Coefficient of z^m w^{-n} (m, n = 1..N) in the kernel's defining series.

        Constant terms and modes outside 1..N are dropped, since they act
        as zero on the truncated Hardy space.
        """
        N = self.N if N is None else N
        out = np.zeros((N, N), complex)
        n = np.arange(1, N + 1)
        if self.kind == "log_alpha":
            np.fill_diagonal(out, -(self.alpha**n) / n)
        elif self.kind == "geometric_half":
            np.fill_diagonal(out, 0.5**n)
        elif self.kind == "jordan_form":
            eigs = list(self.params["eigs"])
            bounds = [int(x) for x in self.params["boundaries"]]
            prev = 0
            for a, nb in zip(eigs, bounds):
                for m in range(prev + 1, min(nb, N) + 1):
                    out[m - 1, m - 1] = a
                prev = nb
            ends = set(bounds)
            for m in range(1, N):
                if m not in ends:
                    out[m, m - 1] = 1.0
        else:
            # both Toeplitz kinds compress to a_{m-n} on H_+
            for k, a in self._offsets().items():
                for m in range(1, N + 1):
                    if 1 <= m - k <= N:
                        out[m - 1, m - k - 1] = a
        return out


def _power_run(t, theta, a: int, b: int):
    """sum_{m=a+1}^{b} t^m, via t (t^b - t^a)/(t - 1) away from t = 1."""
    near = np.abs(np.angle(np.exp(1j * theta))) < 1e-6
    with np.errstate(divide="ignore", invalid="ignore"):
        closed = t * (t**b - t**a) / (t - 1)
    if np.any(near):
        direct = sum((t**m for m in range(a + 1, b + 1)), np.zeros(t.shape, complex))
        closed = np.where(near, direct, closed)
    return closed


def catalog_kernel(c: CatalogKernel, phi, psi):
    return c(phi, psi)


def log_alpha(alpha) -> CatalogKernel:
    return CatalogKernel("log_alpha", {"alpha": alpha})


def geometric_half() -> CatalogKernel:
    return CatalogKernel("geometric_half")


def jordan_form(eigs, boundaries, N: int) -> CatalogKernel:
    return CatalogKernel("jordan_form", {"eigs": list(eigs), "boundaries": list(boundaries)}, N)


def toeplitz(offsets: dict, N: int) -> CatalogKernel:
    return CatalogKernel("toeplitz", {"offsets": dict(offsets)}, N)


def two_sided_toeplitz(offsets: dict, N: int) -> CatalogKernel:
    return CatalogKernel("two_sided_toeplitz", {"offsets": dict(offsets)}, N)


def log_series_tail_bound(alpha: float, N: int) -> float:
    """Bound on sum_{n>N} |alpha|^n / n."""
    a = abs(alpha)
    return a ** (N + 1) / ((N + 1) * (1 - a))

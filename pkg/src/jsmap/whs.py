"""Weighted Hilbert-Schmidt norms and operator norms between Sobolev scales."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import as_entries


@dataclass(frozen=True)
class WeightPair:
    r: int
    p: int

    @classmethod
    def parse(cls, text: str) -> "WeightPair":
        """From ``"r:p"``."""
        r, p = text.split(":")
        return cls(int(r), int(p))


def _pair(w) -> WeightPair:
    return w if isinstance(w, WeightPair) else WeightPair(*w)


def scaled_matrix(A, w) -> np.ndarray:
    """B[m, n] = A_mn (n+1)^r / (m+1)^p.

    B is the matrix of D(A) viewed as a map H_+^r -> H_+^p written in
    orthonormal coordinates of both spaces.
    """
    w = _pair(w)
    a = as_entries(A)
    k = np.arange(1, a.shape[0] + 1) + 1.0
    return a * (k[None, :] ** w.r) / (k[:, None] ** w.p)


def whs_norm(A, w) -> float:
    w = _pair(w)
    a = as_entries(A)
    k = np.arange(1, a.shape[0] + 1) + 1.0
    weights = k[None, :] ** (2.0 * w.r) / k[:, None] ** (2.0 * w.p)
    return float(np.sqrt(np.sum(np.abs(a) ** 2 * weights)))


def operator_norm_sobolev(A, w) -> float:
    """Norm of the truncated D(A) : H_+^r(K) -> H_+^p(K), the top singular value of B."""
    B = scaled_matrix(A, w)
    try:
        s = np.linalg.svd(B, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(f"singular value solver failed: {exc}") from exc
    return float(s[0]) if s.size else 0.0


def decay_matrix(C: float, l: float, N: int) -> np.ndarray:
    """Extremal table A_mn = C / (1 + |n - m|^l), with 0^0 read as 1."""
    m, n = np.indices((N, N))
    return C / (1.0 + np.abs(n - m).astype(float) ** l)


@dataclass
class DecayReport:
    C: float
    l: float
    weights: WeightPair
    l_condition: bool
    p_condition: bool
    truncations: list
    norms: list
    increments: list

    @property
    def conditions_hold(self) -> bool:
        return self.l_condition and self.p_condition

    @property
    def increments_shrinking(self) -> bool:
        inc = self.increments
        return all(b < a for a, b in zip(inc, inc[1:]))

    def as_dict(self) -> dict:
        return {
            "C": self.C,
            "l": self.l,
            "r": self.weights.r,
            "p": self.weights.p,
            "sufficient_conditions": {
                "l > r + 1/2": self.l_condition,
                "p > r + 1/2": self.p_condition,
            },
            "empirical": {
                "N": list(self.truncations),
                "norms": list(self.norms),
                "increments": list(self.increments),
                "increments_shrinking": self.increments_shrinking,
            },
        }


def decay_membership(C: float, l: float, w, N_sequence=(16, 32, 64, 128)) -> DecayReport:
    """Check the off-diagonal decay criterion for HS^(r,p) membership.

    The analytic sufficient conditions and the observed norm trend on the
    extremal matrix are reported separately; the trend is evidence, not proof.
    """
    w = _pair(w)
    Ns = sorted(int(n) for n in N_sequence)
    norms = [whs_norm(decay_matrix(C, l, N), w) for N in Ns]
    inc = [b - a for a, b in zip(norms, norms[1:])]
    return DecayReport(C, l, w, l > w.r + 0.5, w.p > w.r + 0.5, Ns, norms, inc)

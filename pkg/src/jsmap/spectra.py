"""Eigenvalue and singular-value comparisons between A and its truncated image D(A).

Only eigenvalue multisets are compared. Point versus residual spectrum
is a distinction about dense ranges in infinite dimension and has no
finite-matrix counterpart, so reports flag it instead of estimating it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cuntz
from .kernel import induced_matrix, kernel_from_matrix
from .operators import as_entries

RESIDUAL_SPECTRUM_NOTE = (
    "finite truncation: only eigenvalue multisets are compared; "
    "point/residual spectrum inclusions are not observable"
)


class SolverError(np.linalg.LinAlgError):
    pass


def eigenvalues(M) -> np.ndarray:
    """All N eigenvalues of a dense complex matrix, with algebraic multiplicity.

    LAPACK ``geev`` (Hessenberg reduction and shifted QR) through numpy.
    """
    M = np.asarray(M, complex)
    if not np.all(np.isfinite(M)):
        raise SolverError("matrix has non-finite entries")
    try:
        return np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"eigenvalue iteration did not converge: {exc}") from exc


def _lex_order(z: np.ndarray) -> np.ndarray:
    return np.lexsort((z.imag, z.real))


def match_spectra(a, b):
    """Greedy nearest-pair bijection between two multisets.

    Repeatedly takes the closest unmatched pair; ties go to the pair that
    comes first when both lists are sorted by (real, imag). Returns the
    pairs (as values) and their distances.
    """
    a = np.asarray(a, complex)
    b = np.asarray(b, complex)
    if a.shape != b.shape:
        raise ValueError("multisets must have equal cardinality")
    a = a[_lex_order(a)]
    b = b[_lex_order(b)]
    n = a.size
    dist = np.abs(a[:, None] - b[None, :])
    i, j = np.indices((n, n))
    order = np.lexsort((j.ravel(), i.ravel(), dist.ravel()))
    used_a = np.zeros(n, bool)
    used_b = np.zeros(n, bool)
    pairs = []
    for k in order:
        p, q = divmod(int(k), n)
        if used_a[p] or used_b[q]:
            continue
        used_a[p] = used_b[q] = True
        pairs.append((a[p], b[q], float(dist[p, q])))
        if len(pairs) == n:
            break
    return pairs


@dataclass
class SpectrumReport:
    eigsA: np.ndarray
    eigsD: np.ndarray
    matching: list
    maxMismatch: float
    adjointDeviation: float
    routeDeviation: float
    note: str = RESIDUAL_SPECTRUM_NOTE

    def summary(self) -> dict:
        return {
            "maxMismatch": self.maxMismatch,
            "adjointDeviation": self.adjointDeviation,
            "routeDeviation": self.routeDeviation,
            "N": int(self.eigsA.size),
            "note": self.note,
        }


def compare_spectra(A, tol: float = 1e-8) -> SpectrumReport:
    """Spectra of A and of D(A) built through the shift-model route.

    ``adjointDeviation`` is max |D(A*) - D(A)*|; ``routeDeviation`` is the
    entrywise gap between the shift-model D(A) and the kernel-quadrature
    D(A). ``tol`` is not used to pass or fail anything here; callers decide.
    """
    a = as_entries(A)
    D = cuntz.shift_model_D(a)
    D_adj = cuntz.shift_model_D(a.conj().T)
    D_kernel = induced_matrix(kernel_from_matrix(a), a.shape[0])
    eA = eigenvalues(a)
    eD = eigenvalues(D)
    pairs = match_spectra(eA, eD)
    mismatch = max((p[2] for p in pairs), default=0.0)
    adj = float(np.max(np.abs(D_adj - D.conj().T), initial=0.0))
    route = float(np.max(np.abs(D - D_kernel), initial=0.0))
    return SpectrumReport(eA, eD, pairs, mismatch, adj, route)


def singular_values(M) -> np.ndarray:
    try:
        return np.linalg.svd(np.asarray(M, complex), compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"singular value iteration did not converge: {exc}") from exc


def schatten_norm(M, p: float) -> float:
    """(sum_i s_i^p)^(1/p) over singular values; p = inf gives the spectral norm."""
    if p < 1:
        raise ValueError(f"Schatten norms need p >= 1, got {p}")
    s = singular_values(M)
    if np.isinf(p):
        return float(s.max(initial=0.0))
    top = s.max(initial=0.0)
    if top == 0:
        return 0.0
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))

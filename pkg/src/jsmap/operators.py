"""Coefficient tables of operators in an orthonormal biorthogonal system.

An :class:`OperatorMatrix` stores ``entries[m-1, n-1] = <A e_m, f_n>``.
With this convention the operator itself sends ``e_m`` to
``sum_n entries[m-1, n-1] e_n``, so its usual matrix is ``entries.T``,
while the Jordan-Schwinger image ``D(A) = sum A_mn s_m s_n*`` acts on
coefficient vectors as ``entries @ f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

KINDS = ("dense", "diagonal", "jordan", "toeplitz", "two_sided_toeplitz")


def enumerate_integer(m: int) -> int:
    """Default bijection K: Z -> N (1-based), K(m) = 2m+1 for m >= 0, -2m else."""
    return 2 * m + 1 if m >= 0 else -2 * m


def integer_from_index(k: int) -> int:
    """Inverse of :func:`enumerate_integer`."""
    if k < 1:
        raise ValueError(f"enumeration index must be >= 1, got {k}")
    return (k - 1) // 2 if k % 2 else -(k // 2)


@dataclass(frozen=True)
class OperatorMatrix:
    entries: np.ndarray
    kind: str = "dense"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"operator table must be square, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("operator table has non-finite entries")
        if self.kind not in KINDS:
            raise ValueError(f"unknown structure tag {self.kind!r}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def N(self) -> int:
        return self.entries.shape[0]

    def adjoint(self) -> "OperatorMatrix":
        """Table of the Hilbert-space adjoint: conjugate transpose."""
        return OperatorMatrix(self.entries.conj().T)

    def operator_matrix(self) -> np.ndarray:
        """Usual matrix of A, i.e. column m holds the coordinates of A e_m."""
        return self.entries.T.copy()

    def __matmul__(self, other):
        return OperatorMatrix(self.entries @ as_entries(other))


def as_entries(A) -> np.ndarray:
    if isinstance(A, OperatorMatrix):
        return A.entries
    a = np.asarray(A, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"operator table must be square, got shape {a.shape}")
    return a


def dense(entries) -> OperatorMatrix:
    return OperatorMatrix(entries)


def diagonal(values) -> OperatorMatrix:
    values = np.asarray(values, dtype=complex)
    return OperatorMatrix(np.diag(values), "diagonal", {"values": values})


def jordan(eigs, sizes) -> OperatorMatrix:
    """Direct sum of Jordan blocks J_{size}(eig).

    Blocks are upper-triangular in the operator's own matrix, so the
    ones land on the sub-diagonal of the coefficient table:
    ``<A e_{m+1}, f_m> = 1`` inside each block.
    """
    eigs = np.asarray(eigs, dtype=complex)
    sizes = [int(s) for s in sizes]
    if len(eigs) != len(sizes):
        raise ValueError("need one eigenvalue per Jordan block")
    if any(s < 1 for s in sizes):
        raise ValueError("Jordan block sizes must be positive")
    N = sum(sizes)
    a = np.zeros((N, N), dtype=complex)
    start = 0
    for lam, s in zip(eigs, sizes):
        for k in range(start, start + s):
            a[k, k] = lam
            if k > start:
                a[k, k - 1] = 1.0
        start += s
    return OperatorMatrix(a, "jordan", {"eigs": eigs, "sizes": sizes})


def toeplitz(offsets: dict, N: int) -> OperatorMatrix:
    """One-sided Toeplitz table ``A_mn = a_{m-n}`` for m, n = 1..N."""
    offsets = {int(k): complex(v) for k, v in offsets.items()}
    a = np.zeros((N, N), dtype=complex)
    m, n = np.indices((N, N))
    for k, v in offsets.items():
        a[m - n == k] = v
    return OperatorMatrix(a, "toeplitz", {"offsets": offsets})


def two_sided_toeplitz(offsets: dict, N: int) -> OperatorMatrix:
    """Two-sided Toeplitz ``a_{i-j}``, i, j in Z, re-indexed by the default
    enumeration of Z and truncated to enumeration indices 1..N."""
    offsets = {int(k): complex(v) for k, v in offsets.items()}
    ints = [integer_from_index(k) for k in range(1, N + 1)]
    a = np.zeros((N, N), dtype=complex)
    for p, i in enumerate(ints):
        for q, j in enumerate(ints):
            a[p, q] = offsets.get(i - j, 0.0)
    return OperatorMatrix(a, "two_sided_toeplitz", {"offsets": offsets})


def unit(m: int, n: int, N: int) -> OperatorMatrix:
    """Matrix unit E_mn (1-based)."""
    a = np.zeros((N, N), dtype=complex)
    a[m - 1, n - 1] = 1.0
    return OperatorMatrix(a)

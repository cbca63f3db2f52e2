"""Orthogonal embeddings D(g) = sum_h S_h S_{gh}* of countable groups.

Finite groups of order q use the base-q digit isometries
S_h e_k = e_{q k + idx(h)} (0-based), which satisfy sum_h S_h S_h* = Id
exactly whenever q divides N; every D(g) is then a permutation matrix.
The integers use the shift construction through an enumeration
K: Z -> N, where only interior columns are finitely faithful.

With this definition D(g) D(f) = D(fg), so D reverses products for
non-abelian groups; :class:`HomomorphismReport` measures both orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np
import scipy.linalg

from . import cuntz
from .operators import enumerate_integer, integer_from_index


# ---- group specifications ----

@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple
    table: np.ndarray
    identity: int = 0

    def __post_init__(self):
        t = np.asarray(self.table, dtype=int)
        q = len(self.elements)
        if t.shape != (q, q):
            raise ValueError(f"multiplication table must be {q}x{q}, got {t.shape}")
        full = set(range(q))
        if any(set(row) != full for row in t) or any(set(col) != full for col in t.T):
            raise ValueError("multiplication table is not a Latin square")
        e = self.identity
        if not (np.array_equal(t[e], np.arange(q)) and np.array_equal(t[:, e], np.arange(q))):
            raise ValueError(f"element {self.elements[e]!r} is not a two-sided identity")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "elements", tuple(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g) -> int:
        if isinstance(g, (int, np.integer)) and not isinstance(g, bool):
            if not 0 <= g < self.order:
                raise IndexError(f"element index {g} out of range")
            return int(g)
        return self.elements.index(g)

    def mul(self, g, h) -> int:
        return int(self.table[self.index(g), self.index(h)])

    def inverse(self, g) -> int:
        return int(np.nonzero(self.table[self.index(g)] == self.identity)[0][0])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteGroup":
        return cls(tuple(d["elements"]), np.asarray(d["table"], int), int(d.get("identity", 0)))


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("e",), [[0]])


def cyclic_group(n: int) -> FiniteGroup:
    i = np.arange(n)
    return FiniteGroup(tuple(f"g{k}" for k in range(n)), (i[:, None] + i[None, :]) % n)


def klein_group() -> FiniteGroup:
    """Z2 x Z2 = {e, a, b, ab}; index bits are (b, a)."""
    i = np.arange(4)
    return FiniteGroup(("e", "a", "b", "ab"), i[:, None] ^ i[None, :])


def symmetric_group_3() -> FiniteGroup:
    """S3 as permutations of (0, 1, 2), composed as (g h)(x) = g(h(x))."""
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    table = [[perms.index(tuple(g[h[x]] for x in range(3))) for h in perms] for g in perms]
    return FiniteGroup(tuple("".join(map(str, p)) for p in perms), table)


@dataclass(frozen=True)
class IntegerGroup:
    """Z with the enumeration K (default 2m+1 for m >= 0, -2m otherwise)."""

    enumeration: Callable[[int], int] = enumerate_integer

    def index_window(self, N: int) -> list:
        """Integers x with K(x) <= N, in enumeration order (default K only)."""
        return [integer_from_index(k) for k in range(1, N + 1)]


@dataclass
class EmbeddedOperator:
    matrix: np.ndarray
    label: str
    interior: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.interior is None:
            self.interior = np.arange(self.matrix.shape[0])

    @property
    def N(self) -> int:
        return self.matrix.shape[0]


# ---- finite groups ----

def _require_divides(G: FiniteGroup, N: int):
    if N % G.order:
        raise ValueError(f"group order {G.order} must divide N={N}")


def digit_isometry(G: FiniteGroup, h, N: int) -> np.ndarray:
    """S_h e_k = e_{qk + idx(h)}, cut to the first N basis vectors."""
    _require_divides(G, N)
    q, i = G.order, G.index(h)
    S = np.zeros((N, N))
    k = np.arange(N // q)
    S[q * k + i, k] = 1.0
    return S


def embed_finite(G: FiniteGroup, g, N: int) -> EmbeddedOperator:
    """Permutation matrix of D(g): e_{qk + idx(gh)} -> e_{qk + idx(h)}."""
    _require_divides(G, N)
    q, gi = G.order, G.index(g)
    P = np.zeros((N, N))
    blocks = np.arange(N // q)[:, None] * q
    h = np.arange(q)[None, :]
    gh = G.table[gi][h]
    P[(blocks + h).ravel(), (blocks + gh).ravel()] = 1.0
    return EmbeddedOperator(P, str(G.elements[gi]))


def partial(G: FiniteGroup, alpha, N: int) -> np.ndarray:
    """d(alpha) = sum_h alpha(h) S_h."""
    alpha = _group_function(G, alpha)
    return sum(a * digit_isometry(G, h, N) for h, a in enumerate(alpha))


def bar_partial(G: FiniteGroup, beta, N: int) -> np.ndarray:
    """dbar(beta) = sum_h beta(h) S_h*."""
    beta = _group_function(G, beta)
    return sum(b * digit_isometry(G, h, N).T for h, b in enumerate(beta))


def _group_function(G: FiniteGroup, alpha) -> np.ndarray:
    a = np.asarray(alpha, dtype=float).ravel()
    if a.size != G.order:
        raise ValueError(f"function support exceeds the group window: {a.size} values for |G| = {G.order}")
    return a


# ---- integers ----

def integer_interior(N: int, reach: int) -> np.ndarray:
    """0-based indices K(x)-1 whose whole orbit x-reach..x+reach stays within 1..N."""
    keep = [
        k - 1
        for k in range(1, N + 1)
        if all(enumerate_integer(y) <= N for y in range(integer_from_index(k) - reach, integer_from_index(k) + reach + 1))
    ]
    return np.asarray(keep, dtype=int)


def integer_defining_polynomial(m: int, N: int) -> cuntz.CuntzPolynomial:
    """sum_h s0^{K(h)-1} s0*^{K(m+h)-1} - s0^{K(h)} s0*^{K(m+h)} over the window K(h), K(m+h) <= N."""
    terms = {}
    for h in IntegerGroup().index_window(N):
        a, b = enumerate_integer(h), enumerate_integer(m + h)
        if b > N:
            continue
        for w, c in ((((0,) * (a - 1), (0,) * (b - 1)), 1.0), (((0,) * a, (0,) * b), -1.0)):
            terms[w] = terms.get(w, 0.0) + c
    return cuntz.CuntzPolynomial(terms, cuntz.O2)


def embed_integers(m: int, N: int) -> EmbeddedOperator:
    """Truncated D(m) for Z from the defining shift sum.

    Column K(x) is exact (maps to e_{K(x-m)}) when K(x-m) <= N; the other
    columns are cut by the truncation and left out of ``interior``.
    """
    P = integer_defining_polynomial(m, N)
    D = cuntz.shift_model_matrix(P, N).real
    interior = [k - 1 for k in range(1, N + 1) if enumerate_integer(integer_from_index(k) - m) <= N]
    return EmbeddedOperator(D, str(m), np.asarray(interior, dtype=int))


# ---- reports ----

@dataclass
class HomomorphismReport:
    product: float
    reversed_product: float
    transpose: float
    identity: float
    faithful: bool
    n_elements: int
    interior: np.ndarray
    boundary: np.ndarray

    @property
    def ok(self) -> bool:
        return self.product == 0 and self.transpose == 0 and self.identity == 0 and self.faithful

    def as_dict(self) -> dict:
        return {
            "product": self.product,
            "reversed_product": self.reversed_product,
            "transpose": self.transpose,
            "identity": self.identity,
            "faithful": self.faithful,
            "n_elements": self.n_elements,
            "interior_size": int(len(self.interior)),
            "boundary_indices": [int(i) + 1 for i in self.boundary],
            "ok": self.ok,
        }


def _maxdev(X, Y, cols=None) -> float:
    if cols is not None:
        X, Y = X[:, cols], Y[:, cols]
    return float(np.max(np.abs(X - Y))) if X.size else 0.0


def check_homomorphism(G, N: int, window: int = 4) -> HomomorphismReport:
    """Check D(g)D(f) = D(gf), D(g)^T = D(g^-1), D(e) = Id and injectivity.

    Exact for finite groups. For :class:`IntegerGroup` the elements are
    -window..window and comparisons are restricted to interior columns.
    """
    if isinstance(G, FiniteGroup):
        mats = [embed_finite(G, g, N).matrix for g in range(G.order)]
        pairs = list(product(range(G.order), repeat=2))
        prod = max(_maxdev(mats[g] @ mats[f], mats[G.mul(g, f)]) for g, f in pairs)
        rev = max(_maxdev(mats[g] @ mats[f], mats[G.mul(f, g)]) for g, f in pairs)
        tr = max(_maxdev(mats[g].T, mats[G.inverse(g)]) for g in range(G.order))
        ident = _maxdev(mats[G.identity], np.eye(N))
        distinct = len({m.tobytes() for m in mats}) == len(mats)
        return HomomorphismReport(prod, rev, tr, ident, distinct, G.order, np.arange(N), np.array([], int))

    elems = list(range(-window, window + 1))
    mats = {m: embed_integers(m, N).matrix for m in range(-2 * window, 2 * window + 1)}
    cols = integer_interior(N, 2 * window)
    prod = max(_maxdev(mats[m] @ mats[n], mats[m + n], cols) for m in elems for n in elems)
    tr = max(_maxdev(mats[m].T, mats[-m], cols) for m in elems)
    ident = _maxdev(mats[0], np.eye(N))
    distinct = len({mats[m][:, cols].tobytes() for m in elems}) == len(elems)
    boundary = np.setdiff1d(np.arange(N), cols)
    return HomomorphismReport(prod, prod, tr, ident, distinct, len(elems), cols, boundary)


@dataclass
class ModuleActionReport:
    left_action: float
    right_action: float
    pairing: float
    pairing_value: float
    interior: np.ndarray

    @property
    def ok(self) -> bool:
        return self.left_action == 0 and self.right_action == 0 and self.pairing == 0


def check_module_action(G: FiniteGroup, alpha, g, N: int, beta=None) -> ModuleActionReport:
    """Check D(g) d(a) = d(a o g), dbar(b) D(g) = dbar(b o g^-1) and dbar(b) d(a) = <a, b> Id.

    Here (a o g)(h) = a(gh). The pairing identity holds on the first N/q
    basis vectors, where the truncated isometries are still isometric.
    """
    alpha = _group_function(G, alpha)
    beta = alpha if beta is None else _group_function(G, beta)
    gi = G.index(g)
    Dg = embed_finite(G, gi, N).matrix
    alpha_g = np.array([alpha[G.mul(gi, h)] for h in range(G.order)])
    beta_ginv = np.array([beta[G.mul(G.inverse(gi), h)] for h in range(G.order)])
    left = _maxdev(Dg @ partial(G, alpha, N), partial(G, alpha_g, N))
    right = _maxdev(bar_partial(G, beta, N) @ Dg, bar_partial(G, beta_ginv, N))
    interior = np.arange(N // G.order)
    value = float(alpha @ beta)
    pair = bar_partial(G, beta, N) @ partial(G, alpha, N)
    pairing = _maxdev(pair[np.ix_(interior, interior)], value * np.eye(len(interior)))
    return ModuleActionReport(left, right, pairing, value, interior)


# ---- functional calculus ----

def principal_sqrt(lam, tol: float = 1e-12):
    """e^{i theta} -> e^{i theta / 2} with theta in (-pi, pi]; values within ``tol``
    of the negative real axis are snapped to theta = pi."""
    lam = np.asarray(lam, complex)
    snapped = np.where((np.abs(lam.imag) <= tol) & (lam.real < 0), lam.real + 0j, lam)
    r, theta = np.abs(snapped), np.angle(snapped)
    theta = np.where((np.abs(snapped.imag) == 0) & (snapped.real < 0), np.pi, theta)
    return np.sqrt(r) * np.exp(0.5j * theta)


def functional_calculus(Dg, f: Callable, tol: float = 1e-10) -> np.ndarray:
    """f(Dg) = U f(Lambda) U* for a normal matrix, via the complex Schur form."""
    M = Dg.matrix if isinstance(Dg, EmbeddedOperator) else np.asarray(Dg)
    M = M.astype(complex)
    scale = max(1.0, float(np.linalg.norm(M, 2)) ** 2)
    if np.max(np.abs(M @ M.conj().T - M.conj().T @ M), initial=0.0) > tol * scale:
        raise ValueError("functional calculus needs a normal matrix")
    try:
        T, U = scipy.linalg.schur(M, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise np.linalg.LinAlgError(f"eigensolver failed: {exc}") from exc
    lam = np.diag(T)
    vals = np.asarray(f(lam), complex)
    if vals.shape != lam.shape:
        vals = np.broadcast_to(vals, lam.shape)
    if not np.all(np.isfinite(vals)):
        bad = lam[~np.isfinite(vals)][0]
        raise ValueError(f"function undefined at eigenvalue {bad}")
    return (U * vals) @ U.conj().T

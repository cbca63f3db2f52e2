"""Exact normal-form arithmetic in the Cuntz algebras O_2 and O_inf.

A word ``(u, v)`` stands for ``s_u s_v*`` with ``s_u = s_{u1} ... s_{uk}``,
so every star sits to the right. Products are reduced with
``s_i* s_j = delta_ij``; no completeness relation is ever applied
implicitly (O_inf has none, and for O_2 it is an explicit rewrite,
:func:`substitute_completeness`).
"""

from __future__ import annotations

import re
from collections import defaultdict

import numpy as np

from .operators import as_entries

O2 = "O2"
OINF = "Oinf"

Word = tuple  # (tuple[int, ...], tuple[int, ...])
EMPTY: Word = ((), ())


class AlphabetError(ValueError):
    pass


class NonScalarResidual(ArithmeticError):
    """A reduction expected to collapse to a multiple of Id left other words."""


class CuntzPolynomial:
    """Finite linear combination of normal-form words."""

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms=None, alphabet: str = OINF):
        if alphabet not in (O2, OINF):
            raise AlphabetError(f"unknown alphabet {alphabet!r}")
        clean = {}
        for (u, v), c in (terms or {}).items():
            u, v = tuple(int(i) for i in u), tuple(int(i) for i in v)
            _check_letters(u + v, alphabet)
            c = complex(c)
            if c != 0:
                clean[(u, v)] = clean.get((u, v), 0) + c
        self.terms = {w: c for w, c in clean.items() if c != 0}
        self.alphabet = alphabet

    # ---- construction ----
    @classmethod
    def identity(cls, alphabet: str = OINF, coeff=1.0) -> "CuntzPolynomial":
        return cls({EMPTY: coeff}, alphabet)

    @classmethod
    def word(cls, u=(), v=(), coeff=1.0, alphabet: str = OINF) -> "CuntzPolynomial":
        return cls({(tuple(u), tuple(v)): coeff}, alphabet)

    @classmethod
    def zero(cls, alphabet: str = OINF) -> "CuntzPolynomial":
        return cls({}, alphabet)

    # ---- algebra ----
    def _same(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __add__(self, other):
        if not isinstance(other, CuntzPolynomial):
            other = CuntzPolynomial.identity(self.alphabet, other)
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return CuntzPolynomial(out, self.alphabet)

    __radd__ = __add__

    def __neg__(self):
        return CuntzPolynomial({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CuntzPolynomial):
            return multiply(self, other)
        return CuntzPolynomial({w: c * other for w, c in self.terms.items()}, self.alphabet)

    def __rmul__(self, other):
        return CuntzPolynomial({w: other * c for w, c in self.terms.items()}, self.alphabet)

    def __eq__(self, other):
        if isinstance(other, CuntzPolynomial):
            return self.alphabet == other.alphabet and self.terms == other.terms
        return self.terms == CuntzPolynomial.identity(self.alphabet, other).terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = to_text(self).replace("\n", " + ") or "0"
        return f"CuntzPolynomial[{self.alphabet}]({body})"

    def adjoint(self) -> "CuntzPolynomial":
        return adjoint(self)

    def max_deviation(self, other: "CuntzPolynomial") -> float:
        diff = (self - other).terms
        return max((abs(c) for c in diff.values()), default=0.0)

    def is_scalar(self) -> bool:
        return all(w == EMPTY for w in self.terms)

    def scalar(self) -> complex:
        """Coefficient of Id; raises :class:`NonScalarResidual` if other words survive."""
        if not self.is_scalar():
            extra = [w for w in self.terms if w != EMPTY]
            raise NonScalarResidual(f"{len(extra)} non-identity words remain, e.g. {extra[0]}")
        return self.terms.get(EMPTY, 0j)

    def letters(self) -> set:
        return {i for u, v in self.terms for i in u + v}


def _check_letters(letters, alphabet):
    if alphabet == O2:
        if any(i not in (0, 1) for i in letters):
            raise AlphabetError(f"O2 words use letters 0 and 1 only, got {letters}")
    elif any(i < 1 for i in letters):
        raise AlphabetError(f"O_inf generators are indexed from 1, got {letters}")


def _reduce(v: tuple, x: tuple):
    """s_v* s_x in normal form: ('left', rest), ('right', rest) or None for zero."""
    k = min(len(v), len(x))
    if v[:k] != x[:k]:
        return None
    if len(v) <= len(x):
        return "left", x[len(v):]
    return "right", v[len(x):]


def multiply(P: CuntzPolynomial, Q: CuntzPolynomial) -> CuntzPolynomial:
    P._same(Q)
    out = defaultdict(complex)
    for (u, v), c in P.terms.items():
        for (x, y), d in Q.terms.items():
            red = _reduce(v, x)
            if red is None:
                continue
            side, rest = red
            w = (u + rest, y) if side == "left" else (u, y + rest)
            out[w] += c * d
    return CuntzPolynomial(out, P.alphabet)


def adjoint(P: CuntzPolynomial) -> CuntzPolynomial:
    return CuntzPolynomial({(v, u): c.conjugate() for (u, v), c in P.terms.items()}, P.alphabet)


# ---- Jordan-Schwinger map ----

def js_D(A) -> CuntzPolynomial:
    """D(A) = sum_{m,n} A_mn s_m s_n* over O_inf."""
    a = as_entries(A)
    m, n = np.nonzero(a)
    return CuntzPolynomial(
        {((int(i) + 1,), (int(j) + 1,)): a[i, j] for i, j in zip(m, n)}, OINF
    )


def js_partial(f) -> CuntzPolynomial:
    """sum_b f_b s_b*."""
    f = np.asarray(f, complex).ravel()
    return CuntzPolynomial({((), (b + 1,)): c for b, c in enumerate(f) if c != 0}, OINF)


def js_bar_partial(g) -> CuntzPolynomial:
    """sum_a g_a s_a."""
    g = np.asarray(g, complex).ravel()
    return CuntzPolynomial({((a + 1,), ()): c for a, c in enumerate(g) if c != 0}, OINF)


def bilinear_form(f, A, g) -> complex:
    """Scalar of d(f) D(A) dbar(g), which reduces to sum A_mn f_m g_n."""
    P = multiply(js_partial(f), multiply(js_D(A), js_bar_partial(g)))
    return P.scalar()


# ---- O_2 <-> O_inf ----

def o2_bridge_T(k: int) -> CuntzPolynomial:
    """T_k = s0^{k-1} s1."""
    if k < 1:
        raise ValueError("T_k is defined for k >= 1")
    return CuntzPolynomial.word((0,) * (k - 1) + (1,), (), alphabet=O2)


def _bridge_letters(word):
    out = ()
    for k in word:
        out += (0,) * (k - 1) + (1,)
    return out


def to_o2(P: CuntzPolynomial) -> CuntzPolynomial:
    """Image of an O_inf polynomial under s_k -> s0^{k-1} s1."""
    if P.alphabet != OINF:
        raise AlphabetError("to_o2 expects an O_inf polynomial")
    return CuntzPolynomial(
        {(_bridge_letters(u), _bridge_letters(v)): c for (u, v), c in P.terms.items()}, O2
    )


def s0_from_bridge(K: int) -> CuntzPolynomial:
    """Partial sum sum_{k=1}^{K} T_{k+1} T_k* with s1 s1* rewritten as Id - s0 s0*."""
    P = CuntzPolynomial.zero(O2)
    for k in range(1, K + 1):
        P = P + multiply(o2_bridge_T(k + 1), adjoint(o2_bridge_T(k)))
    return substitute_completeness(P)


def substitute_completeness(P: CuntzPolynomial) -> CuntzPolynomial:
    """Rewrite every junction s1 s1* as Id - s0 s0* until none remain."""
    if P.alphabet != O2:
        raise AlphabetError("the completeness relation only exists in O2")
    out = defaultdict(complex)
    stack = list(P.terms.items())
    while stack:
        (u, v), c = stack.pop()
        if u and v and u[-1] == 1 and v[-1] == 1:
            stack.append(((u[:-1], v[:-1]), c))
            stack.append(((u[:-1] + (0,), v[:-1] + (0,)), -c))
        else:
            out[(u, v)] += c
    return CuntzPolynomial(out, O2)


def symbol_polynomial(F) -> CuntzPolynomial:
    """F(s0, s0*) as an O2 polynomial, from a :class:`~jsmap.kernel.SymbolF`."""
    terms = defaultdict(complex)
    N = F.N
    for m in range(N):
        if F.z_boundary[m] != 0:
            terms[((0,) * m, ())] += F.z_boundary[m]
    for n in range(1, N):
        if F.w_boundary[n - 1] != 0:
            terms[((), (0,) * n)] += F.w_boundary[n - 1]
    rows, cols = np.nonzero(F.difference)
    for i, j in zip(rows, cols):
        terms[((0,) * (int(i) + 1), (0,) * (int(j) + 1))] += F.difference[i, j]
    return CuntzPolynomial(terms, O2)


def shift_model_matrix(P: CuntzPolynomial, N: int) -> np.ndarray:
    """Evaluate an s1-free O2 polynomial with s0 as the unilateral shift on e_1..e_N.

    Each normal-form word s0^m s0*^n becomes the partial isometry
    e_k -> e_{k-n+m} (k > n), dropped when the image index exceeds N. This
    is the exact compression of the infinite operator to the first N
    basis vectors, because s0*^n never leaves the span.
    """
    if P.alphabet != O2:
        raise AlphabetError("shift model needs an O2 polynomial")
    if 1 in P.letters():
        raise AlphabetError("s1 has no finite shift model; apply substitute_completeness first")
    out = np.zeros((N, N), complex)
    for (u, v), c in P.terms.items():
        m, n = len(u), len(v)
        k = np.arange(n, N)
        rows = k - n + m
        keep = rows < N
        out[rows[keep], k[keep]] += c
    return out


def shift_model_D(A) -> np.ndarray:
    """Truncated D(A) through the symbolic route: O_inf -> O2 -> completeness -> shift model."""
    a = as_entries(A)
    P = substitute_completeness(to_o2(js_D(a)))
    return shift_model_matrix(P, a.shape[0])


# ---- text format ----

def _fmt_coeff(c: complex) -> str:
    return f"({c.real:.17g}{c.imag:+.17g}j)"


def _fmt_word(u, v) -> str:
    return f"s({','.join(map(str, u))}) s*({','.join(map(str, v))})"


def to_text(P: CuntzPolynomial) -> str:
    """One ``c * s(u1,...,uk) s*(v1,...,vj)`` line per term, ordered by word."""
    return "\n".join(f"{_fmt_coeff(c)} * {_fmt_word(u, v)}" for (u, v), c in sorted(P.terms.items()))


_LINE = re.compile(r"^\s*\(?([^*]+?)\)?\s*\*\s*s\(([\d,\s]*)\)\s*s\*\(([\d,\s]*)\)\s*$")


def from_text(text: str, alphabet: str = OINF) -> CuntzPolynomial:
    terms = defaultdict(complex)
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        m = _LINE.match(line)
        if m is None:
            raise ValueError(f"line {lineno}: cannot parse {line!r}")
        c = complex(m.group(1).replace(" ", ""))
        u = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        v = tuple(int(x) for x in m.group(3).split(",") if x.strip())
        terms[(u, v)] += c
    return CuntzPolynomial(terms, alphabet)

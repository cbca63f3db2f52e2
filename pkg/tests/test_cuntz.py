"""Normal-form arithmetic is checked against the Fock representation:
s_i e_w = e_{iw} and s_i* e_{iw} = e_w, s_i* e_{jw} = 0 otherwise. It
satisfies s_i* s_j = delta_ij exactly on the infinite space, so it is an
independent model for O_inf words."""

from collections import defaultdict
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from jsmap import cuntz
from jsmap.cuntz import O2, OINF, CuntzPolynomial
from jsmap.kernel import symbol_F_from_matrix

from .conftest import crand


def fock_apply(P, vec):
    out = defaultdict(complex)
    for w, x in vec.items():
        for (u, v), c in P.terms.items():
            if w[: len(v)] == v:
                out[u + w[len(v):]] += c * x
    return {k: c for k, c in out.items() if c != 0}


def fock_basis(letters, L):
    for k in range(L + 1):
        yield from product(letters, repeat=k)


def fock_equal(P, Q, letters=(1, 2, 3), L=3):
    for w in fock_basis(letters, L):
        a, b = fock_apply(P, {w: 1}), fock_apply(Q, {w: 1})
        if set(a) != set(b) or any(abs(a[k] - b[k]) > 1e-12 for k in a):
            return False
    return True


def s(*u, alphabet=OINF):
    return CuntzPolynomial.word(u, (), alphabet=alphabet)


def sstar(*v, alphabet=OINF):
    return CuntzPolynomial.word((), v, alphabet=alphabet)


gaussian = st.builds(complex, st.integers(-3, 3), st.integers(-3, 3))
words = st.lists(st.integers(1, 3), max_size=2).map(tuple)
polys = st.dictionaries(st.tuples(words, words), gaussian, max_size=5).map(CuntzPolynomial)


def test_basic_relations():
    I = CuntzPolynomial.identity()
    assert sstar(1) * s(1) == I
    assert sstar(1) * s(2) == 0
    assert (CuntzPolynomial.word((1,), (2,)) * CuntzPolynomial.word((2,), (3,))) == CuntzPolynomial.word((1,), (3,))
    assert sstar(1, 2) * s(1) == sstar(2)
    assert sstar(1) * s(1, 2) == s(2)
    # no completeness in O_inf: s1 s1* stays a projection word
    assert s(1) * sstar(1) == CuntzPolynomial.word((1,), (1,))


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_product_matches_fock(P, Q):
    lhs = P * Q
    for w in fock_basis((1, 2, 3), 2):
        a = fock_apply(lhs, {w: 1})
        b = fock_apply(P, fock_apply(Q, {w: 1}))
        assert a.keys() == b.keys()
        assert all(a[k] == b[k] for k in a)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_associativity_exact(P, Q, R):
    assert (P * Q) * R == P * (Q * R)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_adjoint_rules(P, Q):
    assert P.adjoint().adjoint() == P
    assert (P * Q).adjoint() == Q.adjoint() * P.adjoint()
    assert (P + Q).adjoint() == P.adjoint() + Q.adjoint()
    assert fock_equal((P * Q).adjoint(), Q.adjoint() * P.adjoint(), L=2)


def test_adjoint_in_fock_model():
    # <P e_w, e_x> = <e_w, P* e_x>
    P = CuntzPolynomial({((1, 2), (3,)): 2 + 1j, ((2,), ()): -1j, ((), (1,)): 0.5})
    for w in fock_basis((1, 2, 3), 3):
        for x in fock_basis((1, 2, 3), 3):
            lhs = fock_apply(P, {w: 1}).get(x, 0)
            rhs = np.conj(fock_apply(P.adjoint(), {x: 1}).get(w, 0))
            assert lhs == rhs


def test_D_is_multiplicative(rng):
    A, B = crand(rng, 6, 6), crand(rng, 6, 6)
    assert (cuntz.js_D(A) * cuntz.js_D(B)).max_deviation(cuntz.js_D(A @ B)) < 1e-13
    Ai, Bi = rng.integers(-4, 5, (2, 5, 5))
    assert cuntz.js_D(Ai) * cuntz.js_D(Bi) == cuntz.js_D(Ai @ Bi)
    assert cuntz.js_D(Ai).adjoint() == cuntz.js_D(Ai.T)


def test_D_in_fock_model():
    A = np.array([[1, 2j], [0, -3]])
    D = cuntz.js_D(A)
    # D(A) e_(n, w) = sum_m A_mn e_(m, w) and kills e_()
    assert fock_apply(D, {(): 1}) == {}
    assert fock_apply(D, {(2, 1): 1}) == {(1, 1): 2j, (2, 1): -3}


def test_partial_pairing(rng):
    f, g = rng.integers(-3, 4, (2, 6)) + 1j * rng.integers(-3, 4, (2, 6))
    assert (cuntz.js_partial(f) * cuntz.js_bar_partial(g)).scalar() == np.sum(f * g)


def test_bilinear_form(rng):
    A = crand(rng, 7, 7)
    f, g = crand(rng, 7), crand(rng, 7)
    expected = sum(A[m, n] * f[m] * g[n] for m in range(7) for n in range(7))
    assert cuntz.bilinear_form(f, A, g) == pytest.approx(expected, abs=1e-12)


def test_co_eigenvector_intertwining(rng):
    # A = lam I + u v^T with f . u = 0: f is an eigenvector of A^T, and
    # d(f) D(A) = lam d(f) holds exactly in integer arithmetic
    N, lam = 6, 3
    u = rng.integers(-3, 4, N)
    v = rng.integers(-3, 4, N)
    f = np.zeros(N, int)
    f[0], f[1] = u[1], -u[0]
    A = lam * np.eye(N, dtype=int) + np.outer(u, v)
    assert np.array_equal(A.T @ f, lam * f)
    assert cuntz.js_partial(f) * cuntz.js_D(A) == lam * cuntz.js_partial(f)
    g = rng.integers(-3, 4, N)
    assert cuntz.js_partial(g) * cuntz.js_D(A) == cuntz.js_partial(A.T @ g)
    assert cuntz.js_D(A) * cuntz.js_bar_partial(g) == cuntz.js_bar_partial(A @ g)


def test_scalar_raises_on_residual():
    with pytest.raises(cuntz.NonScalarResidual):
        (s(1) + 1).scalar()


def test_bridge_is_isometric():
    for j in range(1, 5):
        for k in range(1, 5):
            prod = cuntz.o2_bridge_T(j).adjoint() * cuntz.o2_bridge_T(k)
            assert prod == (CuntzPolynomial.identity(O2) if j == k else 0)
    with pytest.raises(ValueError):
        cuntz.o2_bridge_T(0)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_bridge_is_multiplicative(P, Q):
    assert cuntz.to_o2(P * Q) == cuntz.to_o2(P) * cuntz.to_o2(Q)
    assert cuntz.to_o2(P.adjoint()) == cuntz.to_o2(P).adjoint()


@pytest.mark.parametrize("K", [1, 2, 5])
def test_s0_telescopes(K):
    s0 = s(0, alphabet=O2)
    tail = CuntzPolynomial.word((0,) * (K + 1), (0,) * K, alphabet=O2)
    assert cuntz.s0_from_bridge(K) == s0 - tail


def test_completeness_rewrite():
    P = CuntzPolynomial.word((1,), (1,), alphabet=O2)
    expected = CuntzPolynomial.identity(O2) - CuntzPolynomial.word((0,), (0,), alphabet=O2)
    assert cuntz.substitute_completeness(P) == expected
    Q = CuntzPolynomial({((0, 1, 1), (1, 1)): 2, ((1,), (0,)): 1j}, O2)
    once = cuntz.substitute_completeness(Q)
    assert cuntz.substitute_completeness(once) == once
    assert not any(u and v and u[-1] == 1 and v[-1] == 1 for u, v in once.terms)
    with pytest.raises(cuntz.AlphabetError):
        cuntz.substitute_completeness(s(1))


def test_two_expansions_agree(rng):
    A = rng.integers(-5, 6, (8, 8)) + 1j * rng.integers(-5, 6, (8, 8))
    first = cuntz.substitute_completeness(cuntz.to_o2(cuntz.js_D(A)))
    second = cuntz.symbol_polynomial(symbol_F_from_matrix(A))
    assert first == second


def test_shift_model_words():
    N = 5
    S = cuntz.shift_model_matrix(s(0, alphabet=O2), N)
    np.testing.assert_array_equal(S, np.eye(N, k=-1))
    P = CuntzPolynomial.identity(O2) - CuntzPolynomial.word((0,), (0,), alphabet=O2)
    E = np.zeros((N, N))
    E[0, 0] = 1
    np.testing.assert_array_equal(cuntz.shift_model_matrix(P, N), E)
    np.testing.assert_array_equal(cuntz.shift_model_matrix(sstar(0, 0, alphabet=O2), N), np.eye(N, k=2))
    with pytest.raises(cuntz.AlphabetError):
        cuntz.shift_model_matrix(s(1, alphabet=O2), N)


def test_shift_model_reproduces_matrix(rng):
    for N in (1, 4, 11):
        A = crand(rng, N, N)
        # compressed to e_1..e_N, D(A) has the same table as A
        np.testing.assert_allclose(cuntz.shift_model_D(A), A, atol=1e-13)


def test_text_round_trip(rng):
    P = cuntz.js_D(crand(rng, 4, 4)) * cuntz.js_bar_partial(crand(rng, 4))
    assert cuntz.from_text(cuntz.to_text(P)) == P
    text = cuntz.to_text(CuntzPolynomial.word((1, 2), (3,), 2 - 1j))
    assert text == "(2-1j) * s(1,2) s*(3)"
    with pytest.raises(ValueError):
        cuntz.from_text("nonsense")


def test_alphabets_do_not_mix():
    with pytest.raises(cuntz.AlphabetError):
        s(1) + s(0, alphabet=O2)
    with pytest.raises(cuntz.AlphabetError):
        s(2, alphabet=O2)
    with pytest.raises(cuntz.AlphabetError):
        s(0)
    with pytest.raises(cuntz.AlphabetError):
        cuntz.to_o2(s(0, alphabet=O2))

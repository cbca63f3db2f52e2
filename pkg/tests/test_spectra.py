import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from jsmap import operators as ops
from jsmap import spectra

from .conftest import crand


def test_diagonal_eigenvalues(rng):
    d = crand(rng, 9)
    got = spectra.eigenvalues(np.diag(d))
    pairs = spectra.match_spectra(got, d)
    assert max(p[2] for p in pairs) < 1e-14


def test_jordan_block_is_defective():
    J = ops.jordan([2.0], [2]).entries
    np.testing.assert_allclose(spectra.eigenvalues(J), [2, 2], atol=1e-7)


def test_eigenvalues_transpose_invariant(rng):
    A = crand(rng, 12, 12)
    e1, e2 = spectra.eigenvalues(A), spectra.eigenvalues(A.T)
    assert max(p[2] for p in spectra.match_spectra(e1, e2)) < 1e-10
    # A - lambda I is numerically singular at every computed eigenvalue
    for lam in e1:
        s = np.linalg.svd(A - lam * np.eye(12), compute_uv=False)
        assert s[-1] < 1e-10 * s[0]


def test_solver_rejects_non_finite():
    with pytest.raises(spectra.SolverError):
        spectra.eigenvalues([[np.nan, 0], [0, 1]])


def test_match_spectra_greedy():
    pairs = spectra.match_spectra([0, 1, 5], [5.1, 0.2, 1.0])
    got = sorted((p[0].real, p[1].real) for p in pairs)
    assert got == [(0, 0.2), (1, 1.0), (5, 5.1)]
    with pytest.raises(ValueError):
        spectra.match_spectra([1, 2], [1])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31))
def test_match_is_bijection(seed):
    rng = np.random.default_rng(seed)
    a = crand(rng, 7)
    b = a[rng.permutation(7)] + 1e-9 * crand(rng, 7)
    pairs = spectra.match_spectra(a, b)
    assert max(p[2] for p in pairs) < 1e-8
    assert sorted(map(complex, (p[0] for p in pairs)), key=lambda z: (z.real, z.imag)) == sorted(
        map(complex, a), key=lambda z: (z.real, z.imag)
    )


def test_compare_geometric_diagonal():
    N = 16
    rep = spectra.compare_spectra(ops.diagonal(0.5 ** np.arange(1, N + 1)))
    assert rep.maxMismatch < 1e-15
    assert rep.adjointDeviation == 0
    assert rep.routeDeviation < 1e-13
    assert "residual" in rep.summary()["note"]


def test_compare_zero_matrix():
    rep = spectra.compare_spectra(np.zeros((5, 5)))
    assert rep.maxMismatch == 0 and rep.routeDeviation == 0


def test_compare_random_non_normal(rng):
    N = 20
    A = np.triu(crand(rng, N, N))
    rep = spectra.compare_spectra(A)
    assert rep.maxMismatch < 1e-8
    assert rep.adjointDeviation < 1e-12


def test_schatten_examples():
    M = np.diag([3.0, 4.0])
    assert spectra.schatten_norm(M, 1) == pytest.approx(7)
    assert spectra.schatten_norm(M, 2) == pytest.approx(5)
    assert spectra.schatten_norm(M, np.inf) == pytest.approx(4)
    assert spectra.schatten_norm(np.zeros((3, 3)), 3) == 0
    with pytest.raises(ValueError):
        spectra.schatten_norm(M, 0.5)


def test_schatten_monotone_and_limit(rng):
    M = crand(rng, 10, 10)
    vals = [spectra.schatten_norm(M, p) for p in (1, 1.5, 2, 3, 8, 64)]
    assert all(b <= a * (1 + 1e-12) for a, b in zip(vals, vals[1:]))
    assert spectra.schatten_norm(M, 2) == pytest.approx(np.linalg.norm(M))
    top = spectra.schatten_norm(M, np.inf)
    assert top <= vals[-1] <= 1.05 * top


def test_schatten_no_overflow():
    M = np.diag([1e200, 1e199])
    assert spectra.schatten_norm(M, 4) == pytest.approx(1e200 * (1 + 1e-4) ** 0.25)

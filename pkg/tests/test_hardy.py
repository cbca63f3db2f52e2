import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from jsmap.hardy import (
    HardyElement,
    TruncationConfig,
    inner_product,
    project_from_samples,
    sample_on_torus,
    smoothing_J,
    sobolev_norm,
)

from .conftest import crand

finite = st.floats(-1e3, 1e3, allow_nan=False)


def elements(max_N=12, max_d=3):
    return st.tuples(st.integers(1, max_N), st.integers(1, max_d)).flatmap(
        lambda s: st.tuples(arrays(float, s, elements=finite), arrays(float, s, elements=finite)).map(
            lambda ab: HardyElement(ab[0] + 1j * ab[1])
        )
    )


def contour_oracle(f, g, M):
    """(1/2 pi i) \\oint (f(z), g(z)) dz/z with explicit exponentials."""
    theta = 2 * np.pi * np.arange(M) / M
    n = np.arange(1, f.N + 1)
    E = np.exp(1j * np.outer(theta, n))
    fv, gv = E @ f.coeffs, E @ g.coeffs
    return np.sum(fv * gv.conj()) / M


def test_config_defaults_and_limits():
    assert TruncationConfig(10).M == 22
    with pytest.raises(ValueError):
        TruncationConfig(10, M=10)
    with pytest.raises(ValueError):
        TruncationConfig(0)


def test_inner_product_basis():
    e1, e2 = HardyElement.monomial(1, 4), HardyElement.monomial(2, 4)
    assert inner_product(e1, e1) == 1
    assert inner_product(e1, e2) == 0


def test_inner_product_conjugate_linear_in_second(rng):
    f, g = HardyElement(crand(rng, 5)), HardyElement(crand(rng, 5))
    assert inner_product(f, 1j * g) == pytest.approx(-1j * inner_product(f, g))
    assert inner_product(1j * f, g) == pytest.approx(1j * inner_product(f, g))


@pytest.mark.parametrize("N,d", [(1, 1), (7, 1), (16, 3)])
def test_inner_product_matches_contour_quadrature(rng, N, d):
    f, g = HardyElement(crand(rng, N, d)), HardyElement(crand(rng, N, d))
    ip = inner_product(f, g)
    for M in (2 * N + 1, 2 * N + 2, 3 * N + 5):
        assert abs(ip - contour_oracle(f, g, M)) <= 1e-12 * max(1, abs(ip))


def test_inner_product_shape_mismatch():
    with pytest.raises(ValueError):
        inner_product(HardyElement.zero(3), HardyElement.zero(4))


def test_smoothing_J_on_z():
    out = smoothing_J(HardyElement.monomial(1, 3), 1)
    np.testing.assert_array_equal(out.coeffs[:, 0], [0.5, 0, 0])


def test_smoothing_J_identity_and_inverse(rng):
    f = HardyElement(crand(rng, 9, 2))
    np.testing.assert_array_equal(smoothing_J(f, 0).coeffs, f.coeffs)
    np.testing.assert_allclose(smoothing_J(smoothing_J(f, 1), -1).coeffs, f.coeffs, rtol=1e-15, atol=0)


def test_smoothing_J_matches_antiderivative():
    # J z^n = z^{-1} \int_0^z w^n dw = z^n / (n+1)
    N = 6
    for n in range(1, N + 1):
        out = smoothing_J(HardyElement.monomial(n, N), 1).coeffs[:, 0]
        expected = np.zeros(N)
        expected[n - 1] = 1 / (n + 1)
        np.testing.assert_allclose(out, expected)


@given(elements(), st.integers(-4, 4), st.integers(-4, 4))
@settings(max_examples=60, deadline=None)
def test_smoothing_J_composes(f, p, q):
    lhs = smoothing_J(smoothing_J(f, p), q).coeffs
    rhs = smoothing_J(f, p + q).coeffs
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-300)


def test_sobolev_norm_examples(rng):
    assert sobolev_norm(HardyElement.monomial(1, 5), 1) == 0.5
    f = HardyElement(crand(rng, 8, 2))
    assert sobolev_norm(f, 0) == pytest.approx(np.linalg.norm(f.coeffs))
    for p in (-2, -1, 1, 3):
        Jf = smoothing_J(f, p)
        assert sobolev_norm(f, p) == pytest.approx(np.sqrt(inner_product(Jf, Jf).real), rel=1e-13)


@given(elements())
@settings(max_examples=60, deadline=None)
def test_sobolev_norm_decreases_in_p(f):
    norms = [sobolev_norm(f, p) for p in range(-3, 4)]
    assert all(b <= a for a, b in zip(norms, norms[1:]))


@given(elements())
@settings(max_examples=60, deadline=None)
def test_parseval(f):
    M = 2 * f.N + 1
    ip = inner_product(f, f).real
    samples = sample_on_torus(f, M)
    assert ip == pytest.approx(np.sum(np.abs(f.coeffs) ** 2), rel=1e-12, abs=1e-300)
    assert np.sum(np.abs(samples) ** 2) / M == pytest.approx(ip, rel=1e-12, abs=1e-9)


def test_sample_zero_and_single_mode():
    assert np.all(sample_on_torus(HardyElement.zero(3), 4) == 0)
    vals = sample_on_torus(HardyElement.monomial(1, 3), 4)[:, 0]
    np.testing.assert_allclose(vals, [1, 1j, -1, -1j], atol=1e-15)


def test_sample_rejects_small_grid():
    with pytest.raises(ValueError):
        sample_on_torus(HardyElement.zero(5), 5)
    with pytest.raises(ValueError):
        project_from_samples(np.zeros(5), 5)


@given(elements(), st.integers(1, 9))
@settings(max_examples=60, deadline=None)
def test_sample_project_roundtrip(f, extra):
    M = f.N + extra
    back = project_from_samples(sample_on_torus(f, M), f.N)
    np.testing.assert_allclose(back.coeffs, f.coeffs, atol=1e-12 * max(1, np.abs(f.coeffs).max()))


def test_project_discards_constants():
    out = project_from_samples(np.full(10, 3.0 - 1j), 4)
    np.testing.assert_allclose(out.coeffs, 0, atol=1e-15)


def test_project_pure_mode():
    N, M = 5, 12
    theta = 2 * np.pi * np.arange(M) / M
    for n in range(1, N + 1):
        out = project_from_samples(np.exp(1j * n * theta), N).coeffs[:, 0]
        expected = np.zeros(N)
        expected[n - 1] = 1
        np.testing.assert_allclose(out, expected, atol=1e-14)


def test_project_mode_outside_window():
    N = 6
    M = 2 * N + 2
    theta = 2 * np.pi * np.arange(M) / M
    out = project_from_samples(np.exp(1j * (N + 1) * theta), N)
    np.testing.assert_allclose(out.coeffs, 0, atol=1e-14)

"""Smoke tests for the fockop python module."""

import cmath
import math

import pytest

import fockop


def test_moments_gaussian_factorials():
    p = fockop.SpaceParams(1, 1.0)
    for n in range(8):
        assert fockop.moment(p, [n]) == pytest.approx(math.factorial(n), rel=1e-13)

    p2 = fockop.SpaceParams(2, 1.0, alpha=2.0)
    assert fockop.moment(p2, [2, 1]) == pytest.approx(2.0 / 8.0, rel=1e-13)


def test_graded_basis_order():
    p = fockop.SpaceParams(2, 1.0)
    basis = fockop.graded_basis(p, 1)
    assert basis == [[0, 0], [1, 0], [0, 1]]


def test_kernel_gaussian_is_exponential():
    p = fockop.SpaceParams(1, 1.0, alpha=1.5)
    x, y = 0.7 + 0.2j, -0.3 + 0.9j
    assert fockop.kernel_eval(p, [x], [y]) == pytest.approx(
        cmath.exp(1.5 * x * y.conjugate()), rel=1e-12
    )


def test_mittag_leffler_special_values():
    assert fockop.ml_eval(1.0, 1.0, 0, 1.0) == pytest.approx(math.e, rel=1e-14)
    # frozen from a high-precision series evaluation
    assert fockop.ml_eval(0.5, 0.5, 0, 3.0) == pytest.approx(48618.530751582307633, rel=1e-12)


def test_symbol_parsing_and_radiality():
    g = fockop.parse_symbol("z1*conj(z2)", 2)
    assert g.radiality == fockop.Radiality.rotation_invariant
    assert not g.is_radial
    r2 = fockop.parse_symbol("r^2", 2)
    assert r2.is_radial
    assert r2([1.0 + 0j, 1.0 + 0j]) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        fockop.parse_symbol("z3", 2)


def test_omega_closed_forms():
    p = fockop.SpaceParams(1, 1.0)
    r2 = fockop.parse_symbol("r^2", 1)
    for n in range(6):
        assert fockop.omega(r2, n, p) == pytest.approx(n + 1.0, rel=1e-12)
        assert fockop.omega_quadrature(r2, n, p) == pytest.approx(n + 1.0, rel=1e-10)


def test_creation_operator_matrix():
    p = fockop.SpaceParams(1, 1.0)
    mat, basis = fockop.build_matrix(fockop.parse_symbol("z1", 1), p, 6)
    assert basis[0] == [0]
    for n in range(6):
        assert mat[n + 1, n] == pytest.approx(math.sqrt(n + 1.0), rel=1e-12)


def test_commutator_and_offblock():
    p = fockop.SpaceParams(2, 1.0)
    f = fockop.parse_symbol("r^2", 2)
    quiet = fockop.commutator_residual(f, fockop.parse_symbol("z1*conj(z2)", 2), p, D=8)
    assert quiet["frobenius_residual"] < 1e-8
    loud = fockop.commutator_residual(f, fockop.parse_symbol("z1", 2), p, D=8)
    assert loud["frobenius_residual"] > 0.05
    assert fockop.offblock_mass(fockop.parse_symbol("z1", 2), p, D=8) > 0.1


def test_counterexample():
    p = fockop.SpaceParams(1, 1.0)
    rep = fockop.counterexample_check(8, p, D=14)
    assert rep["frobenius_residual"] < 1e-7
    assert fockop.offblock_mass(fockop.direction_power(1, 8, 1), p, D=14) > 0.1


def test_period_scan_trichotomy():
    p = fockop.SpaceParams(1, 1.5, s=0.5)
    one = fockop.constant(1.0, 1)
    r2 = fockop.parse_symbol("r^2", 1)
    assert len(fockop.period_scan(one, one, p)["matches"]) == 11
    assert fockop.period_scan(r2, r2, p)["matches"] == [0]
    assert fockop.period_scan(r2, one, p)["matches"] == []


def test_projection_reproduces_monomials():
    p = fockop.SpaceParams(1, 2.0)
    u = fockop.parse_symbol("z1^3", 1)
    z0 = 0.8 - 0.4j
    assert fockop.project_pointwise(u, [z0], p) == pytest.approx(z0**3, abs=1e-9)


def test_scaling_law():
    p = fockop.SpaceParams(1, 1.5, s=0.5)
    g = fockop.parse_symbol("r^2", 1)
    vt = fockop.v_transform(g, 2.0, p)
    z = 1.0 + 0.5j
    lhs = fockop.g_transform(vt, [z], p)
    rhs = 2.0 ** (-2 * (0.5 + 1) - 2 * z) * fockop.g_transform(g, [z], p)
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_numerical_error_is_raised():
    p = fockop.SpaceParams(1, 1.0)
    hot = fockop.exp_radial(1.5, 1.0, 1)  # grows faster than the weight decays
    with pytest.raises(fockop.NumericalError):
        fockop.omega_quadrature(hot, 1.0, p)

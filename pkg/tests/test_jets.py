import cmath
import math

import numpy as np
import pytest

from ramq.errors import BaseMismatch, BranchCut, DivisionByZeroJet
from ramq.jets import (
    Jet,
    branch_arg,
    jet_add,
    jet_exp,
    jet_from_poly,
    jet_log,
    jet_mul,
    jet_pow_complex,
    jet_reciprocal,
    jet_scale,
    jet_sub,
    jet_variable,
)
from ramq.polyrat import Polynomial


def close(a: Jet, b: Jet, tol=1e-12):
    assert a.base == b.base and a.order == b.order
    scale = 1.0 + max(abs(c) for c in a.coeffs)
    for x, y in zip(a.coeffs, b.coeffs):
        assert abs(x - y) <= tol * scale


def test_linear_arithmetic():
    one_plus = Jet(0j, (1, 1, 0))
    one_minus = Jet(0j, (1, -1, 0))
    assert jet_add(one_plus, one_minus).coeffs == (2, 0, 0)
    assert jet_scale(one_plus, 1j).coeffs == (1j, 1j, 0)
    x = jet_variable(0j, 2)
    assert jet_sub(x, x).coeffs == (0, 0, 0)


def test_base_mismatch_rejected():
    with pytest.raises(BaseMismatch):
        jet_add(Jet(0j, (1, 0)), Jet(1j, (1, 0)))
    with pytest.raises(BaseMismatch):
        jet_mul(Jet(0j, (1, 0)), Jet(0j, (1, 0, 0)))


def test_mul_truncates():
    a = Jet(0j, (1, 1, 0))
    b = Jet(0j, (1, -1, 0))
    assert jet_mul(a, b).coeffs == (1, 0, -1)
    x = Jet(0j, (0, 1))
    assert jet_mul(x, x).coeffs == (0, 0)


def test_exp_product_is_exp_of_double():
    # independent oracle: Taylor coefficients of e^{2x} are 2^k / k!
    k = 6
    e1 = jet_exp(jet_variable(0j, k))
    prod = jet_mul(e1, e1)
    expected = Jet(0j, tuple(2.0**j / math.factorial(j) for j in range(k + 1)))
    close(prod, expected)


def test_reciprocal_binomial_series():
    # 1/(x + 2i) = (2i)^-1 - (2i)^-2 x + (2i)^-3 x^2 - ...
    a = Jet(0j, (2j, 1, 0, 0))
    rec = jet_reciprocal(a)
    expected = Jet(0j, tuple((-1) ** k * (2j) ** (-k - 1) for k in range(4)))
    close(rec, expected)


def test_reciprocal_geometric_series():
    rec = jet_reciprocal(Jet(0j, (1, 1, 0, 0, 0)))
    assert rec.coeffs == (1, -1, 1, -1, 1)


def test_reciprocal_roundtrip_random(rng):
    for _ in range(20):
        order = int(rng.integers(1, 11))
        base = complex(rng.uniform(-2, 2), rng.uniform(0.2, 2))
        coeffs = rng.uniform(-1, 1, order + 1) + 1j * rng.uniform(-1, 1, order + 1)
        coeffs[0] += 3.0  # keep the constant term away from zero
        a = Jet(base, tuple(coeffs))
        close(jet_reciprocal(jet_reciprocal(a)), a)


def test_reciprocal_rejects_zero_constant():
    with pytest.raises(DivisionByZeroJet):
        jet_reciprocal(Jet(0j, (0, 1)))


def test_exp_taylor():
    e = jet_exp(jet_variable(0j, 3))
    expected = Jet(0j, (1, 1, 0.5, 1 / 6))
    close(e, expected)


def test_exp_oscillatory_leading_factor():
    # e^{in z} about z0 = i starts at e^-n
    for n in (0.5, 1.0, 2.0):
        arg = Jet(1j, (1j * n * 1j, 1j * n, 0, 0))
        e = jet_exp(arg)
        assert abs(e.coeffs[0] - math.exp(-n)) < 1e-15


def test_exp_log_roundtrip_random(rng):
    for _ in range(20):
        order = int(rng.integers(1, 11))
        base = complex(rng.uniform(-2, 2), rng.uniform(0.2, 2))
        coeffs = rng.uniform(-1, 1, order + 1) + 1j * rng.uniform(-1, 1, order + 1)
        coeffs[0] = 2.0 + 1j * rng.uniform(0.5, 1.5)  # well off the cut
        a = Jet(base, tuple(coeffs))
        close(jet_exp(jet_log(a)), a)


def test_log_examples():
    lg = jet_log(jet_variable(1j, 2))
    assert abs(lg.coeffs[0] - 1j * math.pi / 2) < 1e-15
    assert abs(lg.coeffs[1] - (-1j)) < 1e-15  # 1/i
    lg2 = jet_log(jet_variable(cmath.exp(1j * math.pi / 4), 1))
    assert abs(lg2.coeffs[0] - 1j * math.pi / 4) < 1e-15


def test_branch_agrees_with_principal_in_upper_half_plane(rng):
    for _ in range(50):
        w = complex(rng.uniform(-3, 3), rng.uniform(1e-3, 3))
        assert branch_arg(w) == pytest.approx(cmath.phase(w), abs=1e-15)
        lg = jet_log(jet_variable(w, 1))
        assert lg.coeffs[0] == pytest.approx(cmath.log(w), abs=1e-15)


def test_branch_shift_below_cut():
    # third quadrant points pick up +2*pi relative to the principal branch
    w = -1 - 1j
    assert branch_arg(w) == pytest.approx(cmath.phase(w) + 2 * math.pi)


def test_branch_cut_rejected():
    with pytest.raises(BranchCut):
        jet_log(jet_variable(-1e-3j, 2))


def test_pow_examples():
    for s in (0.3, 1.7, -0.4):
        p = jet_pow_complex(jet_variable(1j, 2), s)
        assert abs(p.coeffs[0] - cmath.exp(1j * math.pi * s / 2)) < 1e-14
    p0 = jet_pow_complex(jet_variable(0.7 + 0.9j, 3), 0.0)
    close(p0, Jet(0.7 + 0.9j, (1, 0, 0, 0)), tol=1e-14)
    p1 = jet_pow_complex(jet_variable(1j, 2), 1.0)
    assert abs(p1.coeffs[1] - 1) < 1e-14


def test_pow_s1_identity_random(rng):
    for _ in range(10):
        base = complex(rng.uniform(-2, 2), rng.uniform(0.3, 2))
        coeffs = rng.uniform(-1, 1, 6) + 1j * rng.uniform(-1, 1, 6)
        coeffs[0] = 1.5 + 1j * rng.uniform(0.3, 1.0)
        a = Jet(base, tuple(coeffs))
        close(jet_pow_complex(a, 1.0), a)


def test_jet_from_poly_examples():
    j = jet_from_poly(Polynomial((1, 0, 1)), 1j, 2)
    assert j.coeffs == (0, 2j, 1)
    j = jet_from_poly(Polynomial((0, 1)), 0j, 3)
    assert j.coeffs == (0, 1, 0, 0)
    j = jet_from_poly(Polynomial((1, 0, 0, 0, 1)), cmath.exp(1j * math.pi / 4), 2)
    assert abs(j.coeffs[0]) < 1e-15


def _cauchy_coefficient(g, z0, k, radius=0.4, npts=1024):
    """Independent trapezoid evaluation of the Cauchy coefficient integral."""
    theta = np.linspace(0.0, 2.0 * np.pi, npts, endpoint=False)
    zs = z0 + radius * np.exp(1j * theta)
    vals = np.array([g(z) for z in zs])
    return (vals * np.exp(-1j * k * theta)).mean() / radius**k


def test_jet_coefficients_match_cauchy_oracle():
    z0 = 0.4 + 1.3j
    order = 5

    def g(z):
        return cmath.exp(0.7j * z) * z**0.3 * cmath.log(z) / (z * z + 3)

    zvar = jet_variable(z0, order)
    jet = jet_mul(
        jet_mul(
            jet_exp(jet_scale(zvar, 0.7j)),
            jet_pow_complex(zvar, 0.3),
        ),
        jet_mul(jet_log(zvar), jet_reciprocal(jet_from_poly(Polynomial((3, 0, 1)), z0, order))),
    )
    for k in range(order + 1):
        oracle = _cauchy_coefficient(g, z0, k)
        assert abs(jet.coeffs[k] - oracle) <= 1e-8 * (1 + abs(oracle))

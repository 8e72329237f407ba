import cmath
import math

import pytest

from ramq.errors import DegreeGapError, RealAxisPole
from ramq.polyrat import (
    Parity,
    Polynomial,
    RationalFunction,
    classify_parity,
    degree_gap,
    find_roots,
    poly_eval,
    poly_mul,
    upper_half_poles,
)


def test_poly_eval_examples():
    p = Polynomial((1, 0, 1))  # z^2 + 1
    assert poly_eval(p, 1j) == 0
    assert poly_eval(p, 0) == 1
    q = Polynomial((1, 0, 0, 0, 1))  # z^4 + 1
    assert abs(poly_eval(q, cmath.exp(1j * math.pi / 4))) < 1e-15


def test_degree_and_zero_trimming():
    assert Polynomial((1, 2, 0, 0)).degree == 1
    assert Polynomial((0,)).degree == -1
    assert Polynomial((0, 0)).is_zero


def test_find_roots_simple_pair():
    roots = find_roots(Polynomial((1, 0, 1)))
    assert len(roots) == 2
    locs = sorted((r for r, _ in roots), key=lambda z: z.imag)
    assert abs(locs[0] + 1j) < 1e-12 and abs(locs[1] - 1j) < 1e-12
    assert all(m == 1 for _, m in roots)


def test_find_roots_double_pair_clusters():
    # (z^2+1)^2 expanded: double roots at +-i must merge via clustering
    p = poly_mul(Polynomial((1, 0, 1)), Polynomial((1, 0, 1)))
    roots = find_roots(p)
    assert sorted(m for _, m in roots) == [2, 2]
    for loc, _ in roots:
        assert abs(abs(loc) - 1.0) < 1e-6 and abs(loc.real) < 1e-6


def test_find_roots_eighth_roots_of_minus_one():
    roots = find_roots(Polynomial((1, 0, 0, 0, 1)))
    assert len(roots) == 4
    expected = [cmath.exp(1j * math.pi * (2 * k + 1) / 4) for k in range(4)]
    for loc, mult in roots:
        assert mult == 1
        assert min(abs(loc - e) for e in expected) < 1e-12


def test_find_roots_residual_bound_random(rng):
    # |p(root)| <= 10 * eps_root * max|coeff| on random unit-disc coefficients
    for _ in range(40):
        deg = int(rng.integers(2, 13))
        coeffs = rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1)
        while abs(coeffs[-1]) < 0.3:
            coeffs[-1] = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        p = Polynomial(tuple(coeffs))
        bound = 10 * 1e-11 * max(abs(c) for c in p.coeffs)
        for loc, _ in find_roots(p):
            assert abs(poly_eval(p, loc)) <= bound


def test_find_roots_reconstruction(rng):
    # product of (z - r_k)^m_k from the output matches p coefficient-wise
    for _ in range(25):
        deg = int(rng.integers(2, 9))
        coeffs = rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1)
        while abs(coeffs[-1]) < 0.3:
            coeffs[-1] = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        p = Polynomial(tuple(coeffs))
        rebuilt = Polynomial((1,))
        for loc, mult in find_roots(p):
            for _ in range(mult):
                rebuilt = poly_mul(rebuilt, Polynomial((-loc, 1)))
        lead = p.coeffs[-1]
        scale = max(abs(c) for c in p.coeffs)
        for a, b in zip(p.coeffs, rebuilt.coeffs):
            assert abs(a - lead * b) <= 1e-8 * scale


def test_classify_parity_examples():
    even = RationalFunction(Polynomial((1,)), Polynomial((1, 0, 1)))
    odd = RationalFunction(Polynomial((0, 1)), Polynomial((1, 0, 1)))
    neither = RationalFunction(Polynomial((1, 1)), Polynomial((4, 0, 1)))
    assert classify_parity(even) is Parity.EVEN
    assert classify_parity(odd) is Parity.ODD
    assert classify_parity(neither) is Parity.NEITHER


def test_parity_shared_factor():
    # x(x^2+1)/(x^2+1)^2 == x/(x^2+1): parity sees through the shared factor
    num = poly_mul(Polynomial((0, 1)), Polynomial((1, 0, 1)))
    den = poly_mul(Polynomial((1, 0, 1)), Polynomial((1, 0, 1)))
    f = RationalFunction(num, den)
    assert classify_parity(f) is Parity.ODD


def test_parity_matches_sampled_values(rng):
    even = RationalFunction(Polynomial((2, 0, 0.5)), Polynomial((1, 0, 3, 0, 1)))
    odd = RationalFunction(Polynomial((0, 1.5, 0, 0.25)), Polynomial((2, 0, 1, 0, 1, 0, 1)))
    assert classify_parity(even) is Parity.EVEN
    assert classify_parity(odd) is Parity.ODD
    xs = rng.uniform(0.1, 3.0, 32)
    for x in xs:
        assert even(-x) == pytest.approx(even(x), rel=1e-12)
        assert odd(-x) == pytest.approx(-odd(x), rel=1e-12)


def test_upper_half_poles_examples(quartic_kernel):
    f = RationalFunction(Polynomial((1,)), Polynomial((1, 0, 1)))
    [pole] = upper_half_poles(f)
    assert abs(pole.location - 1j) < 1e-12 and pole.multiplicity == 1

    f3 = RationalFunction.from_factors(Polynomial((1,)), ((Polynomial((1, 0, 1)), 3),))
    [pole] = upper_half_poles(f3)
    assert abs(pole.location - 1j) < 1e-12 and pole.multiplicity == 3

    quartic_poles = upper_half_poles(quartic_kernel)
    assert len(quartic_poles) == 2
    expected = [cmath.exp(1j * math.pi / 4), cmath.exp(3j * math.pi / 4)]
    for pole in quartic_poles:
        assert min(abs(pole.location - e) for e in expected) < 1e-12


def test_upper_poles_with_conjugates_cover_denominator(quartic_kernel):
    for f in (quartic_kernel, RationalFunction(Polynomial((1,)), Polynomial((2, 0, 3, 0, 1)))):
        upper = upper_half_poles(f)
        combined = []
        for pole in upper:
            combined.append((pole.location, pole.multiplicity))
            combined.append((pole.location.conjugate(), pole.multiplicity))
        assert sum(m for _, m in combined) == f.den.degree
        for loc, _ in combined:
            assert abs(poly_eval(f.den, loc)) < 1e-9 * max(abs(c) for c in f.den.coeffs)


def test_degree_gap_examples():
    assert degree_gap(RationalFunction(Polynomial((1,)), Polynomial((1, 0, 1)))) == 2
    assert degree_gap(RationalFunction(Polynomial((0, 1)), Polynomial((1, 0, 1)))) == 1
    f2 = RationalFunction.from_factors(Polynomial((1,)), ((Polynomial((1, 0, 1)), 2),))
    assert degree_gap(f2) == 4


def test_real_axis_pole_rejected():
    with pytest.raises(RealAxisPole):
        RationalFunction(Polynomial((1,)), Polynomial((-1, 0, 1)))  # poles +-1
    with pytest.raises(RealAxisPole):
        RationalFunction(Polynomial((1,)), Polynomial((0, 1, 0, 1)))  # pole at 0


def test_degree_gap_enforced():
    with pytest.raises(DegreeGapError):
        RationalFunction(Polynomial((0, 0, 1)), Polynomial((1, 0, 1)))


def test_factored_construction_merges_repeated_bases():
    f = RationalFunction.from_factors(
        Polynomial((1,)),
        ((Polynomial((1, 0, 1)), 2), (Polynomial((1, 0, 1)), 1)),
    )
    [pole] = upper_half_poles(f)
    assert pole.multiplicity == 3
    assert f.den.degree == 6

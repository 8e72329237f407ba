"""Residues of e^{inz} f(z) z^s log^m z at upper half-plane poles.

residue_at builds the analytic factor alpha(z) = integrand * (z - z0)^mult as
a jet about the pole and reads off the coefficient of (z - z0)^(mult-1).  The
jet order carries a guard of two extra coefficients so accidental cancellation
in the leading ones is visible.  contour_oracle integrates the raw integrand
around a small circle with the trapezoid rule (spectrally accurate for
analytic integrands) as an independent check on the jet path.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import PoleOrderMismatch, RadiusTooLarge
from .jets import (
    Jet,
    branch_log,
    jet_exp,
    jet_from_poly,
    jet_log,
    jet_mul,
    jet_pow_complex,
    jet_reciprocal,
    jet_variable,
)
from .polyrat import Pole, RationalFunction, upper_half_poles

GUARD_ORDER = 2
ORACLE_EPS = 1e-12


@dataclass(frozen=True)
class WeightParams:
    """Weight e^{inz} z^s log^m z attached to the rational function."""

    n: float
    s: complex = 0j
    m: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("oscillation frequency n must be >= 0")
        if self.m < 0 or int(self.m) != self.m:
            raise ValueError("log power m must be a nonnegative integer")


def integrand_value(f: RationalFunction, w: WeightParams, z: complex) -> complex:
    """e^{inz} f(z) z^s log^m z at a point off the branch cut."""
    val = cmath.exp(1j * w.n * z) * f(z)
    if w.s != 0:
        val *= cmath.exp(w.s * branch_log(z))
    if w.m:
        val *= branch_log(z) ** w.m
    return val


def residue_at(f: RationalFunction, pole: Pole, w: WeightParams) -> complex:
    """Residue of the weighted integrand at one upper half-plane pole."""
    z0 = pole.location
    mult = pole.multiplicity
    order = mult - 1 + GUARD_ORDER

    den_jet = jet_from_poly(f.den, z0, order + mult)
    h = den_jet.coeffs[mult:]
    scale = max(abs(c) for c in den_jet.coeffs) or 1.0
    if abs(h[0]) <= 1e-10 * scale:
        raise PoleOrderMismatch(
            f"den/(z-z0)^{mult} has vanishing constant term at z0={z0}"
        )

    alpha = jet_mul(jet_from_poly(f.num, z0, order), jet_reciprocal(Jet(z0, h)))
    if w.n != 0:
        exparg = Jet(z0, (1j * w.n * z0, 1j * w.n) + (0j,) * (order - 1))
        alpha = jet_mul(alpha, jet_exp(exparg))
    zvar = jet_variable(z0, order)
    if w.s != 0:
        alpha = jet_mul(alpha, jet_pow_complex(zvar, w.s))
    if w.m:
        logz = jet_log(zvar)
        for _ in range(w.m):
            alpha = jet_mul(alpha, logz)
    return alpha.coeffs[mult - 1]


def residue_sum_S(f: RationalFunction, w: WeightParams) -> complex:
    """2*pi*i times the sum of residues over the upper half-plane poles.

    Poles are visited in (imag, real)-sorted order so the sum is bit-stable
    regardless of how individual residues were scheduled.
    """
    total = 0j
    for pole in upper_half_poles(f):
        total += residue_at(f, pole, w)
    return 2j * math.pi * total


def default_oracle_radius(f: RationalFunction, pole: Pole) -> float:
    """Half the distance to the nearest other pole, capped at Im(z0)/2."""
    z0 = pole.location
    r = 0.5 * z0.imag
    for other in f.poles:
        if other.location == z0:
            continue
        r = min(r, 0.5 * abs(other.location - z0))
    return r


def contour_oracle(
    f: RationalFunction,
    pole: Pole,
    w: WeightParams,
    radius: float | None = None,
    eps: float = ORACLE_EPS,
) -> complex:
    """(1/2*pi*i) * circle integral of the integrand around one pole.

    N-point trapezoid rule on the parametrized circle, N doubling from 16
    until two successive values agree to `eps`.  Raises RadiusTooLarge if
    another pole lies within 2*radius of the circle center or if the circle
    would leave the upper half-plane.
    """
    z0 = pole.location
    if radius is None:
        radius = default_oracle_radius(f, pole)
    if radius <= 0:
        raise ValueError("radius must be positive")
    if radius >= 0.95 * z0.imag:
        raise RadiusTooLarge(
            f"radius {radius:g} reaches the real axis from Im(z0)={z0.imag:g}"
        )
    for other in f.poles:
        if other.location != z0 and abs(other.location - z0) < 2.0 * radius:
            raise RadiusTooLarge(
                f"pole at {other.location} within 2*radius of {z0}"
            )

    prev = None
    n_points = 16
    while n_points <= 1 << 17:
        acc = 0j
        for k in range(n_points):
            phase = cmath.exp(2j * math.pi * k / n_points)
            acc += integrand_value(f, w, z0 + radius * phase) * phase
        val = acc * radius / n_points
        if prev is not None and abs(val - prev) <= eps * (1.0 + abs(val)):
            return val
        prev = val
        n_points *= 2
    return prev

"""Polynomials and rational functions over the complex numbers.

Provides Horner evaluation, exact parity classification, simultaneous-iteration
(Aberth-Ehrlich) root finding with multiplicity clustering, and extraction of
upper half-plane poles.  Everything here is an immutable value; all operations
are pure functions, safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DegreeGapError, NonConvergence, RealAxisPole

# Residual target for the root finder, relative to max|coeff|.
EPS_ROOT = 1e-11
# Roots closer than this are merged into one root with summed multiplicity.
CLUSTER_RADIUS = max(1e-7, 1e3 * EPS_ROOT)
# Denominator roots with |Im| below this are rejected as real-axis poles.
TAU_REAL = 1e-9

_MAX_SWEEPS = 120


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients in ascending degree order."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Sequence[complex]):
        cs = [complex(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0j]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return -1 if self.is_zero else len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        return poly_eval(self, z)

    def eval_array(self, x: np.ndarray) -> np.ndarray:
        """Horner evaluation on a numpy array."""
        real = self._dtype() is float
        cs = [c.real if real else c for c in self.coeffs]
        acc = np.full_like(x, cs[-1], dtype=self._dtype())
        for c in reversed(cs[:-1]):
            acc = acc * x + c
        return acc

    def _dtype(self):
        return complex if any(c.imag != 0 for c in self.coeffs) else float

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            return Polynomial((0j,))
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def negate_argument(self) -> "Polynomial":
        """p(-z), as a new polynomial."""
        return Polynomial(tuple((-1) ** k * c for k, c in enumerate(self.coeffs)))

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(c.imag) <= tol for c in self.coeffs)

    def __str__(self) -> str:
        return format_poly(self)


def poly_eval(p: Polynomial, z: complex) -> complex:
    """Evaluate p at a complex point by the Horner recurrence."""
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero or q.is_zero:
        return Polynomial((0j,))
    out = np.convolve(np.asarray(p.coeffs), np.asarray(q.coeffs))
    return Polynomial(tuple(out))


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("nonnegative exponent required")
    out = Polynomial((1,))
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def format_poly(p: Polynomial) -> str:
    """Render in the text grammar, e.g. '1 + 2*x + x^2'."""

    def fmt_c(c: complex) -> str:
        if c.imag == 0:
            r = c.real
            return str(int(r)) if r == int(r) else repr(r)
        return f"({c.real:g}{c.imag:+g}i)"

    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0 and p.degree >= 0 and not (p.is_zero and k == 0):
            continue
        if k == 0:
            parts.append(fmt_c(c))
        else:
            xk = "x" if k == 1 else f"x^{k}"
            parts.append(xk if c == 1 else f"{fmt_c(c)}*{xk}")
    return " + ".join(parts) if parts else "0"


def find_roots(
    p: Polynomial,
    eps_root: float = EPS_ROOT,
    cluster_radius: float = CLUSTER_RADIUS,
    max_sweeps: int = _MAX_SWEEPS,
) -> list[tuple[complex, int]]:
    """All roots of p with multiplicities, by simultaneous iteration.

    Aberth-Ehrlich sweeps from perturbed-circle starting points, run until the
    corrections stagnate, then nearby approximations (within cluster_radius,
    transitively) are merged into a single root at their centroid with summed
    multiplicity.  Raises NonConvergence if some approximation still has
    |p(z)| > eps_root * max|coeff| after max_sweeps sweeps.

    Double-precision localization of a multiplicity-mu root is limited to
    about (machine eps)^(1/mu); the default cluster radius therefore merges
    double roots reliably but not triples.  Build higher multiplicities via
    RationalFunction.from_factors, which assigns exponents exactly.
    """
    d = p.degree
    if d < 1:
        raise ValueError("find_roots requires a nonconstant polynomial")
    if d == 1:
        return [(-p.coeffs[0] / p.coeffs[1], 1)]

    a = np.asarray(p.coeffs, dtype=complex)
    a = a / a[-1]
    da = a[1:] * np.arange(1, d + 1)
    coeff_scale = max(abs(c) for c in a)

    # Perturbed circle: radius from the Cauchy bound, irrational angular
    # offset and mild radial jitter to break symmetry with the root set.
    radius = 1.0 + float(np.max(np.abs(a[:-1])))
    k = np.arange(d)
    theta = 2.0 * np.pi * k / d + 0.4
    rk = radius * (0.65 + 0.2 * ((k * 0.6180339887498949) % 1.0))
    z = rk * np.exp(1j * theta)

    def horner(coeffs, pts):
        acc = np.full_like(pts, coeffs[-1])
        for c in coeffs[-2::-1]:
            acc = acc * pts + c
        return acc

    for _ in range(max_sweeps):
        pz = horner(a, z)
        dpz = horner(da, z)
        dead = np.abs(dpz) == 0
        if np.any(dead):
            z = np.where(dead, z * (1 + 1e-8) + 1e-8, z)
            continue
        w = pz / dpz
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        denom = 1.0 - w * inv.sum(axis=1)
        step = np.where(np.abs(denom) > 1e-300, w / denom, w)
        z = z - step
        if np.max(np.abs(step)) <= 1e-14 * (1.0 + np.max(np.abs(z))):
            break

    if np.max(np.abs(horner(a, z))) > eps_root * coeff_scale:
        raise NonConvergence(
            f"root residual above {eps_root:g}*max|coeff| after {max_sweeps} sweeps"
        )

    # Greedy transitive clustering.
    order = sorted(range(d), key=lambda i: (z[i].real, z[i].imag))
    clusters: list[list[complex]] = []
    for i in order:
        for cl in clusters:
            if any(abs(z[i] - w0) <= cluster_radius for w0 in cl):
                cl.append(z[i])
                break
        else:
            clusters.append([z[i]])
    out = [(sum(cl) / len(cl), len(cl)) for cl in clusters]
    out.sort(key=lambda rm: (rm[0].imag, rm[0].real))
    return out


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    NEITHER = "neither"


@dataclass(frozen=True)
class Pole:
    """An isolated singularity location with its multiplicity."""

    location: complex
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")


@dataclass(frozen=True)
class RationalFunction:
    """num/den with den root structure resolved at construction.

    Construction rejects denominators with roots within TAU_REAL of the real
    axis and requires deg(den) >= deg(num) + 1.  When built from a factored
    denominator (from_factors) the exponents give pole multiplicities exactly,
    bypassing numerical root clustering; that is the preferred path whenever a
    repeated factor is intended.
    """

    num: Polynomial
    den: Polynomial
    den_factors: tuple[tuple[Polynomial, int], ...] | None = field(
        default=None, compare=False
    )
    poles: tuple[Pole, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if degree_gap(self) < 1:
            raise DegreeGapError(
                "deg(den) must exceed deg(num) by at least 1, got gap "
                f"{degree_gap(self)}"
            )
        if self.den_factors is None:
            roots = find_roots(self.den)
        else:
            merged: list[tuple[complex, int]] = []
            for base, exp in self.den_factors:
                for loc, mult in find_roots(base):
                    for i, (l0, m0) in enumerate(merged):
                        if abs(loc - l0) <= CLUSTER_RADIUS:
                            merged[i] = (l0, m0 + mult * exp)
                            break
                    else:
                        merged.append((loc, mult * exp))
            merged.sort(key=lambda rm: (rm[0].imag, rm[0].real))
            roots = merged
        for loc, _ in roots:
            if abs(loc.imag) < TAU_REAL:
                raise RealAxisPole(f"denominator root at {loc} is on the real axis")
        object.__setattr__(
            self, "poles", tuple(Pole(loc, mult) for loc, mult in roots)
        )

    @classmethod
    def from_factors(
        cls, num: Polynomial, factors: Sequence[tuple[Polynomial, int]]
    ) -> "RationalFunction":
        """Build num / prod(base^exp) keeping the exact factor structure."""
        den = Polynomial((1,))
        for base, exp in factors:
            den = poly_mul(den, poly_pow(base, exp))
        return cls(num, den, den_factors=tuple((b, int(e)) for b, e in factors))

    def __call__(self, z: complex) -> complex:
        return poly_eval(self.num, z) / self._den_at(z)

    def _den_at(self, z: complex) -> complex:
        if self.den_factors is None:
            return poly_eval(self.den, z)
        out = 1.0 + 0j
        for base, exp in self.den_factors:
            out *= poly_eval(base, z) ** exp
        return out

    def den_values(self, x: np.ndarray) -> np.ndarray:
        if self.den_factors is None:
            return self.den.eval_array(x)
        den = np.ones_like(x, dtype=self.den._dtype())
        for base, exp in self.den_factors:
            den = den * base.eval_array(x) ** exp
        return den

    def eval_array(self, x: np.ndarray) -> np.ndarray:
        return self.num.eval_array(x) / self.den_values(x)

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def __str__(self) -> str:
        if self.den_factors is not None:
            parts = []
            for base, exp in self.den_factors:
                s = f"({format_poly(base)})"
                parts.append(s if exp == 1 else f"{s}^{exp}")
            den = "".join(parts)
        else:
            den = f"({format_poly(self.den)})"
        num = format_poly(self.num)
        if "+" in num or "*" in num:
            num = f"({num})"
        return f"{num}/{den}"


def degree_gap(f: RationalFunction) -> int:
    """deg(den) - deg(num); callers gate theorem preconditions on this."""
    return f.den.degree - f.num.degree


def classify_parity(f: RationalFunction) -> Parity:
    """Exact-coefficient parity of f as a rational function.

    Cross-multiplied test: f(-z) == +-f(z) iff num(-z)*den(z) == +-num(z)*den(-z),
    which is insensitive to shared parity factors of num and den.
    """
    lhs = poly_mul(f.num.negate_argument(), f.den)
    rhs = poly_mul(f.num, f.den.negate_argument())
    if lhs.coeffs == rhs.coeffs:
        return Parity.EVEN
    neg = tuple(-c for c in rhs.coeffs)
    if lhs.coeffs == neg:
        return Parity.ODD
    return Parity.NEITHER


def upper_half_poles(f: RationalFunction) -> list[Pole]:
    """Poles of f with strictly positive imaginary part, with multiplicity."""
    out = []
    for pole in f.poles:
        if abs(pole.location.imag) < TAU_REAL:
            raise RealAxisPole(f"pole at {pole.location} is on the real axis")
        if pole.location.imag > 0:
            out.append(pole)
    out.sort(key=lambda p: (p.location.imag, p.location.real))
    return out

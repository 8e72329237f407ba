"""Truncated Taylor-series (jet) arithmetic about a complex base point.

A jet stores the coefficients a_0..a_K of an analytic function expanded in
powers of (z - z0).  Residues at a pole of any multiplicity then reduce to a
coefficient lookup in a product of jets.  The logarithm uses the branch
-pi/2 < arg z <= 3pi/2, which agrees with the principal branch everywhere in
the open upper half-plane (the only region residues are taken in).

Coefficients are plain Python complex; the recurrences below only use
+,-,*,/ on them plus exp/log/atan2 at the seed, so a wider-precision scalar
could be substituted behind the same arithmetic without touching callers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BaseMismatch, BranchCut, DivisionByZeroJet
from .polyrat import Polynomial

EPS_DIV = 1e-12   # |a_0| at or below this is treated as a zero constant term
EPS_ARG = 1e-9    # angular distance to the cut ray arg = -pi/2 that is rejected


@dataclass(frozen=True)
class Jet:
    """Taylor coefficients a_0..a_K of an analytic function about `base`."""

    base: complex
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def jet_const(c: complex, base: complex, order: int) -> Jet:
    return Jet(base, (complex(c),) + (0j,) * order)


def jet_variable(base: complex, order: int) -> Jet:
    """The identity function z, expanded about `base`."""
    if order == 0:
        return Jet(base, (complex(base),))
    return Jet(base, (complex(base), 1 + 0j) + (0j,) * (order - 1))


def _check(a: Jet, b: Jet) -> None:
    if a.base != b.base or a.order != b.order:
        raise BaseMismatch(
            f"jet bases/orders differ: ({a.base}, K={a.order}) vs "
            f"({b.base}, K={b.order})"
        )


def jet_add(a: Jet, b: Jet) -> Jet:
    _check(a, b)
    return Jet(a.base, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def jet_sub(a: Jet, b: Jet) -> Jet:
    _check(a, b)
    return Jet(a.base, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def jet_scale(a: Jet, c: complex) -> Jet:
    return Jet(a.base, tuple(c * x for x in a.coeffs))


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Cauchy product truncated at the common order."""
    _check(a, b)
    n = a.order + 1
    out = [0j] * n
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * b.coeffs[j]
    return Jet(a.base, tuple(out))


def jet_reciprocal(a: Jet) -> Jet:
    """Jet b with a*b = 1 + O(x^(K+1)); requires a nonzero constant term."""
    if abs(a.coeffs[0]) <= EPS_DIV:
        raise DivisionByZeroJet(f"constant term {a.coeffs[0]} too small")
    a0 = a.coeffs[0]
    out = [1.0 / a0]
    for k in range(1, a.order + 1):
        s = 0j
        for j in range(1, k + 1):
            s += a.coeffs[j] * out[k - j]
        out.append(-s / a0)
    return Jet(a.base, tuple(out))


def jet_exp(a: Jet) -> Jet:
    """exp of a jet via the recurrence (exp a)' = a' * exp a."""
    out = [cmath.exp(a.coeffs[0])]
    for k in range(1, a.order + 1):
        s = 0j
        for j in range(1, k + 1):
            s += j * a.coeffs[j] * out[k - j]
        out.append(s / k)
    return Jet(a.base, tuple(out))


def branch_arg(w: complex) -> float:
    """arg w in the branch (-pi/2, 3pi/2]; rejects points on the cut ray."""
    ph = math.atan2(w.imag, w.real)
    if abs(ph + 0.5 * math.pi) < EPS_ARG:
        raise BranchCut(f"argument of {w} lies on the cut ray arg = -pi/2")
    if ph <= -0.5 * math.pi:
        ph += 2.0 * math.pi
    return ph


def branch_log(w: complex) -> complex:
    """log w with -pi/2 < arg w <= 3pi/2."""
    return complex(math.log(abs(w)), branch_arg(w))


def jet_log(a: Jet) -> Jet:
    """log of a jet via (log a)' = a'/a, seeded on the branch above."""
    a0 = a.coeffs[0]
    if abs(a0) <= EPS_DIV:
        raise DivisionByZeroJet(f"constant term {a0} too small for log")
    out = [branch_log(a0)]
    for k in range(1, a.order + 1):
        s = 0j
        for j in range(1, k):
            s += j * out[j] * a.coeffs[k - j]
        out.append((a.coeffs[k] - s / k) / a0)
    return Jet(a.base, tuple(out))


def jet_pow_complex(a: Jet, s: complex) -> Jet:
    """a^s = exp(s * log a) on the same branch as jet_log."""
    return jet_exp(jet_scale(jet_log(a), s))


def jet_from_poly(p: Polynomial, z0: complex, order: int) -> Jet:
    """Exact Taylor shift of p to base z0, truncated at `order`.

    Iterated synthetic division by (z - z0); the k-th remainder is the
    coefficient of (z - z0)^k.
    """
    work = list(reversed(p.coeffs))
    out: list[complex] = []
    for _ in range(order + 1):
        if not work:
            out.append(0j)
            continue
        acc = work[0]
        quotient = [acc]
        for c in work[1:]:
            acc = acc * z0 + c
            quotient.append(acc)
        out.append(quotient.pop())
        work = quotient
    return Jet(complex(z0), tuple(out))

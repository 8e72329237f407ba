"""Closed-form evaluations and linear relations among the I_m, J_m integrals.

I_m and J_m denote the cosine and sine integrals of f(x) log^m x over (0, inf)
at frequency n, optionally with an algebraic power x^s and a phase-shifted
trig argument nx - (pi/2)*phase.  Every relation is represented as a Relation:
a finite list of (coefficient, IntegralSpec) terms equal to a closed-form
right-hand side, checkable numerically by the quadrature module.

Relations are normalized so the coefficient of the highest-m term equals one
(ties broken cosine-first), which makes relations built through different
routes structurally comparable term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache

from .errors import DomainError, DegreeGapError, ParityError
from .polyrat import (
    Parity,
    Polynomial,
    RationalFunction,
    classify_parity,
    degree_gap,
)
from .residues import WeightParams, residue_sum_S


class TrigKind(Enum):
    COS = "cos"
    SIN = "sin"


def _valuation_at_zero(p: Polynomial) -> int:
    for k, c in enumerate(p.coeffs):
        if c != 0:
            return k
    return 0


@dataclass(frozen=True)
class IntegralSpec:
    """One integral of the family: f(x) * trig(nx - (pi/2)*phase) * x^s * log^m x.

    Construction enforces integrability at the origin (s plus the order of
    vanishing of the numerator must exceed -1) and the Dirichlet-test tail
    gate: with oscillation (n > 0) the envelope exponent s + deg(num) -
    deg(den) must be negative; without it (n = 0) it must be below -1.
    """

    f: RationalFunction
    kind: TrigKind
    n: float
    m: int = 0
    s: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("frequency n must be >= 0")
        if self.m < 0 or int(self.m) != self.m:
            raise DomainError("log power m must be a nonnegative integer")
        if self.phase != 0 and self.m != 0:
            raise DomainError("phase shifts are only defined for m = 0")
        if not self.f.is_real():
            raise DomainError("integration requires real coefficients")
        sigma0 = self.s + _valuation_at_zero(self.f.num)
        if sigma0 <= -1:
            raise DomainError(
                f"integrand ~ x^{sigma0:g} at the origin is not integrable"
            )
        alpha = self.s + self.f.num.degree - self.f.den.degree
        if self.n > 0:
            if alpha >= 0:
                raise DomainError(
                    f"oscillatory tail envelope x^{alpha:g} does not decay"
                )
        elif alpha >= -1:
            raise DomainError(
                f"non-oscillatory tail x^{alpha:g} diverges; need n > 0"
            )

    def describe(self) -> str:
        bits = [f"{self.f}", self.kind.value, f"n={self.n:g}"]
        if self.m:
            bits.append(f"m={self.m}")
        if self.s:
            bits.append(f"s={self.s:g}")
        if self.phase:
            bits.append(f"phase={self.phase:g}")
        return " ".join(bits)


@dataclass(frozen=True)
class Relation:
    """sum over terms of coeff * integral == rhs."""

    terms: tuple[tuple[complex, IntegralSpec], ...]
    rhs: complex
    provenance: str

    def term_map(self) -> dict[IntegralSpec, complex]:
        out: dict[IntegralSpec, complex] = {}
        for c, spec in self.terms:
            out[spec] = out.get(spec, 0j) + c
        return out

    def normalized(self) -> "Relation":
        """Scale so the highest-m term (cosine first on ties) has coefficient 1.

        Terms whose coefficient is negligible next to the largest one are not
        eligible to lead; dividing by a degenerate ~1e-16 coefficient (e.g.
        sin(pi*s) at integer s) would blow the relation up.
        """
        live = [(c, sp) for c, sp in self.terms if c != 0]
        if not live:
            return replace(self, terms=())
        live.sort(key=_term_order)
        floor = 1e-9 * max(abs(c) for c, _ in live)
        lead = next(c for c, _ in live if abs(c) >= floor)
        return replace(
            self,
            terms=tuple((c / lead, sp) for c, sp in live),
            rhs=self.rhs / lead,
        )

    def eliminate(self, spec: IntegralSpec, value: complex) -> "Relation":
        """Fold a term with a known value into the right-hand side."""
        kept = []
        rhs = self.rhs
        for c, sp in self.terms:
            if sp == spec:
                rhs -= c * value
            else:
                kept.append((c, sp))
        return replace(self, terms=tuple(kept), rhs=rhs)


def _term_order(term: tuple[complex, IntegralSpec]):
    _, sp = term
    return (-sp.m, 0 if sp.kind is TrigKind.COS else 1, sp.s, sp.phase)


@lru_cache(maxsize=None)
def even_kernel(r: int) -> RationalFunction:
    """1/(x^2+1)^(r+1), built factored so pole multiplicities are exact."""
    return RationalFunction.from_factors(
        Polynomial((1,)), ((Polynomial((1, 0, 1)), r + 1),)
    )


@lru_cache(maxsize=None)
def odd_kernel(r: int) -> RationalFunction:
    """x/(x^2+1)^(r+1)."""
    return RationalFunction.from_factors(
        Polynomial((0, 1)), ((Polynomial((1, 0, 1)), r + 1),)
    )


def gen_binom(s: float, j: int) -> float:
    """Generalized binomial C(s, j) by the falling-factorial product."""
    out = 1.0
    for i in range(j):
        out *= (s - i) / (j - i)
    return out


def _check_r_n(r: int, n: float) -> None:
    if r < 0 or int(r) != r:
        raise DomainError("r must be a nonnegative integer")
    if n < 0:
        raise DomainError("n must be >= 0")


def closed_cos_pow(r: int, n: float, s: float) -> float:
    """Closed form of the cos(nx - pi*s/2) x^s / (x^2+1)^(r+1) integral.

    (pi/2) e^-n  sum_k 2^-(r+k) C(r+k,k) sum_j (-1)^j C(s,j) n^(r-k-j)/(r-k-j)!
    valid for -1 < s < 2(r+1) and n >= 0.
    """
    _check_r_n(r, n)
    if not -1.0 < s < 2.0 * (r + 1):
        raise DomainError(f"s={s:g} outside (-1, {2 * (r + 1)})")
    total = 0.0
    for k in range(r + 1):
        inner = 0.0
        for j in range(r - k + 1):
            p = r - k - j
            inner += (-1.0) ** j * gen_binom(s, j) * n**p / math.factorial(p)
        total += inner * math.comb(r + k, k) / 2.0 ** (r + k)
    return 0.5 * math.pi * math.exp(-n) * total


def closed_x_sin_pow(r: int, n: float, s: float) -> float:
    """Closed form of the x sin(nx - pi*s/2) x^s / (x^2+1)^(r+1) integral.

    Same double sum with C(s+1, j); valid for -2 < s < 2r + 1.  Terms whose
    factorial argument would be negative are zero.

    At n = 0 (and s = 0) the integrand vanishes identically, so the value is
    exactly 0.  Note the sum itself is the n -> 0+ limit, which at r = 0
    equals pi/2: the sine integral is only conditionally convergent and is
    discontinuous at n = 0.
    """
    _check_r_n(r, n)
    if not -2.0 < s < 2.0 * r + 1.0:
        raise DomainError(f"s={s:g} outside (-2, {2 * r + 1})")
    if n == 0 and s == 0:
        return 0.0
    total = 0.0
    for k in range(r + 1):
        inner = 0.0
        for j in range(r - k + 1):
            p = r - k - j
            inner += (-1.0) ** j * gen_binom(s + 1.0, j) * n**p / math.factorial(p)
        total += inner * math.comb(r + k, k) / 2.0 ** (r + k)
    return 0.5 * math.pi * math.exp(-n) * total


def modified_bessel_k_half(r: int, n: float) -> float:
    """K_{r+1/2}(n) from its elementary finite sum (integer r >= 0)."""
    _check_r_n(r, n)
    if n <= 0:
        raise DomainError("n must be positive")
    acc = 0.0
    for k in range(r + 1):
        acc += math.factorial(r + k) / (
            math.factorial(k) * math.factorial(r - k) * (2.0 * n) ** k
        )
    return math.sqrt(0.5 * math.pi / n) * math.exp(-n) * acc


def bessel_k_half(r: int, n: float) -> float:
    """(n/2)^(r+1/2) sqrt(pi)/Gamma(r+1) * K_{r+1/2}(n).

    Equals closed_cos_pow(r, n, 0); the two sides are computed through
    independent arrangements of the sum.
    """
    _check_r_n(r, n)
    if n <= 0:
        raise DomainError("n must be positive")
    return (
        (0.5 * n) ** (r + 0.5)
        * math.sqrt(math.pi)
        / math.gamma(r + 1)
        * modified_bessel_k_half(r, n)
    )


def _cos_spec(f, n, m, s=0.0, phase=0.0) -> IntegralSpec:
    return IntegralSpec(f, TrigKind.COS, n, m, s, phase)


def _sin_spec(f, n, m, s=0.0, phase=0.0) -> IntegralSpec:
    return IntegralSpec(f, TrigKind.SIN, n, m, s, phase)


def relation_S(
    f: RationalFunction, n: float, m: int
) -> tuple[Relation, Relation]:
    """Real and imaginary parts of the contour recurrence at log power m.

    The contour sum S = 2*pi*i * sum of residues of e^{inz} f(z) log^m z over
    the upper half-plane equals

        +- sum_k C(m,k)(i pi)^(m-k) (I_k - i J_k) + (I_m + i J_m),

    with + for even f and - for odd f.  Splitting into real and imaginary
    parts yields two relations with real coefficients on the I_k, J_k.
    """
    parity = classify_parity(f)
    if parity is Parity.NEITHER:
        raise ParityError("recurrence requires an even or odd rational function")
    if n <= 0:
        raise DomainError("recurrence requires n > 0")
    sign = 1.0 if parity is Parity.EVEN else -1.0

    s_value = residue_sum_S(f, WeightParams(n, 0j, m))

    coeff_i = [0j] * (m + 1)
    coeff_j = [0j] * (m + 1)
    for k in range(m + 1):
        c = sign * math.comb(m, k) * (1j * math.pi) ** (m - k)
        coeff_i[k] += c
        coeff_j[k] += -1j * c
    coeff_i[m] += 1
    coeff_j[m] += 1j

    def split(part: str) -> Relation:
        pick = (lambda c: c.real) if part == "re" else (lambda c: c.imag)
        terms = []
        for k in range(m + 1):
            ci, cj = pick(coeff_i[k]), pick(coeff_j[k])
            if ci != 0:
                terms.append((complex(ci), _cos_spec(f, n, k)))
            if cj != 0:
                terms.append((complex(cj), _sin_spec(f, n, k)))
        rhs = complex(pick(s_value))
        tag = f"{parity.value}-recurrence m={m} n={n:g} ({part})"
        return Relation(tuple(terms), rhs, tag).normalized()

    return split("re"), split("im")


def relation_theorem1(n: float) -> tuple[Relation, Relation]:
    """The two notebook entries for 1/(x^2+1): the log relation that ties
    the sine integral to the cosine-log integral, and its log^2 companion.

    Returned in normalized form:
      I_1 + (pi/2) J_0 = 0
      I_2 + pi J_1     = (pi^3/8) e^-n
    """
    if n <= 0:
        raise DomainError("n > 0 required")
    f = even_kernel(0)
    eq_log = Relation(
        ((1 + 0j, _cos_spec(f, n, 1)), (math.pi / 2, _sin_spec(f, n, 0))),
        0j,
        f"ramanujan-log n={n:g}",
    )
    eq_log2 = Relation(
        ((1 + 0j, _cos_spec(f, n, 2)), (math.pi + 0j, _sin_spec(f, n, 1))),
        complex(math.pi**3 / 8 * math.exp(-n)),
        f"ramanujan-log2 n={n:g}",
    )
    return eq_log, eq_log2


def relation_derivative_family(m: int, n: float) -> Relation:
    """m-th member of the derivative chain for 1/(x^2+1):

        0 = sum_k C(m,k) (pi/2)^k (-1)^floor(k/2) * (I_{m-k} if k even else J_{m-k})

    The bracket is read as floor(k/2), consistent with the m = 1, 2 members
    reducing to the notebook relations.
    """
    if m < 1:
        raise DomainError("m >= 1 required")
    if n <= 0:
        raise DomainError("n > 0 required")
    f = even_kernel(0)
    terms = []
    for k in range(m + 1):
        c = math.comb(m, k) * (math.pi / 2) ** k * (-1.0) ** (k // 2)
        spec = (
            _cos_spec(f, n, m - k) if k % 2 == 0 else _sin_spec(f, n, m - k)
        )
        terms.append((complex(c), spec))
    return Relation(
        tuple(terms), 0j, f"derivative-chain m={m} n={n:g}"
    ).normalized()


def relation_sin_family(n: float) -> list[Relation]:
    """Companion relations for the odd kernel x/(x^2+1):

      J_0                = (pi/2) e^-n
      J_1 - (pi/2) I_0   = 0
      J_2 - pi I_1       = (pi^3/8) e^-n
    """
    if n <= 0:
        raise DomainError("n > 0 required")
    f = odd_kernel(0)
    value = Relation(
        ((1 + 0j, _sin_spec(f, n, 0)),),
        complex(math.pi / 2 * math.exp(-n)),
        f"sine-value n={n:g}",
    )
    log1 = Relation(
        ((1 + 0j, _sin_spec(f, n, 1)), (-math.pi / 2 + 0j, _cos_spec(f, n, 0))),
        0j,
        f"sine-log n={n:g}",
    )
    log2 = Relation(
        ((1 + 0j, _sin_spec(f, n, 2)), (-math.pi + 0j, _cos_spec(f, n, 1))),
        complex(math.pi**3 / 8 * math.exp(-n)),
        f"sine-log2 n={n:g}",
    )
    return [value, log1, log2]


def relation_re_im_split(s: float, n: float) -> tuple[Relation, Relation]:
    """Real/imaginary split of the phased power identity for 1/(x^2+1):

      pi e^-n cos(pi s/2) = int (cos(nx)(1+cos pi s) + sin(nx) sin pi s) x^s/(x^2+1)
      pi e^-n sin(pi s/2) = int (cos(nx) sin pi s + sin(nx)(1-cos pi s)) x^s/(x^2+1)

    valid for s in (-1, 2).  At s = 0 the imaginary split degenerates to an
    empty relation 0 = 0.
    """
    if not -1.0 < s < 2.0:
        raise DomainError(f"s={s:g} outside (-1, 2)")
    f = even_kernel(0)
    cos_c = _cos_spec(f, n, 0, s=s)
    sin_c = _sin_spec(f, n, 0, s=s)
    re = Relation(
        (
            (complex(1.0 + math.cos(math.pi * s)), cos_c),
            (complex(math.sin(math.pi * s)), sin_c),
        ),
        complex(math.pi * math.exp(-n) * math.cos(math.pi * s / 2)),
        f"power-split-re s={s:g} n={n:g}",
    ).normalized()
    im = Relation(
        (
            (complex(math.sin(math.pi * s)), cos_c),
            (complex(1.0 - math.cos(math.pi * s)), sin_c),
        ),
        complex(math.pi * math.exp(-n) * math.sin(math.pi * s / 2)),
        f"power-split-im s={s:g} n={n:g}",
    ).normalized()
    return re, im


def relation_general_even(
    f: RationalFunction, n: float, s: float
) -> Relation:
    """Residue identity for a general even f with degree gap >= 2:

      pi i e^{-i pi s/2} * sum of upper residues of e^{inz} f(z) z^s
          = int_0^inf cos(nx - pi s/2) f(x) x^s dx
    """
    if classify_parity(f) is not Parity.EVEN:
        raise ParityError("even rational function required")
    if degree_gap(f) < 2:
        raise DegreeGapError("degree gap >= 2 required")
    s_value = residue_sum_S(f, WeightParams(n, complex(s), 0))
    rhs = 0.5 * _unit_phase(-s) * s_value
    spec = _cos_spec(f, n, 0, s=s, phase=s)
    return Relation(
        ((1 + 0j, spec),), rhs, f"even-residue s={s:g} n={n:g} f={f}"
    )


def _unit_phase(s: float) -> complex:
    """e^{i pi s / 2}."""
    return complex(math.cos(math.pi * s / 2), math.sin(math.pi * s / 2))


def _log_extension_sum(r: int, n: float) -> float:
    """sum_k 2^-(r+k) C(r+k,k) sum_{j>=1} (1/j) n^(r-k-j)/(r-k-j)!"""
    total = 0.0
    for k in range(r + 1):
        inner = 0.0
        for j in range(1, r - k + 1):
            p = r - k - j
            inner += (1.0 / j) * n**p / math.factorial(p)
        total += inner * math.comb(r + k, k) / 2.0 ** (r + k)
    return total


def relation_generalized_log(r: int, n: float) -> Relation:
    """Log relation for the even kernel at denominator power r+1 (normalized):

      I_1 + (pi/2) J_0 = -(pi/2) e^-n sum_k 2^-(r+k) C(r+k,k) sum_{j>=1} ...

    reducing to the plain notebook relation (zero right side) at r = 0.
    """
    _check_r_n(r, n)
    if n <= 0:
        raise DomainError("n > 0 required")
    f = even_kernel(r)
    rhs = -(math.pi / 2) * math.exp(-n) * _log_extension_sum(r, n)
    return Relation(
        (
            (1 + 0j, _cos_spec(f, n, 1)),
            (math.pi / 2 + 0j, _sin_spec(f, n, 0)),
        ),
        complex(rhs),
        f"log-extension r={r} n={n:g}",
    )


def _odd_closing_sum(r: int, n: float) -> float:
    """sum_k 2^-(r+k) C(r+k,k) [ n^(r-k-1)/(r-k-1)! - sum_{j>=2} n^(r-k-j)/(j(j-1)(r-k-j)!) ]

    Terms with a negative factorial argument are zero.
    """
    total = 0.0
    for k in range(r + 1):
        inner = 0.0
        if r - k - 1 >= 0:
            inner += n ** (r - k - 1) / math.factorial(r - k - 1)
        for j in range(2, r - k + 1):
            p = r - k - j
            inner -= n**p / (j * (j - 1) * math.factorial(p))
        total += inner * math.comb(r + k, k) / 2.0 ** (r + k)
    return total


def relation_eg_odd_closing(r: int, n: float) -> Relation:
    """Closing relation for the odd kernel at denominator power r+1 (normalized):

      J_1 - (pi/2) I_0 = -(pi/2) e^-n sum_k 2^-(r+k) C(r+k,k) [ ... ]

    reducing to the sine-log relation (zero right side) at r = 0.
    """
    _check_r_n(r, n)
    if n <= 0:
        raise DomainError("n > 0 required")
    f = odd_kernel(r)
    rhs = -(math.pi / 2) * math.exp(-n) * _odd_closing_sum(r, n)
    return Relation(
        (
            (1 + 0j, _sin_spec(f, n, 1)),
            (-math.pi / 2 + 0j, _cos_spec(f, n, 0)),
        ),
        complex(rhs),
        f"odd-log-closing r={r} n={n:g}",
    )

"""Numerical evaluation of the semi-infinite oscillatory integrals.

Strategy per spec value:

  * split at X0, the first trig zero at or after x = 1, so the endpoint
    behavior x^s log^m x at the origin is isolated in a finite core;
  * core [0, X0]: tanh-sinh (double-exponential) rule with doubling levels,
    which absorbs algebraic-times-log endpoint singularities;
  * tail [X0, inf) for n > 0: integrate cell by cell between consecutive trig
    zeros with a fixed 32-point Gauss-Legendre rule, then accelerate the
    alternating sequence of partial sums with a windowed Levin u transform;
  * n = 0: no oscillation, map the tail onto (0, 1] by x -> 1/t and reuse the
    tanh-sinh rule.

Cell boundaries are snapped to exact trig zeros ((k + 1/2)*pi + phase*pi/2)/n
for cosine, (k*pi + phase*pi/2)/n for sine, so no cancellation occurs across
the core/tail split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .identities import IntegralSpec, TrigKind
from .polyrat import Polynomial

_TMAX = 6.0  # tanh-sinh truncation; transformed nodes reach x/L ~ 1e-250

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(32)


@dataclass(frozen=True)
class QuadratureConfig:
    target_abs_tol: float = 1e-10
    max_core_levels: int = 10
    max_tail_cells: int = 96
    acceleration_depth: int = 12

    def __post_init__(self):
        if self.target_abs_tol <= 0:
            raise DomainError("target_abs_tol must be positive")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    core_subdivisions: int
    tail_cells_used: int
    accelerated: bool


DEFAULT_CONFIG = QuadratureConfig()


def _envelope_array(spec: IntegralSpec, x: np.ndarray) -> np.ndarray:
    """f(x) * x^s * log^m x on an array of positive abscissae.

    A numerator root of order v at the origin is folded into the power,
    f(x) x^s = (num(x)/x^v) / den(x) * x^(s+v), so x^s alone never overflows
    at the tiny abscissae of the endpoint rule (s + v > -1 by the gates).
    """
    num = spec.f.num
    v = 0
    while v < len(num.coeffs) and num.coeffs[v] == 0:
        v += 1
    if spec.s != 0 and 0 < v < len(num.coeffs):
        shifted = Polynomial(num.coeffs[v:])
        vals = shifted.eval_array(x) / spec.f.den_values(x)
        vals = vals * x ** (spec.s + v)
    else:
        vals = spec.f.eval_array(x)
        if spec.s != 0:
            vals = vals * x**spec.s
    if spec.m:
        vals = vals * np.log(x) ** spec.m
    return vals


def _trig_array(spec: IntegralSpec, x: np.ndarray) -> np.ndarray:
    arg = spec.n * x - 0.5 * np.pi * spec.phase
    return np.cos(arg) if spec.kind is TrigKind.COS else np.sin(arg)


def _integrand_array(spec: IntegralSpec, x: np.ndarray) -> np.ndarray:
    return _envelope_array(spec, x) * _trig_array(spec, x)


def _tanh_sinh_0L(g, length: float, tol: float, max_levels: int):
    """integral of g over (0, length] with a possible singularity at 0.

    Doubling-level tanh-sinh rule; returns (value, error_estimate, levels).
    The error estimate is the last inter-level difference.
    """

    def contribution(ts: np.ndarray) -> float:
        with np.errstate(over="ignore"):
            u = 0.5 * np.pi * np.sinh(ts)
            q = 1.0 / (1.0 + np.exp(2.0 * np.abs(u)))
        x = np.where(u < 0.0, length * q, length * (1.0 - q))
        w = (np.pi * length) * q * (1.0 - q) * np.cosh(ts)
        keep = (w > 0.0) & (x > 0.0)
        if not keep.any():
            return 0.0
        return float(np.sum(g(x[keep]) * w[keep]))

    h = 1.0
    kmax = int(_TMAX / h)
    value = h * contribution(np.arange(-kmax, kmax + 1) * h)
    err = abs(value)
    levels = 0
    for level in range(1, max_levels + 1):
        h *= 0.5
        kmax = int(_TMAX / h)
        ks = np.arange(-kmax, kmax + 1)
        new = contribution(ks[ks % 2 != 0] * h)
        prev = value
        value = 0.5 * prev + h * new
        err = abs(value - prev)
        levels = level
        if level >= 3 and err <= 0.1 * tol:
            break
    return value, err, levels


def _first_zero_at_or_after(spec: IntegralSpec, x_min: float) -> float:
    """Smallest zero of the trig factor at or after x_min (n > 0 only)."""
    phi = 0.5 * math.pi * spec.phase
    if spec.kind is TrigKind.COS:
        k = math.ceil((spec.n * x_min - phi) / math.pi - 0.5)
        return ((k + 0.5) * math.pi + phi) / spec.n
    k = math.ceil((spec.n * x_min - phi) / math.pi)
    return (k * math.pi + phi) / spec.n


def _cell_values(spec: IntegralSpec, x0: float, start: int, count: int) -> np.ndarray:
    """Integrals over `count` half-period cells beginning at cell `start`."""
    width = math.pi / spec.n
    lefts = x0 + width * np.arange(start, start + count)
    half = 0.5 * width
    pts = (lefts + half)[:, None] + half * _GL_NODES[None, :]
    vals = _integrand_array(spec, pts.ravel()).reshape(pts.shape)
    return half * (vals @ _GL_WEIGHTS)


def _levin_u(sums: list[float], terms: list[float], depth: int) -> float | None:
    """Levin u estimate from the window of the last depth+1 partial sums."""
    n0 = len(sums) - 1 - depth
    num = 0.0
    den = 0.0
    for j in range(depth + 1):
        idx = n0 + j
        omega = (idx + 1.0) * terms[idx]
        if omega == 0.0:
            return None
        c = (
            (-1.0) ** j
            * math.comb(depth, j)
            * ((n0 + j + 1.0) / (n0 + depth + 1.0)) ** (depth - 1)
            / omega
        )
        num += c * sums[idx]
        den += c
    if den == 0.0 or not (math.isfinite(num) and math.isfinite(den)):
        return None
    return num / den


def _tail_accelerated(spec: IntegralSpec, x0: float, cfg: QuadratureConfig):
    """(value, error_estimate, cells_used, converged) for the [x0, inf) tail."""
    depth = cfg.acceleration_depth
    tol = cfg.target_abs_tol
    terms: list[float] = []
    sums: list[float] = []
    total = 0.0
    best = None
    best_err = math.inf
    chunk = max(depth + 4, 16)
    while len(terms) < cfg.max_tail_cells:
        take = min(chunk, cfg.max_tail_cells - len(terms))
        for v in _cell_values(spec, x0, len(terms), take):
            total += float(v)
            terms.append(float(v))
            sums.append(total)
        chunk = 8
        if (
            len(terms) >= 2
            and abs(terms[-1]) <= 0.05 * tol
            and abs(terms[-2]) <= 0.05 * tol
        ):
            # Raw series already converged; no transform needed.
            return total, abs(terms[-1]) + 1e-16, len(terms), True
        if len(sums) >= depth + 2:
            hi = _levin_u(sums, terms, depth)
            lo = _levin_u(sums, terms, depth - 1)
            if hi is not None and lo is not None:
                err = abs(hi - lo)
                if err < best_err:
                    best, best_err = hi, err
                if err <= 0.1 * tol:
                    return hi, err, len(terms), True
    if best is None:
        return total, abs(terms[-1]) if terms else 0.0, len(terms), False
    return best, best_err, len(terms), False


def integrate_spec(
    spec: IntegralSpec, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> QuadratureResult:
    """Evaluate one integral of the family to cfg.target_abs_tol.

    Never raises on slow convergence: if the budgets run out the best value
    is returned with accelerated=False and an honest error estimate.
    """
    tol = cfg.target_abs_tol
    if spec.n == 0:
        const = _trig_array(spec, np.zeros(1))[0]
        if const == 0.0:
            return QuadratureResult(0.0, 0.0, 0, 0, True)
        v1, e1, l1 = _tanh_sinh_0L(
            lambda x: _envelope_array(spec, x), 1.0, tol, cfg.max_core_levels
        )
        # Tail mapped by x -> 1/t.  env(1/t)/t^2 is rewritten with reversed
        # numerator/denominator coefficients so nothing overflows as t -> 0:
        #   env(1/t)/t^2 = t^beta * num_rev(t)/den_rev(t) * (-log t)^m
        # with beta = deg(den) - deg(num) - s - 2 > -1 by the n = 0 gate.
        rev_num = Polynomial(tuple(reversed(spec.f.num.coeffs)))
        rev_den = Polynomial(tuple(reversed(spec.f.den.coeffs)))
        beta = spec.f.den.degree - spec.f.num.degree - spec.s - 2.0

        def g_map(t: np.ndarray) -> np.ndarray:
            vals = rev_num.eval_array(t) / rev_den.eval_array(t)
            if beta != 0:
                vals = vals * t**beta
            if spec.m:
                vals = vals * (-np.log(t)) ** spec.m
            return vals

        v2, e2, l2 = _tanh_sinh_0L(g_map, 1.0, tol, cfg.max_core_levels)
        value = const * (v1 + v2)
        err = abs(const) * max(e1, e2)
        err = max(err, 5e-14 * (1.0 + abs(value)))
        ok = e1 <= tol and e2 <= tol
        return QuadratureResult(float(value), float(err), max(l1, l2), 0, ok)

    x0 = _first_zero_at_or_after(spec, 1.0)
    core_v, core_e, levels = _tanh_sinh_0L(
        lambda x: _integrand_array(spec, x), x0, tol, cfg.max_core_levels
    )
    tail_v, tail_e, cells, tail_ok = _tail_accelerated(spec, x0, cfg)
    value = core_v + tail_v
    err = max(core_e, tail_e)
    err = max(err, 5e-14 * (1.0 + abs(value)))
    return QuadratureResult(
        float(value), float(err), levels, cells, bool(core_e <= tol and tail_ok)
    )


def integrate_phase(
    f, n: float, s: float, cfg: QuadratureConfig = DEFAULT_CONFIG
) -> QuadratureResult:
    """integral of cos(nx - pi*s/2) f(x) x^s over (0, inf)."""
    spec = IntegralSpec(f, TrigKind.COS, n, 0, s, phase=s)
    return integrate_spec(spec, cfg)


def tail_brute_oracle(spec: IntegralSpec, cells: int) -> float:
    """Unaccelerated tail check: plain partial sum over `cells` half-period
    cells plus a two-term integration-by-parts remainder for the rest.

    Test helper only; cells = 0 returns exactly 0.
    """
    if spec.n <= 0:
        raise DomainError("oscillatory tail requires n > 0")
    if cells < 0:
        raise DomainError("cells must be >= 0")
    if cells == 0:
        return 0.0
    x0 = _first_zero_at_or_after(spec, 1.0)
    total = 0.0
    done = 0
    while done < cells:
        take = min(4096, cells - done)
        total += float(_cell_values(spec, x0, done, take).sum())
        done += take

    a = x0 + cells * math.pi / spec.n
    h = 1e-6 * a
    g = float(_envelope_array(spec, np.array([a]))[0])
    gp = float(
        (_envelope_array(spec, np.array([a + h])) - _envelope_array(spec, np.array([a - h])))[0]
    ) / (2.0 * h)
    arg = spec.n * a - 0.5 * math.pi * spec.phase
    if spec.kind is TrigKind.COS:
        corr = -g * math.sin(arg) / spec.n + gp * math.cos(arg) / spec.n**2
    else:
        corr = g * math.cos(arg) / spec.n - gp * math.sin(arg) / spec.n**2
    return total + corr

"""Numeric verification of relations and the named verification suites.

Each suite builds a deterministic list of Relation objects; verify_relations
integrates every distinct IntegralSpec once (memoized), forms the residual
|sum coeff*value - rhs| per relation, and returns flat row records ready for
reporting.  Independent relations may be verified concurrently; rows always
come back in construction order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .identities import (
    IntegralSpec,
    Relation,
    TrigKind,
    closed_cos_pow,
    closed_x_sin_pow,
    even_kernel,
    odd_kernel,
    relation_S,
    relation_derivative_family,
    relation_eg_odd_closing,
    relation_general_even,
    relation_generalized_log,
    relation_re_im_split,
    relation_sin_family,
    relation_theorem1,
)
from .polyrat import Polynomial, RationalFunction
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_spec

DEFAULT_TOL = 1e-8
DEFAULT_N_GRID = (0.5, 1.0, 2.0)
DEFAULT_M_GRID = (0, 1, 2, 3)
DEFAULT_R_GRID = (0, 1, 2, 3)
DEFAULT_S_GRID = (-0.5, 0.0, 0.5, 1.0)

SUITE_NAMES = (
    "theorem1",
    "derivative-family",
    "sin-family",
    "recurrence-even",
    "recurrence-odd",
    "general-even",
    "closed-forms",
)


@dataclass(frozen=True)
class TermCheck:
    coefficient: float
    coefficient_imag: float
    f: str
    kind: str
    n: float
    m: int
    s: float
    phase: float
    value: float
    error_estimate: float


@dataclass(frozen=True)
class RelationCheck:
    suite: str
    provenance: str
    lhs: float
    lhs_imag: float
    rhs: float
    rhs_imag: float
    residual: float
    tolerance: float
    passed: bool
    terms: tuple[TermCheck, ...]


@lru_cache(maxsize=None)
def cached_integrate(spec: IntegralSpec, cfg: QuadratureConfig):
    return integrate_spec(spec, cfg)


def verify_relation(
    relation: Relation,
    tol: float = DEFAULT_TOL,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    suite: str = "",
) -> RelationCheck:
    lhs = 0j
    terms = []
    for coeff, spec in relation.terms:
        result = cached_integrate(spec, cfg)
        lhs += coeff * result.value
        terms.append(
            TermCheck(
                coefficient=coeff.real,
                coefficient_imag=coeff.imag,
                f=str(spec.f),
                kind=spec.kind.value,
                n=spec.n,
                m=spec.m,
                s=spec.s,
                phase=spec.phase,
                value=result.value,
                error_estimate=result.error_estimate,
            )
        )
    residual = abs(lhs - relation.rhs)
    return RelationCheck(
        suite=suite,
        provenance=relation.provenance,
        lhs=lhs.real,
        lhs_imag=lhs.imag,
        rhs=relation.rhs.real,
        rhs_imag=relation.rhs.imag,
        residual=residual,
        tolerance=tol,
        passed=residual <= tol,
        terms=tuple(terms),
    )


def verify_relations(
    relations: list[tuple[str, Relation]],
    tol: float = DEFAULT_TOL,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    jobs: int = 1,
) -> list[RelationCheck]:
    """Verify tagged relations, optionally in parallel, in stable order."""
    if jobs <= 1 or len(relations) < 2:
        return [verify_relation(rel, tol, cfg, suite) for suite, rel in relations]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(verify_relation, rel, tol, cfg, suite)
            for suite, rel in relations
        ]
        return [f.result() for f in futures]


def _quartic_kernel() -> RationalFunction:
    return RationalFunction(Polynomial((1,)), Polynomial((1, 0, 0, 0, 1)))


def suite_theorem1(n_values=DEFAULT_N_GRID, **_) -> list[Relation]:
    out = []
    for n in n_values:
        out.extend(relation_theorem1(n))
    return out


def suite_derivative_family(
    n_values=DEFAULT_N_GRID, m_values=(1, 2, 3), **_
) -> list[Relation]:
    return [
        relation_derivative_family(m, n) for n in n_values for m in m_values
    ]


def suite_sin_family(n_values=DEFAULT_N_GRID, **_) -> list[Relation]:
    out = []
    for n in n_values:
        out.extend(relation_sin_family(n))
    return out


def suite_recurrence_even(
    n_values=DEFAULT_N_GRID, m_values=DEFAULT_M_GRID, **_
) -> list[Relation]:
    out = []
    for n in n_values:
        for m in m_values:
            out.extend(relation_S(even_kernel(0), n, m))
    return out


def suite_recurrence_odd(
    n_values=DEFAULT_N_GRID, m_values=DEFAULT_M_GRID, **_
) -> list[Relation]:
    out = []
    for n in n_values:
        for m in m_values:
            out.extend(relation_S(odd_kernel(0), n, m))
    return out


def suite_general_even(
    n_values=(1.0, 2.0), s_values=(0.0, 0.5), **_
) -> list[Relation]:
    out = []
    quartic = _quartic_kernel()
    for n in n_values:
        for s in s_values:
            out.append(relation_general_even(quartic, n, s))
            out.append(relation_general_even(even_kernel(1), n, s))
    return out


def suite_closed_forms(
    n_values=DEFAULT_N_GRID,
    r_values=DEFAULT_R_GRID,
    s_values=DEFAULT_S_GRID,
    **_,
) -> list[Relation]:
    """Every closed-form value checked against a quadrature evaluation.

    Dual-path rows are expressed as single-term relations whose right-hand
    side is the closed form, so they verify through the same machinery.
    """
    out = []
    for r in r_values:
        for n in n_values:
            for s in s_values:
                if -1.0 < s < 2.0 * (r + 1):
                    spec = IntegralSpec(
                        even_kernel(r), TrigKind.COS, n, 0, s, phase=s
                    )
                    out.append(
                        Relation(
                            ((1 + 0j, spec),),
                            complex(closed_cos_pow(r, n, s)),
                            f"cos-power r={r} s={s:g} n={n:g}",
                        )
                    )
                if -2.0 < s < 2.0 * r + 1.0:
                    spec = IntegralSpec(
                        odd_kernel(r), TrigKind.SIN, n, 0, s, phase=s
                    )
                    out.append(
                        Relation(
                            ((1 + 0j, spec),),
                            complex(closed_x_sin_pow(r, n, s)),
                            f"x-sin-power r={r} s={s:g} n={n:g}",
                        )
                    )
    for r in r_values:
        for n in n_values:
            if n > 0:
                out.append(relation_generalized_log(r, n))
                out.append(relation_eg_odd_closing(r, n))
    for s in (-0.5, 0.0, 0.5, 1.0, 1.5):
        for n in n_values:
            if n > 0:
                out.extend(relation_re_im_split(s, n))
    return out


SUITE_BUILDERS = {
    "theorem1": suite_theorem1,
    "derivative-family": suite_derivative_family,
    "sin-family": suite_sin_family,
    "recurrence-even": suite_recurrence_even,
    "recurrence-odd": suite_recurrence_odd,
    "general-even": suite_general_even,
    "closed-forms": suite_closed_forms,
}


def build_suite(name: str, **params) -> list[tuple[str, Relation]]:
    """Relations of one suite (or of every suite for 'all'), tagged by suite."""
    clean = {k: v for k, v in params.items() if v is not None}
    if name == "all":
        out = []
        for sub in SUITE_NAMES:
            out.extend((sub, rel) for rel in SUITE_BUILDERS[sub](**clean))
        return out
    if name not in SUITE_BUILDERS:
        raise DomainError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or all"
        )
    return [(name, rel) for rel in SUITE_BUILDERS[name](**clean)]

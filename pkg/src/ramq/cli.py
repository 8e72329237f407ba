"""Command-line surface.

Subcommands:

  verify SUITE     build a verification suite, check every relation against
                   quadrature, emit a report (text/csv/json), exit 1 on any
                   failed relation
  integrate        evaluate one integral of the family
  residue          upper half-plane poles, residues and the contour sum
  table            closed-form columns (double sum, Bessel form, quadrature)
                   tabulated over r and n

Rational functions on the command line follow the grammar documented in
ramq.parse (e.g. "1/(x^2+1)", "x/(x^2+1)^3", "(x+1)/(x^2+4)").  Parenthesized
denominator factors with integer exponents assign pole multiplicities
exactly.  RAMQ_JOBS sets the default --jobs.  With --plots DIR, matplotlib
figures are rendered into DIR alongside the delimited output.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .errors import RamqError
from .identities import IntegralSpec, TrigKind, bessel_k_half, closed_cos_pow, closed_x_sin_pow, even_kernel, odd_kernel
from .parse import ParseError, parse_rational
from .quadrature import QuadratureConfig, integrate_spec
from .reporting import Report, render
from .residues import WeightParams, residue_at, residue_sum_S
from .polyrat import upper_half_poles
from .verify import DEFAULT_N_GRID, DEFAULT_TOL, SUITE_NAMES, build_suite, cached_integrate, verify_relations

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _parse_reals(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok != "")
    except ValueError as exc:
        raise ParseError(f"bad number list {text!r}") from exc


def _parse_ints(text: str) -> tuple[int, ...]:
    """Integer list "0,1,2" or range "0..4"."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            return tuple(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise ParseError(f"bad integer range {text!r}") from exc
    try:
        return tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("RAMQ_JOBS", "1")))
    except ValueError:
        return 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _add_common_report_flags(sub) -> None:
    sub.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub.add_argument("--out", help="write the report to this file instead of stdout")
    sub.add_argument("--plots", metavar="DIR", help="render figures into DIR")


def cmd_verify(args) -> int:
    params = {
        "n_values": _parse_reals(args.n) if args.n else None,
        "m_values": _parse_ints(args.m) if args.m else None,
        "r_values": _parse_ints(args.r) if args.r else None,
        "s_values": _parse_reals(args.s) if args.s else None,
    }
    cfg = QuadratureConfig(target_abs_tol=min(1e-10, args.tol * 1e-2))
    started = time.perf_counter()
    tagged = build_suite(args.suite, **params)
    rows = verify_relations(tagged, tol=args.tol, cfg=cfg, jobs=args.jobs)
    wall = time.perf_counter() - started
    config = {
        "suite": args.suite,
        "tol": args.tol,
        "jobs": args.jobs,
        "n": args.n or ",".join(f"{v:g}" for v in DEFAULT_N_GRID),
    }
    report = Report.build(args.suite, config, wall, rows)
    _emit(render(report, args.format), args.out)
    if args.plots:
        from . import plots

        plots.ensure_dir(args.plots)
        plots.plot_report(
            report, os.path.join(args.plots, f"{args.suite}_residuals.png")
        )
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_integrate(args) -> int:
    f = parse_rational(args.f)
    kind = TrigKind.COS if args.kind == "cos" else TrigKind.SIN
    spec = IntegralSpec(f, kind, args.n, args.m, args.s, args.phase)
    cfg = QuadratureConfig(target_abs_tol=args.tol)
    result = integrate_spec(spec, cfg)
    print(f"integral        = {result.value:.15g}")
    print(f"error_estimate  = {result.error_estimate:.3g}")
    print(f"core_levels     = {result.core_subdivisions}")
    print(f"tail_cells      = {result.tail_cells_used}")
    print(f"converged       = {str(result.accelerated).lower()}")
    return EXIT_OK


def cmd_residue(args) -> int:
    f = parse_rational(args.f)
    w = WeightParams(args.n, complex(args.s), args.m)
    poles = upper_half_poles(f)
    for pole in poles:
        res = residue_at(f, pole, w)
        print(
            f"pole {pole.location:.15g} (multiplicity {pole.multiplicity}): "
            f"residue = {res:.15g}"
        )
    s_value = residue_sum_S(f, w)
    print(f"S = 2*pi*i * sum = {s_value:.15g}")
    return EXIT_OK


def cmd_table(args) -> int:
    n_values = _parse_reals(args.n)
    if any(n <= 0 for n in n_values):
        raise ParseError("table requires n > 0")
    cfg = QuadratureConfig()
    rows = []
    for r in range(args.r_max + 1):
        for n in n_values:
            cos_closed = closed_cos_pow(r, n, 0.0)
            cos_bessel = bessel_k_half(r, n)
            cos_quad = cached_integrate(
                IntegralSpec(even_kernel(r), TrigKind.COS, n), cfg
            ).value
            xsin_closed = closed_x_sin_pow(r, n, 0.0)
            xsin_quad = cached_integrate(
                IntegralSpec(odd_kernel(r), TrigKind.SIN, n), cfg
            ).value
            rows.append(
                {
                    "r": r,
                    "n": n,
                    "cos_closed": cos_closed,
                    "cos_bessel": cos_bessel,
                    "cos_quadrature": cos_quad,
                    "cos_residual": abs(cos_closed - cos_quad),
                    "xsin_closed": xsin_closed,
                    "xsin_quadrature": xsin_quad,
                    "xsin_residual": abs(xsin_closed - xsin_quad),
                }
            )

    if args.format == "json":
        import json

        text = json.dumps({"schema_version": 1, "rows": rows}, indent=2) + "\n"
    elif args.format == "csv":
        import csv as _csv
        import io

        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        keys = list(rows[0].keys())
        writer.writerow(keys)
        for row in rows:
            writer.writerow(
                [row["r"]] + [f"{row[k]:.15g}" for k in keys if k != "r"]
            )
        text = buf.getvalue()
    else:
        head = (
            f"{'r':>3} {'n':>5} {'cos closed':>18} {'cos bessel':>18} "
            f"{'cos quad':>18} {'resid':>9} {'x sin closed':>18} {'resid':>9}"
        )
        lines = [head]
        for row in rows:
            lines.append(
                f"{row['r']:>3} {row['n']:>5g} {row['cos_closed']:>18.12g} "
                f"{row['cos_bessel']:>18.12g} {row['cos_quadrature']:>18.12g} "
                f"{row['cos_residual']:>9.2e} {row['xsin_closed']:>18.12g} "
                f"{row['xsin_residual']:>9.2e}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)

    if args.plots:
        from . import plots

        plots.ensure_dir(args.plots)
        plots.plot_table(
            rows, os.path.join(args.plots, f"table_r{args.r_max}.png")
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramq",
        description="Ramanujan-notebook oscillatory integrals: closed forms, "
        "recurrence relations, and quadrature verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_verify = subs.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--n", help="comma list of frequencies, e.g. 0.5,1,2")
    p_verify.add_argument("--m", help="log powers, e.g. 0,1,2,3 or 1..3")
    p_verify.add_argument("--r", help="denominator powers, e.g. 0..4")
    p_verify.add_argument("--s", help="algebraic powers, e.g. -0.5,0,0.5,1")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_verify.add_argument("--jobs", type=int, default=_default_jobs())
    _add_common_report_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_int = subs.add_parser("integrate", help="evaluate one integral")
    p_int.add_argument("--f", required=True, help='rational function, e.g. "1/(x^2+1)"')
    p_int.add_argument("--kind", choices=("cos", "sin"), required=True)
    p_int.add_argument("--n", type=float, required=True)
    p_int.add_argument("--m", type=int, default=0)
    p_int.add_argument("--s", type=float, default=0.0)
    p_int.add_argument("--phase", type=float, default=0.0)
    p_int.add_argument("--tol", type=float, default=1e-10)
    p_int.set_defaults(func=cmd_integrate)

    p_res = subs.add_parser("residue", help="poles, residues and contour sum")
    p_res.add_argument("--f", required=True)
    p_res.add_argument("--n", type=float, required=True)
    p_res.add_argument("--s", type=float, default=0.0)
    p_res.add_argument("--m", type=int, default=0)
    p_res.set_defaults(func=cmd_residue)

    p_tab = subs.add_parser("table", help="closed-form/quadrature table over r, n")
    p_tab.add_argument("--r-max", type=int, default=3)
    p_tab.add_argument("--n", default="0.5,1,2")
    _add_common_report_flags(p_tab)
    p_tab.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RamqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Machine-readable reports for verification runs.

JSON reports keep full float precision and round-trip exactly through
from_json(to_json(report)) == report.  CSV and text renderings use 15
significant digits.  The CSV column order is fixed and versioned together
with schema_version (see README).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from .verify import RelationCheck, TermCheck

SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "suite",
    "provenance",
    "passed",
    "lhs",
    "lhs_imag",
    "rhs",
    "rhs_imag",
    "residual",
    "tolerance",
    "n_terms",
    "terms",
)


@dataclass(frozen=True)
class Report:
    suite: str
    schema_version: int
    config: tuple[tuple[str, object], ...]
    wall_time_s: float
    rows: tuple[RelationCheck, ...]

    @classmethod
    def build(cls, suite, config: dict, wall_time_s, rows) -> "Report":
        return cls(
            suite=suite,
            schema_version=SCHEMA_VERSION,
            config=tuple(sorted(config.items())),
            wall_time_s=wall_time_s,
            rows=tuple(rows),
        )

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.rows)


def to_json(report: Report) -> str:
    payload = {
        "suite": report.suite,
        "schema_version": report.schema_version,
        "config": [list(kv) for kv in report.config],
        "wall_time_s": report.wall_time_s,
        "rows": [asdict(row) for row in report.rows],
    }
    return json.dumps(payload, indent=2)


def from_json(text: str) -> Report:
    payload = json.loads(text)
    rows = []
    for row in payload["rows"]:
        terms = tuple(TermCheck(**t) for t in row.pop("terms"))
        rows.append(RelationCheck(terms=terms, **row))
    return Report(
        suite=payload["suite"],
        schema_version=payload["schema_version"],
        config=tuple((k, v) for k, v in payload["config"]),
        wall_time_s=payload["wall_time_s"],
        rows=tuple(rows),
    )


def _g15(x: float) -> str:
    return f"{x:.15g}"


def _pack_terms(row: RelationCheck) -> str:
    bits = []
    for t in row.terms:
        coeff = _g15(t.coefficient)
        if t.coefficient_imag:
            coeff += f"{t.coefficient_imag:+.15g}i"
        bits.append(
            f"{coeff} * [{t.f} {t.kind} n={t.n:g} m={t.m} s={t.s:g} "
            f"phase={t.phase:g}] = {_g15(t.value)} +- {t.error_estimate:.3g}"
        )
    return "; ".join(bits)


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.suite,
                row.provenance,
                "true" if row.passed else "false",
                _g15(row.lhs),
                _g15(row.lhs_imag),
                _g15(row.rhs),
                _g15(row.rhs_imag),
                _g15(row.residual),
                _g15(row.tolerance),
                len(row.terms),
                _pack_terms(row),
            ]
        )
    return buf.getvalue()


def to_text(report: Report) -> str:
    lines = [f"suite: {report.suite}"]
    lines.append(
        "config: " + ", ".join(f"{k}={v}" for k, v in report.config)
    )
    width = max((len(r.provenance) for r in report.rows), default=10)
    for row in report.rows:
        status = "PASS" if row.passed else "FAIL"
        lines.append(
            f"  {status}  {row.provenance:<{width}}  "
            f"lhs={_g15(row.lhs):>22}  rhs={_g15(row.rhs):>22}  "
            f"residual={row.residual:.3e}"
        )
    n_pass = sum(r.passed for r in report.rows)
    lines.append(
        f"{n_pass}/{len(report.rows)} passed in {report.wall_time_s:.2f} s"
    )
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")

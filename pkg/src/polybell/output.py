"""JSON and CSV emitters for the command-line front end.

Every mathematical value is emitted as exact text: integers and rationals
as decimal ("7", "-35", "3/2"), polynomials in the deterministic graded-lex
form plus a structured term list.  No floating-point numbers appear in any
output; even wall-clock timings are rendered as fixed-point decimal
strings.  The JSON shapes are described by the schema shipped at
``polybell/data/schema.json``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from importlib import resources

from .bench import BenchReport
from .oeis import OeisResult
from .ring import MultiPoly
from .verify import VerificationReport

CSV_COLUMNS = {
    "table": ("family", "n", "k", "at_lambda", "at_x", "value"),
    "series": ("expr", "n", "ogf", "egf"),
    "verify": (
        "theorem",
        "max_n",
        "status",
        "elapsed_s",
        "counterexample_n",
        "counterexample_k",
        "lhs",
        "rhs",
        "detail",
    ),
    "bench": (
        "workload",
        "order",
        "reps",
        "algorithm",
        "wall_s",
        "coeff_mults",
        "series_equal",
    ),
    "oeis": ("position", "oeis_id", "name"),
}


def render_value(value: Fraction | MultiPoly | int) -> str:
    return str(value)


def poly_terms(value: Fraction | MultiPoly | int) -> list[dict[str, object]]:
    """Structured term list: graded-lex ordered (lam, x, coeff) triples."""
    if not isinstance(value, MultiPoly):
        value = MultiPoly.const(value)
    return [
        {"lam": mono[0], "x": mono[1], "coeff": str(coeff)}
        for mono, coeff in value.terms()
    ]


def render_seconds(elapsed: float) -> str:
    return f"{elapsed:.6f}"


def load_schema() -> dict:
    """The shipped JSON schema for all CLI output documents."""
    raw = resources.files("polybell").joinpath("data/schema.json").read_text()
    return json.loads(raw)


# -- document builders -------------------------------------------------------


def table_document(
    family: str,
    max_n: int,
    records: list[dict[str, object]],
    k: int | None = None,
    at_lambda: Fraction | None = None,
    at_x: Fraction | None = None,
) -> dict:
    return {
        "kind": "table",
        "family": family,
        "max_n": max_n,
        "k": k,
        "at_lambda": None if at_lambda is None else str(at_lambda),
        "at_x": None if at_x is None else str(at_x),
        "records": records,
    }


def table_record(
    n: int,
    value: Fraction | MultiPoly | int,
    k: int | None = None,
    egf_position: int | None = None,
) -> dict:
    return {
        "n": n,
        "k": k,
        "value": render_value(value),
        "terms": poly_terms(value),
        "egf_position": egf_position,
    }


def series_document(
    expr: str,
    order: int,
    rows: list[dict[str, object]],
    k: int | None = None,
    at_lambda: Fraction | None = None,
    at_x: Fraction | None = None,
) -> dict:
    return {
        "kind": "series",
        "expr": expr,
        "order": order,
        "k": k,
        "at_lambda": None if at_lambda is None else str(at_lambda),
        "at_x": None if at_x is None else str(at_x),
        "rows": rows,
    }


def series_row(n: int, ogf: Fraction | MultiPoly, egf: Fraction | MultiPoly) -> dict:
    return {
        "n": n,
        "ogf": render_value(ogf),
        "ogf_terms": poly_terms(ogf),
        "egf": render_value(egf),
        "egf_terms": poly_terms(egf),
    }


def verify_document(report: VerificationReport) -> dict:
    counterexample = None
    if report.counterexample is not None:
        counterexample = {
            "n": report.counterexample.n,
            "k": report.counterexample.k,
            "lhs": report.counterexample.lhs,
            "rhs": report.counterexample.rhs,
        }
    return {
        "kind": "verify_report",
        "theorem": report.theorem,
        "max_n": report.max_n,
        "status": report.status,
        "elapsed_s": render_seconds(report.elapsed_s),
        "counterexample": counterexample,
        "detail": report.detail,
    }


def bench_document(report: BenchReport) -> dict:
    return {
        "kind": "bench",
        "workload": report.workload,
        "order": report.order,
        "reps": report.reps,
        "series_equal": report.series_equal,
        "results": [
            {
                "algorithm": result.algorithm,
                "wall_s": render_seconds(result.wall_s),
                "coeff_mults": result.coeff_mults,
            }
            for result in report.results
        ],
    }


def oeis_document(result: OeisResult) -> dict:
    return {
        "kind": "oeis",
        "terms": [str(t) for t in result.query.terms],
        "transform": result.query.transform,
        "applied_terms": [str(t) for t in result.applied_terms],
        "source": result.source,
        "candidates": [
            {"position": i, "oeis_id": c.oeis_id, "name": c.name}
            for i, c in enumerate(result.candidates)
        ],
    }


# -- CSV rendering ------------------------------------------------------------


def _blank(value: object) -> object:
    return "" if value is None else value


def csv_rows(document: dict) -> tuple[tuple[str, ...], list[tuple[object, ...]]]:
    """Flatten a JSON document to its documented CSV column order."""
    kind = document["kind"]
    if kind == "table":
        header = CSV_COLUMNS["table"]
        rows = [
            (
                document["family"],
                record["n"],
                _blank(record["k"] if record["k"] is not None else document["k"]),
                _blank(document["at_lambda"]),
                _blank(document["at_x"]),
                record["value"],
            )
            for record in document["records"]
        ]
    elif kind == "series":
        header = CSV_COLUMNS["series"]
        rows = [
            (document["expr"], row["n"], row["ogf"], row["egf"])
            for row in document["rows"]
        ]
    elif kind == "verify_report":
        header = CSV_COLUMNS["verify"]
        ce = document["counterexample"] or {}
        rows = [
            (
                document["theorem"],
                document["max_n"],
                document["status"],
                document["elapsed_s"],
                _blank(ce.get("n")),
                _blank(ce.get("k")),
                _blank(ce.get("lhs")),
                _blank(ce.get("rhs")),
                _blank(document["detail"]),
            )
        ]
    elif kind == "bench":
        header = CSV_COLUMNS["bench"]
        rows = [
            (
                document["workload"],
                document["order"],
                document["reps"],
                result["algorithm"],
                result["wall_s"],
                result["coeff_mults"],
                document["series_equal"],
            )
            for result in document["results"]
        ]
    elif kind == "oeis":
        header = CSV_COLUMNS["oeis"]
        rows = [
            (candidate["position"], candidate["oeis_id"], candidate["name"])
            for candidate in document["candidates"]
        ]
    else:
        raise ValueError(f"no CSV layout for document kind {kind!r}")
    return header, rows


def to_csv(document: dict, include_header: bool = True) -> str:
    header, rows = csv_rows(document)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if include_header:
        writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def to_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=False)

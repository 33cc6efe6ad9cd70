"""JSON and CSV serialization for matrices, classes, coordinates and reports.

Matrix JSON: {"rows": m, "cols": n, "scalar": "rational"|"float64",
"data": [row-major entries]} with rationals as "num/den" strings (plain
integers are accepted on input). CSV holds one matrix row per line.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .basis import BasisElement, Coordinates
from .matrix import FLOAT64, RATIONAL, Matrix
from .metric import GapReport
from .quotient import MatrixClass


def format_entry(v, kind: str):
    if kind == RATIONAL:
        return str(v)
    return float(v)


def parse_entry(v, kind: str):
    if kind == RATIONAL:
        if isinstance(v, float):
            raise ValueError(f"rational data must be integers or 'num/den' strings, got {v!r}")
        return Fraction(v)
    return float(v)


def matrix_to_dict(A: Matrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "scalar": A.scalar,
        "data": [format_entry(v, A.scalar) for v in A.data],
    }


def matrix_from_dict(d: dict) -> Matrix:
    try:
        rows, cols, scalar, data = d["rows"], d["cols"], d["scalar"], d["data"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"matrix object missing field: {exc}") from exc
    if scalar not in (RATIONAL, FLOAT64):
        raise ValueError(f"unknown scalar kind {scalar!r}")
    entries = tuple(parse_entry(v, scalar) for v in data)
    return Matrix(int(rows), int(cols), entries, scalar)


def matrix_to_csv(A: Matrix) -> str:
    lines = [",".join(str(format_entry(v, A.scalar)) for v in A.row(i)) for i in range(A.rows)]
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str, scalar: str = RATIONAL) -> Matrix:
    rows = []
    for line in text.strip().splitlines():
        cells = [c.strip() for c in line.split(",")]
        if scalar == RATIONAL:
            rows.append([Fraction(c) for c in cells])
        else:
            rows.append([float(c) for c in cells])
    if not rows:
        raise ValueError("empty CSV matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged CSV rows")
    data = tuple(v for r in rows for v in r)
    return Matrix(len(rows), width, data, scalar)


def class_to_dict(x: MatrixClass) -> dict:
    return {"mu": str(x.mu), "k0": x.k0, "rep": matrix_to_dict(x.rep)}


def class_from_dict(d: dict) -> MatrixClass:
    try:
        mu = Fraction(d["mu"])
        rep = matrix_from_dict(d["rep"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"class object missing field: {exc}") from exc
    cls = MatrixClass(mu, rep)
    if "k0" in d and int(d["k0"]) != cls.k0:
        raise ValueError(f"stated k0={d['k0']} disagrees with rep shape {rep.shape}")
    return cls


def coords_to_dict(c: Coordinates) -> dict:
    terms = []
    for e in sorted(c.terms, key=BasisElement.sort_key):
        terms.append(
            {
                "kind": e.kind,
                "k": e.k,
                "l": e.l,
                "i": e.i,
                "j1": e.j1,
                "j2": e.j2,
                "coeff": str(c.terms[e]),
            }
        )
    return {"mu": str(c.mu), "terms": terms}


def coords_from_dict(d: dict) -> Coordinates:
    try:
        mu = Fraction(d["mu"])
        raw = d["terms"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"coordinates object missing field: {exc}") from exc
    terms = {}
    for t in raw:
        e = BasisElement(mu, int(t["k"]), int(t["l"]), int(t["i"]), int(t["j1"]), int(t["j2"]))
        coeff = Fraction(t["coeff"])
        if e in terms:
            raise ValueError(f"duplicate term {t}")
        if ("kind" in t) and t["kind"] != e.kind:
            raise ValueError(f"term {t} mislabels its kind (expected {e.kind})")
        terms[e] = coeff
    return Coordinates(mu, terms)


GAP_CSV_HEADER = "n,rows,cols,gap_measured,gap_predicted,rel_err"


def gap_reports_to_csv(reports: list[GapReport]) -> str:
    lines = [GAP_CSV_HEADER]
    for r in reports:
        lines.append(
            f"{r.n},{r.rows},{r.cols},{r.gap_measured!r},{r.gap_predicted!r},{r.rel_err!r}"
        )
    return "\n".join(lines) + "\n"


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_json(text: str) -> dict:
    return json.loads(text)

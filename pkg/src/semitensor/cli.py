"""Command-line surface: file-based matrix I/O over every operation.

Inputs are JSON/CSV files or inline JSON array literals. Exit codes:
0 success, 1 domain error (bad ratios, float reducibility ambiguity),
2 parse/IO error; failures also print one machine-readable line
{"error": code, "message": ...} on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import io as sio
from .basis import decompose_class, enumerate_basis, reconstruct
from .kernels import BenchConfig, bench
from .matrix import FLOAT64, RATIONAL, DEFAULT_RTOL, Matrix, from_rows
from .metric import (
    CauchyConfig,
    cauchy_sequence,
    dist,
    fill_value,
    gap_reports,
    inner,
    nonconvergence_probe,
)
from .quotient import MatrixClass, canonicalize, equivalent, lie_bracket
from .stp import lminus, lplus, ltimes, rminus, rplus, rtimes

TOL_ENV = "SEMITENSOR_TOL"


class _ParseFailure(Exception):
    pass


class _DomainFailure(Exception):
    pass


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_RTOL
    try:
        return float(raw)
    except ValueError as exc:
        raise _ParseFailure(f"bad {TOL_ENV} value {raw!r}") from exc


def _load_matrix(arg: str, scalar: str) -> Matrix:
    """A path (JSON or CSV by content) or an inline JSON array literal."""
    try:
        if arg.lstrip().startswith("["):
            rows = json.loads(arg)
            if rows and not isinstance(rows[0], list):
                rows = [rows]
            return from_rows(rows, scalar)
        text = Path(arg).read_text()
        if text.lstrip().startswith("{"):
            return sio.matrix_from_dict(sio.load_json(text))
        return sio.matrix_from_csv(text, scalar)
    except (OSError, ValueError, TypeError, ZeroDivisionError, json.JSONDecodeError) as exc:
        raise _ParseFailure(f"cannot read matrix from {arg!r}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise _ParseFailure(f"cannot write {out!r}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _emit_matrix(A: Matrix, args) -> None:
    if args.format == "csv":
        _emit(sio.matrix_to_csv(A), args.out)
    else:
        _emit(sio.dump_json(sio.matrix_to_dict(A)), args.out)


def _to_class(A: Matrix, tol: float) -> MatrixClass:
    """Canonicalize a CLI input, flagging tolerance-dependent peels."""
    if A.scalar == FLOAT64:
        at_tol = canonicalize(A, rtol=tol)
        exact = canonicalize(A, rtol=0.0)
        if at_tol.rep.shape != exact.rep.shape:
            raise _DomainFailure(
                f"reducibility of this float matrix is ambiguous: exact "
                f"comparison gives a {exact.rep.shape} representative but "
                f"tolerance {tol} gives {at_tol.rep.shape}"
            )
        return at_tol
    return canonicalize(A)


def _scalar_json(v) -> dict:
    if isinstance(v, Fraction):
        return {"value": str(v)}
    return {"value": v}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="semitensor",
        description="Semi-tensor product/addition algebra on matrix quotient spaces.",
    )
    p.add_argument("--scalar", choices=[RATIONAL, FLOAT64], default=RATIONAL,
                   help="scalar kind for inline/CSV inputs (default: rational)")
    p.add_argument("--tol", type=float, default=None,
                   help=f"relative tolerance for float comparisons (default {DEFAULT_RTOL}, "
                        f"override via {TOL_ENV})")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["json", "csv"], default="json",
                   help="output format for matrix results")
    sub = p.add_subparsers(dest="verb", required=True)

    two = argparse.ArgumentParser(add_help=False)
    two.add_argument("a", help="matrix file or inline JSON array")
    two.add_argument("b", help="matrix file or inline JSON array")
    one = argparse.ArgumentParser(add_help=False)
    one.add_argument("a", help="matrix file or inline JSON array")

    sp = sub.add_parser("stp", parents=[two], help="semi-tensor product")
    sp.add_argument("--right", action="store_true", help="use the right-product variant")
    sa = sub.add_parser("sta", parents=[two], help="semi-tensor addition")
    sa.add_argument("--minus", action="store_true", help="subtract instead of add")
    sa.add_argument("--right", action="store_true", help="use the right-addition variant")
    sub.add_parser("canon", parents=[one], help="canonical irreducible representative")
    sub.add_parser("equiv", parents=[two], help="identity-equivalence test")
    sub.add_parser("decompose", parents=[one], help="basis coordinates of a class")
    rec = sub.add_parser("reconstruct", help="class from basis coordinates")
    rec.add_argument("coords", help="coordinates JSON file")
    sub.add_parser("bracket", parents=[two], help="Lie bracket of two ratio-1 classes")
    sub.add_parser("inner", parents=[two], help="quotient pairing of two classes")
    sub.add_parser("dist", parents=[two], help="quotient distance between two classes")

    ca = sub.add_parser("cauchy", help="run the non-convergent Cauchy-sequence experiment")
    ca.add_argument("--a1", required=True, help="seed matrix (inline array or file), all nonzero")
    ca.add_argument("--nmax", type=int, default=6, help="sequence length (<= 9)")

    be = sub.add_parser("bench", help="time the fast product kernel against the reference")
    be.add_argument("--sizes", default="4,4,9,9;8,8,9,9;8,8,15,15",
                    help="semicolon-separated m,n,p,q shape quadruples")
    be.add_argument("--reps", type=int, default=5)
    be.add_argument("--seed", type=int, default=0)

    bl = sub.add_parser("basis-list", help="enumerate basis elements up to an index bound")
    bl.add_argument("--mu", required=True, help="space ratio p/q")
    bl.add_argument("--imax", type=int, required=True)
    return p


def _run(args) -> None:
    tol = args.tol if args.tol is not None else _default_tol()

    if args.verb == "stp":
        A = _load_matrix(args.a, args.scalar)
        B = _load_matrix(args.b, args.scalar)
        _emit_matrix(rtimes(A, B) if args.right else ltimes(A, B), args)
    elif args.verb == "sta":
        A = _load_matrix(args.a, args.scalar)
        B = _load_matrix(args.b, args.scalar)
        op = (rminus if args.minus else rplus) if args.right else (lminus if args.minus else lplus)
        _emit_matrix(op(A, B), args)
    elif args.verb == "canon":
        x = _to_class(_load_matrix(args.a, args.scalar), tol)
        _emit(sio.dump_json(sio.class_to_dict(x)), args.out)
    elif args.verb == "equiv":
        A = _load_matrix(args.a, args.scalar)
        B = _load_matrix(args.b, args.scalar)
        rtol = tol if A.scalar == FLOAT64 else None
        _emit(sio.dump_json({"equivalent": equivalent(A, B, rtol)}), args.out)
    elif args.verb == "decompose":
        A = _load_matrix(args.a, args.scalar)
        if A.scalar != RATIONAL:
            raise _DomainFailure("decompose needs exact-rational input; rationalize first")
        _emit(sio.dump_json(sio.coords_to_dict(decompose_class(canonicalize(A)))), args.out)
    elif args.verb == "reconstruct":
        try:
            coords = sio.coords_from_dict(sio.load_json(Path(args.coords).read_text()))
        except (OSError, json.JSONDecodeError, ValueError, TypeError) as exc:
            raise _ParseFailure(f"cannot read coordinates from {args.coords!r}: {exc}") from exc
        _emit(sio.dump_json(sio.class_to_dict(reconstruct(coords))), args.out)
    elif args.verb == "bracket":
        x = _to_class(_load_matrix(args.a, args.scalar), tol)
        y = _to_class(_load_matrix(args.b, args.scalar), tol)
        _emit(sio.dump_json(sio.class_to_dict(lie_bracket(x, y))), args.out)
    elif args.verb == "inner":
        x = _to_class(_load_matrix(args.a, args.scalar), tol)
        y = _to_class(_load_matrix(args.b, args.scalar), tol)
        _emit(sio.dump_json(_scalar_json(inner(x, y))), args.out)
    elif args.verb == "dist":
        x = _to_class(_load_matrix(args.a, args.scalar), tol)
        y = _to_class(_load_matrix(args.b, args.scalar), tol)
        _emit(sio.dump_json({"value": dist(x, y)}), args.out)
    elif args.verb == "cauchy":
        A1 = _load_matrix(args.a1, FLOAT64)
        cfg = CauchyConfig(A1, args.nmax)
        seq = cauchy_sequence(cfg)
        _emit(sio.gap_reports_to_csv(gap_reports(seq)), args.out)
        for m in range(1, len(seq) - 1):
            values = nonconvergence_probe(seq, m)
            floor = fill_value(m + 1)
            ok = all(v > floor for v in values) and all(
                a <= b for a, b in zip(values, values[1:])
            )
            sys.stdout.write(
                f"probe m={m}: min_dist={min(values):.6g} floor={floor:.6g} "
                f"nondecreasing={all(a <= b for a, b in zip(values, values[1:]))} "
                f"{'ok' if ok else 'VIOLATED'}\n"
            )
    elif args.verb == "bench":
        try:
            sizes = tuple(
                tuple(int(x) for x in chunk.split(",")) for chunk in args.sizes.split(";")
            )
            cfg = BenchConfig(sizes, args.reps, args.seed)
        except ValueError as exc:
            raise _ParseFailure(f"bad --sizes: {exc}") from exc
        report = bench(cfg)
        _emit(sio.dump_json({"sizes": [list(s) for s in cfg.sizes],
                             "repetitions": cfg.repetitions,
                             "seed": cfg.seed,
                             "results": report}), args.out)
    elif args.verb == "basis-list":
        try:
            mu = Fraction(args.mu)
        except (ValueError, ZeroDivisionError) as exc:
            raise _ParseFailure(f"bad --mu: {exc}") from exc
        elems = enumerate_basis(mu, args.imax)
        _emit(sio.dump_json({
            "mu": str(mu),
            "i_max": args.imax,
            "elements": [
                {"kind": e.kind, "k": e.k, "l": e.l, "i": e.i, "j1": e.j1, "j2": e.j2}
                for e in elems
            ],
        }), args.out)
    else:  # pragma: no cover - argparse enforces the verb set
        raise _ParseFailure(f"unknown verb {args.verb!r}")


def _fail(code: str, message: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _run(args)
    except _ParseFailure as exc:
        return _fail("parse", str(exc), 2)
    except _DomainFailure as exc:
        return _fail("domain", str(exc), 1)
    except ValueError as exc:
        return _fail("domain", str(exc), 1)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

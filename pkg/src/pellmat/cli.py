"""Command-line entry point: ``pellmat {pell,det,expand,verify,bench}``.

Exit codes: 0 all checks pass, 1 an identity failed, 2 bad configuration,
3 a combinatorial guard tripped.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from typing import Callable, Iterable, Iterator, TextIO

from .determinant import (
    ORACLE_MAX_N,
    ExpansionTooLarge,
    RowExpansion,
    continuant_prefixes,
    det_bareiss,
    det_continuant,
    det_permutation,
    laplace_expand,
)
from .gaussint import GaussInt, gi_mul
from .matrix import DenseMatrix, IndexSet, build_pell_matrix, materialize
from .pell import (
    TABLE_MIN_N,
    Engine,
    IdentityReport,
    Table,
    pell_sequence,
    unit_multiplier,
    verify_cofactor_tables,
    verify_convolution,
    verify_det_equation,
    verify_doubling,
)

EXIT_OK, EXIT_FAILURE, EXIT_CONFIG, EXIT_GUARD = 0, 1, 2, 3

SUITES = ("convolution", "doubling", "det-equation", "cofactor-tables", "all")
SUITE_MIN_N = {"convolution": 1, "doubling": 1, "det-equation": 2, "cofactor-tables": 4}
DET_ENGINES = ("continuant", "bareiss", "permutation", "laplace")

# largest N(n) each engine is benchmarked on; beyond it the cell is skipped
BENCH_LIMITS = {"continuant": None, "bareiss": 256, "permutation": ORACLE_MAX_N, "laplace": 40}


class ConfigError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def _emit_json(out: TextIO, obj) -> None:
    out.write(_dumps(obj) + "\n")


def _csv_writer(out: TextIO):
    return csv.writer(out, lineterminator="\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _index_set(text: str) -> IndexSet:
    try:
        return IndexSet.parse(text)
    except (ValueError, IndexError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- pell --------------------------------------------------------------------

def _pell_via_det_stream(n_max: int) -> Iterator[int]:
    yield 0  # P_0 has no N(n) counterpart
    if n_max == 0:
        return
    yield 1  # P_1 = m(0) det N(0) with the empty determinant
    if n_max == 1:
        return
    for n, d in enumerate(continuant_prefixes(build_pell_matrix(n_max - 1)), start=1):
        z = gi_mul(unit_multiplier(n).as_gauss(), d)
        if z.im or z.re < 0:
            raise ArithmeticError(f"m det N({n}) = {z} is not a non-negative integer")
        yield z.re


def cmd_pell(args, out: TextIO) -> int:
    if args.max < 0 or args.min < 0 or args.min > args.max:
        raise ConfigError(f"need 0 <= --min <= --max, got {args.min}, {args.max}")
    stream = pell_sequence(args.max) if args.via == "recurrence" else _pell_via_det_stream(args.max)
    writer = _csv_writer(out) if args.format == "csv" else None
    if writer:
        writer.writerow(["n", "P"])
    for n, p in enumerate(stream):
        if n < args.min:
            continue
        if args.format == "json":
            _emit_json(out, {"n": n, "P": str(p)})
        elif writer:
            writer.writerow([n, p])
        else:
            out.write(f"{p}\n")
    return EXIT_OK


# -- det ---------------------------------------------------------------------

def _load_matrix(path: str) -> DenseMatrix:
    with open(path) as fh:
        return DenseMatrix.from_json(json.load(fh))


def _determinant(engine: str, dense: Callable[[], DenseMatrix], spec=None, rows: IndexSet | None = None) -> GaussInt:
    if engine == "continuant":
        if spec is None:
            raise ConfigError("continuant engine needs a tridiagonal matrix (use --n)")
        return det_continuant(spec)
    if engine == "bareiss":
        return det_bareiss(dense())
    if engine == "permutation":
        return det_permutation(dense())
    return laplace_expand(dense(), rows or IndexSet((1,))).total


def cmd_det(args, out: TextIO) -> int:
    if (args.n is None) == (args.matrix is None):
        raise ConfigError("give exactly one of --n or --matrix")
    if args.n is not None:
        if args.n < 1:
            raise ConfigError("--n must be >= 1")
        spec = build_pell_matrix(args.n)
        A = None

        def dense() -> DenseMatrix:
            nonlocal A
            if A is None:
                A = materialize(spec)
            return A
    else:
        spec = None
        loaded = _load_matrix(args.matrix)
        dense = lambda: loaded  # noqa: E731
    value = _determinant(args.engine, dense, spec, args.rows)
    record = {"engine": args.engine, "det": value.to_json()}
    if args.n is not None:
        record = {"n": args.n, **record}
    if args.show_matrix:
        record["matrix"] = dense().to_json()
    if args.format == "json":
        _emit_json(out, record)
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(["n", "engine", "det"])
        w.writerow([args.n if args.n is not None else "", args.engine, str(value)])
    else:
        if args.show_matrix:
            out.write(str(dense()) + "\n")
        label = f"det N({args.n})" if args.n is not None else "det"
        out.write(f"{label} = {value}  [{args.engine}]\n")
    return EXIT_OK


# -- expand ------------------------------------------------------------------

def _narrate(n: int, expansion: RowExpansion, show_zero: bool, out: TextIO) -> None:
    rows = expansion.row_set
    k = len(rows)
    nonzero = [t for t in expansion.terms if t.block]
    out.write(f"N({n}) expanded along rows {rows}: {len(nonzero)} {k}x{k} blocks with nonzero determinant\n")
    for t in expansion.terms:
        out.write(f"  A({rows},{t.cols}) = {t.block}\n")
    out.write("cofactors:\n")
    for t in expansion.terms:
        out.write(f"  Å({rows},{t.cols}) = {t.cofactor}\n")
    out.write(f"det N({n}) = {expansion.total}\n")
    if show_zero:
        out.write(f"({len(expansion.terms) - len(nonzero)} zero blocks included)\n")


def cmd_expand(args, out: TextIO) -> int:
    if args.n < 1:
        raise ConfigError("--n must be >= 1")
    A = materialize(build_pell_matrix(args.n))
    try:
        expansion = laplace_expand(A, args.rows, include_zero_blocks=args.show_zero_terms)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ExpansionTooLarge):
            raise
        raise ConfigError(str(exc)) from None
    if args.format == "json":
        _emit_json(out, expansion.to_json())
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(["cols", "block", "cofactor", "product"])
        for t in expansion.terms:
            w.writerow([" ".join(map(str, t.cols)), t.block, t.cofactor, t.product])
        w.writerow(["total", "", "", expansion.total])
    else:
        _narrate(args.n, expansion, args.show_zero_terms, out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _suite_reports(suite: str, lo: int, hi: int, engine: Engine) -> Iterator[IdentityReport]:
    if suite == "convolution":
        for n in range(lo, hi + 1):
            for k in range(1, n + 1):
                if engine is Engine.LAPLACE and k >= 2:
                    yield verify_convolution(n, k, Engine.LAPLACE)
                else:
                    yield verify_convolution(n, k)
    elif suite == "doubling":
        for n in range(lo, hi + 1):
            use = Engine.LAPLACE if engine is Engine.LAPLACE and n >= 2 else Engine.RECURRENCE
            yield verify_doubling(n, use)
    elif suite == "det-equation":
        det_engine = Engine.BAREISS if engine is Engine.BAREISS else Engine.CONTINUANT
        for n in range(lo, hi + 1):
            yield verify_det_equation(n, det_engine)
    elif suite == "cofactor-tables":
        for n in range(lo, hi + 1):
            for table in Table:
                if n >= TABLE_MIN_N[table]:
                    yield from verify_cofactor_tables(n, table)


def cmd_verify(args, out: TextIO) -> int:
    suites = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    hi = args.to
    engine = Engine(args.engine)
    plan = []
    for suite in suites:
        lo = args.start if args.start is not None else SUITE_MIN_N[suite]
        if lo < SUITE_MIN_N[suite]:
            if args.suite != "all":
                raise ConfigError(f"{suite} needs --from >= {SUITE_MIN_N[suite]}")
            lo = SUITE_MIN_N[suite]
        if hi < lo:
            if args.suite != "all":
                raise ConfigError(f"empty range [{lo}, {hi}] for {suite}")
            continue
        plan.append((suite, lo, hi))

    total = passed = 0
    failures: list[dict] = []
    discrepancies: list[dict] = []
    writer = _csv_writer(out) if args.format == "csv" else None
    if writer:
        writer.writerow(["suite", "label", "parameters", "lhs", "rhs", "engine", "verdict"])
    for suite, lo, hi_ in plan:
        for report in _suite_reports(suite, lo, hi_, engine):
            total += 1
            if report.verdict:
                passed += 1
            elif report.identity_id.value == "cofactor_table":
                discrepancies.append(report.to_json())
            else:
                failures.append(report.to_json())
            if args.format == "json":
                _emit_json(out, report.to_json())
            elif writer:
                params = ";".join(f"{k}={v}" for k, v in report.parameters.items())
                writer.writerow(
                    [suite, report.label, params, report.lhs, report.rhs, report.engine.value, report.verdict]
                )
            elif not report.verdict or args.verbose:
                mark = "ok " if report.verdict else "MISMATCH"
                params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
                out.write(f"{mark} {suite} {report.label} ({params}): {report.lhs} vs {report.rhs}\n")

    summary = {
        "suites": [s for s, _, _ in plan],
        "total": total,
        "passed": passed,
        "failures": len(failures),
        "paper_discrepancies": discrepancies,
    }
    if args.format == "json":
        _emit_json(out, {"summary": summary})
    elif args.format == "text":
        out.write(f"{passed}/{total} passed, {len(failures)} identity failures\n")
        if discrepancies:
            out.write("paper-discrepancy section:\n")
            for d in discrepancies:
                out.write(f"  {d['label']} {d['parameters']}\n")
    return EXIT_FAILURE if failures else EXIT_OK


# -- bench -------------------------------------------------------------------

def _digits(z: GaussInt) -> int:
    return len(str(max(abs(z.re), abs(z.im))))


def bench_rows(sizes: Iterable[int], engines: Iterable[str], repeat: int = 1) -> Iterator[dict]:
    engines = list(engines)
    for n in sizes:
        spec = build_pell_matrix(n)
        dense = None
        values: dict[str, GaussInt] = {}
        rows = []
        for engine in engines:
            limit = BENCH_LIMITS[engine]
            if limit is not None and n > limit:
                rows.append({"engine": engine, "n": n, "status": "skipped", "seconds": None, "digits": None})
                continue
            if engine != "continuant" and dense is None:
                dense = materialize(spec)
            best = math.inf
            for _ in range(repeat):
                t0 = time.perf_counter()
                value = _determinant(engine, lambda: dense, spec)
                best = min(best, time.perf_counter() - t0)
            values[engine] = value
            rows.append({"engine": engine, "n": n, "status": "ok", "seconds": best, "digits": _digits(value)})
        agree = len(set(values.values())) <= 1
        for row in rows:
            row["agree"] = agree
            row["det"] = values[row["engine"]].to_json() if row["engine"] in values and n <= 64 else None
            yield row


def cmd_bench(args, out: TextIO) -> int:
    for e in args.engines:
        if e not in DET_ENGINES:
            raise ConfigError(f"unknown engine {e!r}")
    if any(n < 1 for n in args.sizes):
        raise ConfigError("sizes must be >= 1")
    writer = _csv_writer(out) if args.format == "csv" else None
    if writer:
        writer.writerow(["engine", "n", "status", "seconds", "digits", "agree"])
    all_agree = True
    for row in bench_rows(args.sizes, args.engines, args.repeat):
        all_agree &= row["agree"]
        if args.format == "json":
            _emit_json(out, row)
        elif writer:
            writer.writerow([row[k] for k in ("engine", "n", "status", "seconds", "digits", "agree")])
        else:
            secs = "-" if row["seconds"] is None else f"{row['seconds']:.6f}s"
            digits = "-" if row["digits"] is None else row["digits"]
            out.write(f"{row['engine']:>12} n={row['n']:<6} {row['status']:>8} {secs:>12} digits={digits}\n")
    return EXIT_OK if all_agree else EXIT_FAILURE


# -- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pellmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("pell", help="emit P_0..P_max")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--min", type=int, default=0)
    p.add_argument("--via", choices=("recurrence", "det"), default="recurrence")
    add_format(p)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("det", help="determinant of N(n) or of a JSON matrix")
    p.add_argument("--n", type=int)
    p.add_argument("--matrix", help="JSON file: array of arrays of {re, im} objects or literals")
    p.add_argument("--engine", choices=DET_ENGINES, default="bareiss")
    p.add_argument("--rows", type=_index_set, help="row set for the laplace engine (default 1)")
    p.add_argument("--show-matrix", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("expand", help="generalized Laplace expansion of N(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rows", type=_index_set, required=True)
    p.add_argument("--show-zero-terms", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="identity verification sweeps")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--from", dest="start", type=int)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--engine", choices=("recurrence", "laplace", "continuant", "bareiss"), default="recurrence")
    p.add_argument("--verbose", action="store_true", help="text format: list passing reports too")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time determinant engines on N(n)")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--engines", type=lambda s: s.split(","), default=["continuant", "bareiss"])
    p.add_argument("--repeat", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ExpansionTooLarge as exc:
        print(f"pellmat: guard tripped: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, IndexError, OSError) as exc:
        print(f"pellmat: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

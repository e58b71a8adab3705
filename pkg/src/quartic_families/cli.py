"""Command-line entry point.

Exit codes: 0 success, 1 a verification or fidelity check failed,
2 bad usage or malformed input.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import contextmanager

from . import derivation as dv
from .exact_arith import upoly
from .oracle import EnumerationBounds, coverage_report, enumerate_solutions
from .solutions import (
    FamilyCorruptError,
    TupleFormatError,
    check_tuple,
    generate,
    read_tuples,
    to_json,
    write_csv,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _methods(selector: str) -> list[int]:
    return [1, 2, 3] if selector == "all" else [int(selector)]


def _format(args) -> str:
    if args.format:
        return args.format
    return "json" if args.output else "text"


@contextmanager
def _sink(args):
    if args.output:
        with open(args.output, "w", newline="") as fh:
            yield fh
    else:
        yield sys.stdout


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _in_var(coeffs, var: str = "q") -> str:
    pieces = []
    for k in range(len(coeffs) - 1, -1, -1):
        poly = coeffs[k]
        if not poly:
            continue
        body = upoly.format_poly(poly)
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if mono:
            body = mono if body == "1" else f"({body})*{mono}"
        pieces.append(body)
    if not pieces:
        return "0"
    out = pieces[0]
    for body in pieces[1:]:
        out += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
    return out


def _trace_json(tr: dv.DerivationTrace) -> dict:
    qc = tr.quartic
    return {
        "sign": qc.sign,
        "alpha": str(qc.alpha),
        "beta": str(qc.beta),
        "gamma": str(qc.gamma),
        "delta": str(qc.delta),
        "p_solution": str(tr.p_solution),
        "quadratic_condition": _in_var(tr.condition),
        "deflated_roots": [str(r) for r in tr.deflated_roots],
        "residual_factor": _in_var(tr.residual),
        "p": str(tr.p),
        "q": str(tr.q),
        "x": str(tr.x),
    }


def cmd_derive(args, out) -> int:
    fmt = _format(args)
    records = []
    for n in _methods(args.method):
        m = dv.get_method(n)
        rat = dv.derive(m.template, m.plan)
        lam = m.paper_lambda if args.mode == "paper" else None
        fam = dv.clear_denominators(rat, lam, mode=args.mode, reduce_content=args.reduce_content)
        records.append((m, rat, fam))
    if fmt == "json":
        objs = []
        for m, rat, fam in records:
            obj = fam.to_json()
            obj["trace"] = _trace_json(rat.trace)
            obj["rational"] = {k: str(v) for k, v in rat.components().items()}
            objs.append(obj)
        _dump(objs[0] if len(objs) == 1 else objs, out)
        return EXIT_OK
    for m, rat, fam in records:
        tr = _trace_json(rat.trace)
        out.write(f"== {m.name} ({fam.mode} mode) ==\n")
        for name in ("X", "Y", "R", "S"):
            out.write(f"  {name} = {m.template.forms[name]}\n")
        out.write(f"quartic in x (sign {tr['sign']:+d}):\n")
        for key in ("alpha", "beta", "gamma", "delta"):
            out.write(f"  {key} = {tr[key]}\n")
        out.write(f"linear-term condition: {tr['p_solution']}\n")
        out.write(f"quadratic-term condition: {tr['quadratic_condition']} = 0\n")
        out.write(f"  deflated roots: {', '.join(tr['deflated_roots']) or 'none'}\n")
        out.write(f"  residual factor: {tr['residual_factor']}\n")
        out.write(f"p(t) = {tr['p']}\nq(t) = {tr['q']}\nx(t) = {tr['x']}\n")
        out.write("rational family:\n")
        for k, v in rat.components().items():
            out.write(f"  {k} = {v}\n")
        out.write(f"integer family (lambda = {fam.lam}):\n")
        for k, v in fam.components().items():
            out.write(f"  {k} = {upoly.format_poly(v)}\n")
        out.write("identity X^4 - Y^4 - R^2 + S^2 = 0: verified\n\n")
    return EXIT_OK


def cmd_generate(args, out) -> int:
    if args.t_min > args.t_max:
        raise UsageError(f"empty t-range: --t-min {args.t_min} > --t-max {args.t_max}")
    fmt = _format(args)
    rows = []
    for n in _methods(args.method):
        fam = dv.integer_family(n, args.mode)
        rows += generate(fam, args.t_min, args.t_max, args.skip_degenerate)
    # Re-verify at the emission boundary.
    if not all(check_tuple(*s.values()) for s in rows):
        print("error: generated tuple failed verification", file=sys.stderr)
        return EXIT_FAIL
    multi = args.method == "all"
    if fmt == "json":
        _dump(to_json(rows), out)
    elif fmt == "csv":
        if multi:
            buf = io.StringIO()
            write_csv(rows, buf)
            lines = buf.getvalue().splitlines()
            out.write("method," + lines[0] + "\n")
            for s, line in zip(rows, lines[1:]):
                out.write(f"{s.source},{line}\n")
        else:
            write_csv(rows, out)
    else:
        for s in rows:
            tag = " degenerate" if s.degenerate else ""
            out.write(f"{s.source} t={s.t}: X={s.X} Y={s.Y} R={s.R} S={s.S} ok{tag}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        rows = read_tuples(text)
    except TupleFormatError as exc:
        raise UsageError(str(exc)) from None
    verdicts = [check_tuple(*r) for r in rows]
    failed = verdicts.count(False)
    if (args.format or "text") == "json":
        _dump(
            {
                "rows": len(rows),
                "failed": failed,
                "results": [
                    {"row": i, "X": str(r[0]), "Y": str(r[1]), "R": str(r[2]), "S": str(r[3]), "pass": ok}
                    for i, (r, ok) in enumerate(zip(rows, verdicts), start=1)
                ],
            },
            out,
        )
    else:
        for i, (r, ok) in enumerate(zip(rows, verdicts), start=1):
            out.write(f"row {i}: {'PASS' if ok else 'FAIL'} {','.join(map(str, r))}\n")
        out.write(f"{len(rows)} rows, {failed} failed\n")
    return EXIT_OK if not failed else EXIT_FAIL


def _bounds(args) -> EnumerationBounds:
    try:
        return EnumerationBounds(args.max_x, args.max_s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args, out) -> int:
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    sset = enumerate_solutions(_bounds(args), workers=args.workers)
    if _format(args) == "json":
        _dump({"bounds": sset.bounds.to_json(), "tuples": [[str(c) for c in k] for k in sset.keys()]}, out)
    else:
        sset.write_csv(out)
    return EXIT_OK


def cmd_coverage(args, out) -> int:
    if args.t_bound < 0:
        raise UsageError("--t-bound must be nonnegative")
    sset = enumerate_solutions(_bounds(args), workers=args.workers)
    fams = [dv.integer_family(n, args.mode) for n in _methods(args.method)]
    report = coverage_report(sset, fams, args.t_bound)
    if _format(args) == "json":
        _dump(report.to_json(), out)
    else:
        out.write(report.format_text() + "\n")
    return EXIT_OK


def cmd_check_paper(args, out) -> int:
    try:
        refs = dv.load_paper_reference(args.reference)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load reference data: {exc}") from None
    reports = []
    for n in _methods(args.method):
        key = f"method-{n}"
        if key not in refs:
            raise UsageError(f"reference data has no entry for {key}")
        reports.append(dv.compare_with_paper(dv.integer_family(n, "paper"), refs[key]))
    if _format(args) == "json":
        _dump([r.to_json() for r in reports], out)
    else:
        for r in reports:
            out.write(r.format_text() + "\n")
    return EXIT_OK if all(r.status == "MATCH" for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartic-families",
        description="Parametric solution families of X^4 - Y^4 = R^2 - S^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, method=True, mode=True):
        if method:
            p.add_argument("--method", choices=["1", "2", "3", "all"], default="all")
        if mode:
            p.add_argument("--mode", choices=list(dv.MODES), default="paper")
        p.add_argument("--format", choices=formats)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("derive", help="derive families and print the trace")
    common(p, ["text", "json"])
    p.add_argument("--reduce-content", action="store_true",
                   help="divide out integer content admissible under (g, g, g^2, g^2) scaling")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("generate", help="evaluate integer families over a t-range")
    common(p, ["text", "csv", "json"])
    p.add_argument("--t-min", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--skip-degenerate", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check tuples from a CSV or JSON file")
    p.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
    p.add_argument("--format", choices=["text", "json"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="all canonical solutions with X <= max-x")
    common(p, ["text", "csv", "json"], method=False, mode=False)
    p.add_argument("--max-x", type=int, required=True)
    p.add_argument("--max-s", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coverage", help="which enumerated solutions the families reach")
    common(p, ["text", "json"])
    p.add_argument("--max-x", type=int, required=True)
    p.add_argument("--max-s", type=int)
    p.add_argument("--t-bound", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("check-paper", help="compare derived families with the published ones")
    common(p, ["text", "json"], mode=False)
    p.add_argument("--reference", help="alternative reference data file")
    p.set_defaults(func=cmd_check_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with _sink(args) as out:
            return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (dv.DerivationError, FamilyCorruptError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

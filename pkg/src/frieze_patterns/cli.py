"""Command line entry point.

Exit status: 0 success, 1 a check came out negative (``verify``,
``glide-check``), 2 usage error, 3 domain or parse error, 4 a theorem
violation (a bug).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import core
from .core import DomainError, ParseError, TheoremViolation, ZigZag, format_rational
from .ensemble import p_map, surjectivity_report
from .enumeration import SearchConfig, default_bound, enumerate_arithmetic_yfriezes, search_diagonals
from .frieze import enumerate_friezes, frieze_violations, verify_frieze
from .render import render
from .yfrieze import check_glide_symmetry, verify_yfrieze, y_knit_horizontal, y_knit_vertical

EXIT_OK, EXIT_FAILED_CHECK, EXIT_USAGE, EXIT_DOMAIN, EXIT_THEOREM = 0, 1, 2, 3, 4


def _strip_dict(s: core.Strip) -> dict:
    return {
        "kind": "strip",
        "pattern": s.kind,
        "closed": False,
        "period": s.period,
        "rows": [[format_rational(v) for v in row] for row in s.rows],
    }


def _emit_pattern(obj, out: str) -> None:
    if out == "json":
        if isinstance(obj, core.Strip):
            print(json.dumps(_strip_dict(obj)))
        else:
            print(core.serialize(obj))
    else:
        sys.stdout.write(render(obj))


def _load(path: str) -> core.PatternGrid:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", path) from None
    return core.deserialize(text)


def _diag_line(diag) -> str:
    return ",".join(format_rational(v) for v in diag)


def cmd_knit_vertical(args) -> int:
    values = core.parse_rational_list(args.first_row)
    result = y_knit_vertical(values, args.period, args.max_rows)
    _emit_pattern(result, args.out)
    if isinstance(result, core.Strip):
        print(f"open strip: no closing row within {args.max_rows} rows", file=sys.stderr)
    return EXIT_OK


def cmd_knit_horizontal(args) -> int:
    values = core.parse_rational_list(args.values)
    dirs = [d.strip() for d in args.dirs.split(",") if d.strip()] if args.dirs else ["SE"] * (args.width - 1)
    if len(values) != args.width:
        raise DomainError(f"--width {args.width} needs {args.width} values, got {len(values)}")
    z = ZigZag(args.width, tuple(values), tuple(dirs), args.start)
    _emit_pattern(y_knit_horizontal(z), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.file)
    if g.kind == "yfrieze":
        report = verify_yfrieze(g).to_dict()
    else:
        bad = frieze_violations(g)
        report = {
            "valid": verify_frieze(g),
            "width": g.width,
            "violations": [{"row": r, "column": k} for r, k in bad],
        }
    report["kind"] = g.kind
    if args.out == "json":
        print(json.dumps(report))
    else:
        status = "valid" if report["valid"] else "INVALID"
        print(f"{g.kind} width {report['width']}: {status}, {len(report['violations'])} diamond violations")
        for v in report["violations"]:
            print(f"  diamond W=(row {v['row']}, col {v['column']})")
    return EXIT_OK if report["valid"] else EXIT_FAILED_CHECK


def cmd_glide_check(args) -> int:
    ok = check_glide_symmetry(_load(args.file))
    print(json.dumps({"glide_symmetric": ok}) if args.out == "json" else str(ok).lower())
    return EXIT_OK if ok else EXIT_FAILED_CHECK


def cmd_render(args) -> int:
    sys.stdout.write(render(_load(args.file), args.columns))
    return EXIT_OK


def cmd_enumerate_friezes(args) -> int:
    friezes = enumerate_friezes(args.width, max_width=args.max_width)
    if args.out == "count":
        print(len(friezes))
    elif args.out == "json":
        print(json.dumps([core.to_dict(f.grid) for f in friezes]))
    else:
        for idx, f in enumerate(friezes):
            print(f"# frieze {idx}")
            sys.stdout.write(render(f))
    return EXIT_OK


def cmd_enumerate_yfriezes(args) -> int:
    bound = args.bound if args.bound is not None else default_bound(args.width)
    cfg = SearchConfig(args.width, bound, args.jobs)
    if args.out == "json":
        found = enumerate_arithmetic_yfriezes(cfg)
        print(json.dumps({
            "width": args.width,
            "complete_up_to_bound": bound,
            "count": len(found),
            "diagonals": [_diag_line(f.diagonal()) for f in found],
            "patterns": [core.to_dict(f.grid) for f in found],
        }))
        return EXIT_OK
    diags = search_diagonals(cfg)
    print(f"complete_up_to_bound: {bound}", file=sys.stderr)
    if args.out == "count":
        print(len(diags))
    else:
        for d in diags:
            print(_diag_line(d))
    return EXIT_OK


def cmd_pmap(args) -> int:
    friezes = enumerate_friezes(args.width, max_width=max(args.width, 10))
    if args.all:
        chosen = list(enumerate(friezes))
    else:
        if not 0 <= args.frieze_index < len(friezes):
            raise DomainError(f"--frieze-index must be in 0..{len(friezes) - 1}")
        chosen = [(args.frieze_index, friezes[args.frieze_index])]
    if args.out == "json":
        print(json.dumps([
            {"index": i, "frieze": core.to_dict(f.grid), "yfrieze": core.to_dict(p_map(f).grid)}
            for i, f in chosen
        ]))
    elif args.out == "diagonals":
        for i, f in chosen:
            print(f"{i}: {_diag_line(p_map(f).diagonal())}")
    else:
        for i, f in chosen:
            print(f"# frieze {i}")
            sys.stdout.write(render(f))
            print("# p-map")
            sys.stdout.write(render(p_map(f)))
    return EXIT_OK


def cmd_surjectivity(args) -> int:
    bound = args.bound if args.bound is not None else default_bound(args.width)
    report = surjectivity_report(args.width, bound, args.jobs)
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    verdict = "no counterexample" if report.consistent else f"{len(report.missing)} COUNTEREXAMPLES"
    print(
        f"width {args.width}, bound {bound}: image {report.image_size}, "
        f"enumerated {report.enumerated_size}, {verdict}, {len(report.bound_escapes)} bound escapes",
        file=sys.stderr,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frieze-patterns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("knit-vertical", help="knit a Y-frieze downward from its first row")
    p.add_argument("--first-row", required=True, help="comma separated rationals, one period")
    p.add_argument("--period", type=int, default=None)
    p.add_argument("--max-rows", type=int, default=100)
    p.add_argument("--out", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_knit_vertical)

    p = sub.add_parser("knit-horizontal", help="knit a Y-frieze from values on a zig-zag")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--values", required=True)
    p.add_argument("--dirs", default=None, help="n-1 of SE/SW (default: all SE)")
    p.add_argument("--start", type=int, default=0, help="column of the row-1 value")
    p.add_argument("--out", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_knit_horizontal)

    for verb, func, helptext in (
        ("verify", cmd_verify, "check every diamond of a pattern file"),
        ("glide-check", cmd_glide_check, "check the glide symmetry of a pattern file"),
    ):
        p = sub.add_parser(verb, help=helptext)
        p.add_argument("file")
        p.add_argument("--out", choices=["text", "json"], default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("render", help="print a pattern file in staggered layout")
    p.add_argument("file")
    p.add_argument("--columns", type=int, default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate-friezes", help="all arithmetic friezes of a width")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--max-width", type=int, default=10)
    p.add_argument("--out", choices=["count", "json", "ascii"], default="count")
    p.set_defaults(func=cmd_enumerate_friezes)

    p = sub.add_parser("enumerate-yfriezes", help="bounded search for arithmetic Y-friezes")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", choices=["json", "diagonals", "count"], default="diagonals")
    p.set_defaults(func=cmd_enumerate_yfriezes)

    p = sub.add_parser("pmap", help="apply the p-map to enumerated friezes")
    p.add_argument("--width", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--frieze-index", type=int)
    which.add_argument("--all", action="store_true")
    p.add_argument("--out", choices=["ascii", "json", "diagonals"], default="ascii")
    p.set_defaults(func=cmd_pmap)

    p = sub.add_parser("surjectivity", help="compare the p-map image with a bounded search")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="report file (default: stdout)")
    p.set_defaults(func=cmd_surjectivity)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem violation (bug): {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (DomainError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``gsys check|run|simulate|fmt FILE``.

Exit codes: 0 success, 1 parse/validation (or query) error, 2 when
``--assert`` is given and some query evaluates to false.
"""
import argparse
import json
import sys
from pathlib import Path

from .config import parse_config
from .errors import GSysError
from .speclang import parse, pretty_print, run_query, validate
from .speclang.render import config_json
from .system import iterate


def _load(path):
    text = Path(path).read_text(encoding="utf-8")
    return parse(text)


def _fail(path, err):
    sep = "" if err.span else " "
    print(f"{path}:{sep}{err}", file=sys.stderr)
    return 1


def cmd_check(args):
    try:
        doc = _load(args.file)
        w = validate(doc)
    except GSysError as e:
        return _fail(args.file, e)
    print(f"{args.file}: ok ({len(doc.items)} items, {len(w.queries)} queries)")
    return 0


def cmd_run(args):
    try:
        w = validate(_load(args.file))
    except GSysError as e:
        return _fail(args.file, e)
    names = [args.query] if args.query else list(w.queries)
    any_false = False
    results = []
    for name in names:
        try:
            r = run_query(w, name, max_enum=args.max_enum)
        except GSysError as e:
            return _fail(args.file, e)
        if r.holds is False:
            any_false = True
        results.append(r)
        if not args.json:
            status = "" if r.holds is None else ("  true" if r.holds else "  false")
            print(f"{name} [{r.kind}]{status}")
            if r.value is not None or r.witness is not None:
                body = r.to_json()
                detail = {k: body[k] for k in ("value", "witness") if k in body}
                line = json.dumps(detail, ensure_ascii=False)
                if len(line) > 240 and not args.verbose:
                    line = line[:237] + "..."
                print("    " + line)
    if args.json:
        out = [r.to_json() for r in results]
        print(json.dumps(out[0] if args.query else out, indent=2, ensure_ascii=False))
    return 2 if args.assert_ and any_false else 0


def cmd_simulate(args):
    try:
        w = validate(_load(args.file))
        if args.system not in w.systems:
            raise GSysError(f"unknown system {args.system!r}")
        s = w.systems[args.system]
        g = parse_config(args.init, s.magma)
        trace = iterate(s, g, args.steps)
    except GSysError as e:
        return _fail(args.file, e)
    if args.json:
        print(json.dumps([config_json(c, s.magma) for c in trace], indent=2))
    else:
        for t, c in enumerate(trace):
            print(f"{t}: {c.render(s.magma)}")
    return 0


def cmd_fmt(args):
    try:
        doc = _load(args.file)
    except GSysError as e:
        return _fail(args.file, e)
    sys.stdout.write(pretty_print(doc))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="gsys", description="Query engine for finite G-systems.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="parse and validate a .gsys file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("run", help="run the queries of a .gsys file")
    r.add_argument("file")
    r.add_argument("--query", help="run only this query")
    r.add_argument("--json", action="store_true", help="emit JSON results")
    r.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit with status 2 if any query is false")
    r.add_argument("-v", "--verbose", action="store_true", help="do not truncate witnesses")
    r.add_argument("--max-enum", type=int, default=None,
                   help="per-query enumeration cap (default: $GSYS_MAX_ENUM or 1000000)")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("simulate", help="iterate a system from an initial configuration")
    s.add_argument("file")
    s.add_argument("--system", required=True)
    s.add_argument("--init", required=True, help='e.g. "a=1,b=0"')
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_simulate)

    f = sub.add_parser("fmt", help="print the canonical formatting of a .gsys file")
    f.add_argument("file")
    f.set_defaults(func=cmd_fmt)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Run every query of every corpus file and print a one-line verdict each.

    python3 scripts/run_corpus.py [corpus_dir]
"""
import sys
from pathlib import Path

from gsys.errors import GSysError
from gsys.speclang import parse, run_query, validate


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent.parent / "corpus")
    bad = 0
    for path in sorted(root.glob("*.gsys")):
        try:
            w = validate(parse(path.read_text()))
            for name in w.queries:
                r = run_query(w, name)
                verdict = "-" if r.holds is None else str(r.holds).lower()
                print(f"{path.name:24s} {name:28s} {r.kind:12s} {verdict:6s} "
                      f"{r.stats['configs_enumerated']:>8d} configs {r.stats['millis']:>8.1f} ms")
        except GSysError as e:
            bad += 1
            print(f"{path.name}: {e}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

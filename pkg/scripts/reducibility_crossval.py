"""Decide reducibility and both quadruple criteria for every transition of
(Z/2)^{a,b} under three covers; write the agreement report and the
counterexample file.

    python3 scripts/reducibility_crossval.py [--out artifacts]
"""
import argparse
import json
import time

from gsys.crossval import crossvalidate, write_artifacts


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="artifacts")
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep = crossvalidate()
    report, cex = write_artifacts(rep, args.out)
    print(json.dumps(rep.summary(), indent=2))
    print(f"wrote {report} and {cex} in {time.perf_counter() - t0:.2f}s")
    for d in rep.disagreements[:3]:
        print("example disagreement:", json.dumps(d))


if __name__ == "__main__":
    main()

"""Random check that coupling distributes over pointwise combination:
(a . a') * (b . b') == (a * b) . (a' * b').

    python3 scripts/distributivity_random.py [--n 1000] [--seed 0]
"""
import argparse
import random
import time
from collections import Counter

from gsys.config import Config, enumerate_configs
from gsys.coupling import couple
from gsys.magma import builtin_magma, make_magma
from gsys.system import make_system, pointwise_combine, systems_equal

MAGMAS = [builtin_magma("cyclic", 2), builtin_magma("cyclic", 4),
          make_magma("eabc", [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], name="V4"),
          builtin_magma("chain_join", 3)]
POOL = ("a", "b", "c")


def random_system(rng, m, X):
    return make_system(m, X, {g: Config(X, tuple(rng.randrange(m.size) for _ in X))
                              for g in enumerate_configs(m, X)})


def random_cover(rng):
    Z = rng.sample(POOL, rng.randint(1, 3))
    while True:
        X = tuple(z for z in Z if rng.random() < 0.6)
        Y = tuple(z for z in Z if z not in X or rng.random() < 0.5)
        if X and Y:
            return X, Y


def run(n=1000, seed=0):
    rng = random.Random(seed)
    failures, per_magma = [], Counter()
    for k in range(n):
        m = MAGMAS[k % len(MAGMAS)]
        X, Y = random_cover(rng)
        a, a2 = random_system(rng, m, X), random_system(rng, m, X)
        b, b2 = random_system(rng, m, Y), random_system(rng, m, Y)
        lhs = couple(pointwise_combine(a, a2), pointwise_combine(b, b2))
        rhs = pointwise_combine(couple(a, b), couple(a2, b2))
        per_magma[m.name] += 1
        r = systems_equal(lhs, rhs)
        if not r:
            failures.append((m.name, X, Y, r.witness))
    return failures, per_magma


def main():
    ap = argparse.ArgumentParser(description="random distributivity check")
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    failures, per = run(args.n, args.seed)
    print(f"{args.n} instances {dict(per)}: {len(failures)} failures "
          f"in {time.perf_counter() - t0:.2f}s")
    for f in failures[:5]:
        print("  ", f)


if __name__ == "__main__":
    main()

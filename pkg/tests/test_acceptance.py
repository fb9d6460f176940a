"""Acceptance criteria, one test each.  Every test prints a single
``[PASS]``/``[FAIL]`` line, also when run under pytest's output capture.

    pytest tests/test_acceptance.py -v
    python3 tests/test_acceptance.py
"""
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from gsys.atoms import cause_holds, dep_holds, export_team, fd_holds
from gsys.classical import (embed, equivalence_check, initial_state, one_hot_ok,
                            random_model)
from gsys.config import ConfigSet, translate
from gsys.coupling import check_closure_condition1, check_closure_condition2, couple, is_closed, star_set
from gsys.crossval import crossvalidate, write_artifacts
from gsys.reduce import recheck_certificate, verify_decomposition
from gsys.speclang import parse, pretty_print, run_query, validate
from gsys.system import identity_system, iterate, pointwise_combine, step, systems_equal

sys.path.insert(0, str(Path(__file__).resolve().parent))
from _gen import (COMM_ASSOC, JOIN3, KLEIN, LEFT2, Z2, Z3, Z4, all_configs,  # noqa: E402
                  random_system, random_team, random_varsets)
from malformed_cases import MALFORMED  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
ARTIFACTS = ROOT / "artifacts"
POOL = ["a", "b", "c"]


def report(n, title, ok, detail, capsys=None):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} -- {detail}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


# 1 -------------------------------------------------------------------------
def criterion_1():
    t0 = time.perf_counter()
    w = validate(parse((CORPUS / "theorem3.gsys").read_text()))
    gamma, gamma2 = w.systems["gamma"], w.systems["gamma2"]
    cover = w.covers["C"]
    r1 = run_query(w, "gamma_reducible")
    r2 = run_query(w, "gamma2_reducible")
    r3 = run_query(w, "gamma2_emergent")
    elapsed = time.perf_counter() - t0
    ok_decomp = r1.holds and bool(verify_decomposition(gamma, r1.value))
    ok_cert = r2.holds is False and recheck_certificate(gamma2, cover, r2.witness)
    ok = ok_decomp and ok_cert and r3.holds is True and elapsed < 1.0
    return ok, (f"decomposition verified={ok_decomp}, square refuted with re-checked "
                f"{r2.witness.kind} certificate={ok_cert}, emergent={r3.holds}, {elapsed:.3f}s")


# 2 -------------------------------------------------------------------------
def criterion_2(n=1000, seed=2):
    rng = random.Random(seed)
    magmas = [Z2, Z4, KLEIN, JOIN3]
    t0 = time.perf_counter()
    bad = 0
    for k in range(n):
        m = magmas[k % 4]
        X, Y = random_varsets(rng, POOL)
        a, a2 = random_system(rng, m, X), random_system(rng, m, X)
        b, b2 = random_system(rng, m, Y), random_system(rng, m, Y)
        lhs = couple(pointwise_combine(a, a2), pointwise_combine(b, b2))
        rhs = pointwise_combine(couple(a, b), couple(a2, b2))
        bad += not systems_equal(lhs, rhs)
    elapsed = time.perf_counter() - t0
    return bad == 0 and elapsed < 10, f"{n} instances, {bad} failures, {elapsed:.2f}s"


# 3 -------------------------------------------------------------------------
def criterion_3(pairs=500, triples=200, seed=3):
    rng = random.Random(seed)
    comm = assoc = 0
    for _ in range(pairs):
        m = rng.choice(COMM_ASSOC)
        X, Y = random_varsets(rng, POOL)
        sx, sy = random_system(rng, m, X), random_system(rng, m, Y)
        comm += not systems_equal(couple(sx, sy), couple(sy, sx))
    for _ in range(triples):
        m = rng.choice(COMM_ASSOC)
        X, Y = random_varsets(rng, POOL)
        _, W = random_varsets(rng, POOL)
        s1, s2, s3 = (random_system(rng, m, V) for V in (X, Y, W))
        assoc += not systems_equal(couple(couple(s1, s2), s3), couple(s1, couple(s2, s3)))
    return comm == 0 and assoc == 0, (f"{pairs} pairs: {comm} non-commuting, "
                                      f"{triples} triples: {assoc} non-associating")


# 4 -------------------------------------------------------------------------
def _orbit_closure(s, seeds, M, right):
    m = s.magma
    ts = all_configs(m, M)
    seen, todo = set(), list(seeds)
    while todo:
        g = todo.pop()
        if g in seen:
            continue
        seen.add(g)
        todo.append(step(s, g))
        todo.extend(translate(t, g, m, right=right) for t in ts)
    return ConfigSet(s.vars, seen)


def criterion_4(n=200, n_classical=50, seed=4):
    rng = random.Random(seed)
    magmas = COMM_ASSOC + [LEFT2]
    violations = cond2_fail = 0
    for _ in range(n):
        m = rng.choice(magmas)
        X, Y = random_varsets(rng, POOL)
        sx, sy = random_system(rng, m, X), random_system(rng, m, Y)
        M = tuple(v for v in X if v in Y)
        H0 = _orbit_closure(sx, rng.sample(all_configs(m, X), rng.randint(1, 2)), M, right=True)
        H1 = _orbit_closure(sy, rng.sample(all_configs(m, Y), rng.randint(1, 2)), M, right=False)
        cond2_fail += not check_closure_condition2(H0, H1, M, m)
        violations += not is_closed(star_set(H0, H1), couple(sx, sy))
    c_viol = c1_image = c1_literal = 0
    for _ in range(n_classical):
        emb = embed(random_model(rng))
        H0, H1 = emb.env.domain, emb.agent.domain
        c1_image += bool(check_closure_condition1(H0, H1, emb.env, emb.agent, image_only=True))
        c1_literal += bool(check_closure_condition1(H0, H1, emb.env, emb.agent))
        c_viol += not is_closed(star_set(H0, H1), emb.coupled)
    ok = violations == 0 and cond2_fail == 0 and c_viol == 0 and c1_image == n_classical
    return ok, (f"{n} orbit-closure instances: {violations} closure violations "
                f"(translation invariance failed {cond2_fail}); {n_classical} embeddings: "
                f"{c_viol} closure violations, image-restricted condition held {c1_image}/"
                f"{n_classical}, literal condition held {c1_literal}/{n_classical}")


# 5 -------------------------------------------------------------------------
def criterion_5():
    t0 = time.perf_counter()
    rep = crossvalidate()
    report_path, cex_path = write_artifacts(rep, ARTIFACTS)
    elapsed = time.perf_counter() - t0
    ok = not rep.inconsistent and elapsed < 60
    return ok, (f"{rep.total} decisions, three-way agreement {rep.agree}/{rep.total} "
                f"({rep.agreement_rate:.1%}), {len(rep.disagreements)} disagreements written to "
                f"{cex_path.relative_to(ROOT)}, {len(rep.inconsistent)} internal inconsistencies, "
                f"{elapsed:.2f}s")


# 6 -------------------------------------------------------------------------
def criterion_6():
    from itertools import combinations
    deviations = checks = 0
    for n in (1, 2, 3):
        X = tuple(POOL[:n])
        s = identity_system(Z2, X)
        subs = [c for r in range(n + 1) for c in combinations(X, r)]
        for A in subs:
            for B in subs:
                checks += 2
                deviations += bool(dep_holds(s, A, B)) != set(B).issubset(A)
                deviations += bool(cause_holds(s, A, B)) != bool(set(A) & set(B))
    return deviations == 0, f"{checks} atom evaluations, {deviations} deviations"


# 7 -------------------------------------------------------------------------
def criterion_7(n=300, seed=7):
    rng = random.Random(seed)
    disagree = 0
    holds = 0
    for _ in range(n):
        m = rng.choice([Z2, Z3])
        X = tuple(POOL[:rng.randint(1, 3)])
        s = random_system(rng, m, X)
        C = random_team(rng, m, X, p=rng.random())
        A = tuple(x for x in X if rng.random() < 0.5)
        B = tuple(x for x in X if rng.random() < 0.5)
        fast = dep_holds(s, A, B, C)
        slow = dep_holds(s, A, B, C, method="naive")
        fd = fd_holds(export_team(s, C, A, B), ["A"], ["B"])
        holds += fast.holds
        disagree += not (fast == slow and fast.holds == fd)
    return disagree == 0, f"{n} systems ({holds} dependent), {disagree} disagreements"


# 8 -------------------------------------------------------------------------
def criterion_8(n=50, steps=20, seed=8):
    rng = random.Random(seed)
    trace_fail = onehot_fail = closed_fail = 0
    first = None
    for _ in range(n):
        m = random_model(rng)
        emb = embed(m)
        inits = [initial_state(m, i, x) for i in m.I for x in m.X]
        r = equivalence_check(m, steps, inits, emb)
        if not r:
            trace_fail += 1
            first = first or r.witness
        onehot_fail += not all(one_hot_ok(emb, g) for st in inits
                               for g in iterate(emb.coupled, emb.encode(st), steps))
        closed_fail += not is_closed(emb.coupled.domain, emb.coupled)
    ok = trace_fail == 0 and onehot_fail == 0 and closed_fail == 0
    detail = (f"{n} models x {steps} steps: {trace_fail} trace mismatches, "
              f"{onehot_fail} one-hot violations, {closed_fail} closure failures")
    if first is not None:
        detail += (f"; first mismatch at step {first['step']} (agent reads the sensor latched "
                   f"one step earlier)")
    return ok, detail


# 9 -------------------------------------------------------------------------
def criterion_9(tmp_dir: Path):
    files = sorted(CORPUS.glob("*.gsys"))
    not_fix = [p.name for p in files
               if parse(pretty_print(parse(p.read_text()))) != parse(p.read_text())]
    bad_span = bad_exit = 0
    for name, (text, exc, (line, col)) in MALFORMED.items():
        try:
            validate(parse(text))
            bad_span += 1
        except exc as e:
            bad_span += e.span is None or e.span[:2] != (line, col)
        p = tmp_dir / f"{name}.gsys"
        p.write_text(text)
        rc = subprocess.run([sys.executable, "-m", "gsys", "check", str(p)],
                            capture_output=True, text=True).returncode
        bad_exit += rc == 0
    demos = {"tetrapus_demo.gsys", "newtonian_demo.gsys"} <= {p.name for p in files}
    ok = len(files) >= 20 and demos and not not_fix and len(MALFORMED) >= 15 \
        and bad_span == 0 and bad_exit == 0
    return ok, (f"{len(files)} corpus files, {len(not_fix)} not at fixpoint; {len(MALFORMED)} "
                f"malformed cases, {bad_span} wrong spans, {bad_exit} zero exit codes")


# -- pytest entry points -----------------------------------------------------
CRITERIA = [
    (1, "gamma reducible, square not, square emergent", criterion_1),
    (2, "coupling distributes over pointwise combination", criterion_2),
    (3, "coupling commutes and associates", criterion_3),
    (4, "star sets of closed sets are closed", criterion_4),
    (5, "reducibility vs quadruple criteria, exhaustive", criterion_5),
    (6, "identity-system atom laws", criterion_6),
    (7, "dependence oracles agree", criterion_7),
    (8, "classical embedding reproduces classical traces", criterion_8),
]


@pytest.mark.parametrize("n,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(n, title, fn, capsys):
    ok, detail = fn()
    assert report(n, title, ok, detail, capsys), detail


def test_criterion_9(tmp_path, capsys):
    ok, detail = criterion_9(tmp_path)
    assert report(9, "parser round-trip and malformed inputs", ok, detail, capsys), detail


if __name__ == "__main__":
    import tempfile
    results = []
    for n, title, fn in CRITERIA:
        results.append(report(n, title, *fn()))
    with tempfile.TemporaryDirectory() as d:
        results.append(report(9, "parser round-trip and malformed inputs", *criterion_9(Path(d))))
    sys.exit(0 if all(results) else 1)

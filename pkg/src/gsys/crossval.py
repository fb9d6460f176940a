"""Exhaustive cross-validation of the reducibility decision against the two
quadruple criteria, over every transition function of a small space."""
import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from .config import Config, enumerate_configs
from .magma import Z2
from .reduce import Cover, decide_reducible, theorem_condition2, theorem_condition3
from .system import make_system

COVERS = (Cover(("a",), ("a", "b")), Cover(("a", "b"), ("b",)), Cover(("a",), ("b",)))


@dataclass
class CrossValReport:
    total: int = 0
    agree: int = 0
    inconsistent: list = field(default_factory=list)   # positive decisions failing verification
    disagreements: list = field(default_factory=list)
    by_cover: dict = field(default_factory=dict)

    @property
    def agreement_rate(self) -> float:
        return self.agree / self.total if self.total else 1.0

    def summary(self) -> dict:
        return {"total": self.total, "three_way_agreement": self.agree,
                "agreement_rate": round(self.agreement_rate, 4),
                "internal_inconsistencies": len(self.inconsistent),
                "disagreements": len(self.disagreements), "by_cover": self.by_cover}


def all_systems(m=Z2, Z=("a", "b")):
    """Every transition function G^Z -> G^Z, in lexicographic table order."""
    dom = list(enumerate_configs(m, Z))
    for outs in product(dom, repeat=len(dom)):
        yield make_system(m, Z, dict(zip(dom, outs)))


def _table_text(s):
    return {",".join(map(str, g.values)): ",".join(map(str, s(g).values))
            for g in enumerate_configs(s.magma, s.vars)}


def crossvalidate(covers=COVERS) -> CrossValReport:
    rep = CrossValReport()
    systems = list(all_systems())
    for cover in covers:
        key = f"{{{','.join(cover.X)}}}|{{{','.join(cover.Y)}}}"
        counts = {"reducible": 0, "condition2": 0, "condition3": 0, "agree": 0}
        for s in systems:
            rep.total += 1
            try:
                r = decide_reducible(s, cover)
            except AssertionError as e:
                rep.inconsistent.append({"cover": key, "table": _table_text(s), "error": str(e)})
                continue
            c2 = theorem_condition2(s, cover)
            c3 = theorem_condition3(s, cover)
            verdicts = (r.holds, c2.holds, c3.holds)
            for name, v in zip(("reducible", "condition2", "condition3"), verdicts):
                counts[name] += v
            if len(set(verdicts)) == 1:
                rep.agree += 1
                counts["agree"] += 1
            else:
                rep.disagreements.append({
                    "cover": key, "table": _table_text(s),
                    "reducible": r.holds, "condition2": c2.holds, "condition3": c3.holds,
                    "condition2_witness": _witness_text(c2.witness),
                    "condition3_witness": _witness_text(c3.witness)})
        rep.by_cover[key] = counts
    return rep


def _witness_text(w):
    if w is None:
        return None
    return {k: (",".join(f"{x}={v}" for x, v in zip(c.vars, c.values)) if isinstance(c, Config) else c)
            for k, c in w.items()}


def write_artifacts(rep: CrossValReport, out_dir) -> tuple:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = out / "criteria_agreement.json"
    report.write_text(json.dumps(rep.summary(), indent=2) + "\n")
    cex = out / "criteria_counterexamples.json"
    cex.write_text(json.dumps({"inconsistent": rep.inconsistent,
                               "disagreements": rep.disagreements}, indent=2) + "\n")
    return report, cex

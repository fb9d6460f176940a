"""Dependence and causal-influence atoms evaluated over teams."""
from dataclasses import dataclass

from .config import ConfigSet, enumerate_configs, restrict, substitute
from .errors import BadParameter, OutOfDomain, UnknownVariable
from .system import GSystem, step
from .verdict import Verdict

AtomResult = Verdict


def _check_vars(s: GSystem, *sets):
    for S in sets:
        for x in S:
            if x not in s.vars:
                raise UnknownVariable(f"variable {x!r} not in {s.vars}")


def _team(s: GSystem, C):
    if C is None:
        return s.domain_configs()
    if set(C.vars) != set(s.vars):
        raise UnknownVariable(f"team over {C.vars}, system over {s.vars}")
    return iter(C)


def dep_holds(s: GSystem, A, B, C: ConfigSet = None, method: str = "bucket") -> Verdict:
    """Does A determine B over the team C?

    No ``g0, g1`` in C agree on A while their successors differ on B.  The
    witness of a failure is the first such pair in enumeration order (both
    methods return the same pair).
    """
    A, B = tuple(A), tuple(B)
    _check_vars(s, A, B)
    rows = _team(s, C)
    if method == "bucket":
        seen = {}
        for g in rows:
            key = restrict(g, A).values
            out = restrict(step(s, g), B).values
            if key not in seen:
                seen[key] = (g, out)
            elif seen[key][1] != out:
                return Verdict(False, (seen[key][0], g))
        return Verdict(True)
    if method == "naive":
        done = []
        for g in rows:
            ga, out = restrict(g, A), restrict(step(s, g), B)
            for h, ha, hout in done:
                if ha == ga and hout != out:
                    return Verdict(False, (h, g))
            done.append((g, ga, out))
        return Verdict(True)
    raise BadParameter(f"unknown method {method!r}")


def cause_holds(s: GSystem, A, B, C: ConfigSet = None) -> Verdict:
    """Does A causally influence B in C?

    For every g in C some intervention ``s'`` on A must change the successor
    on B.  Witness on success: ``{g: s'}`` with the first such ``s'`` per g;
    on failure: the first g admitting none.  Interventions that leave a
    restricted domain are not admissible.
    """
    A, B = tuple(A), tuple(B)
    _check_vars(s, A, B)
    found = {}
    for g in _team(s, C):
        base = restrict(step(s, g), B)
        for sp in enumerate_configs(s.magma, A):
            try:
                moved = restrict(step(s, substitute(g, sp)), B)
            except OutOfDomain:
                continue
            if moved != base:
                found[g] = sp
                break
        else:
            return Verdict(False, g)
    return Verdict(True, found)


@dataclass(frozen=True)
class TeamTable:
    columns: tuple
    rows: tuple


def export_team(s: GSystem, C: ConfigSet, A, B, mode: str = "two-column") -> TeamTable:
    """Team-semantics view of a transition over C.

    ``concat``: columns ``(x, 0)`` for the input and ``(x, 1)`` for the
    successor, one row per g.  ``two-column``: rows ``(g↾A, step(g)↾B)``.
    """
    A, B = tuple(A), tuple(B)
    _check_vars(s, A, B)
    if mode == "concat":
        cols = tuple((x, 0) for x in s.vars) + tuple((x, 1) for x in s.vars)
        rows = []
        for g in C:
            g = g.reorder(s.vars)
            rows.append(g.values + step(s, g).values)
        return TeamTable(cols, tuple(rows))
    if mode == "two-column":
        rows = tuple((restrict(g, A).values, restrict(step(s, g), B).values) for g in C)
        return TeamTable(("A", "B"), rows)
    raise BadParameter(f"unknown export mode {mode!r}")


def fd_holds(table: TeamTable, lhs, rhs) -> bool:
    """Functional dependency lhs -> rhs in a team table (columns by name)."""
    li = [table.columns.index(c) for c in lhs]
    ri = [table.columns.index(c) for c in rhs]
    seen = {}
    for row in table.rows:
        key = tuple(row[i] for i in li)
        val = tuple(row[i] for i in ri)
        if seen.setdefault(key, val) != val:
            return False
    return True

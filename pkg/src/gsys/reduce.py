"""Reducibility to a two-set cover, decomposition search, the two
reducibility criteria on quadruples of configurations, and emergence
witnesses.

Naming used throughout: for a cover ``(X, Y)`` of Z, ``P = X \\ Y``,
``M = X ∩ Y`` and ``Q = Y \\ X``; a configuration over Z is split into its
``(a, m, b)`` parts over ``(P, M, Q)``.
"""
from dataclasses import dataclass
from itertools import product
from typing import Any, Optional

from .atoms import dep_holds
from .config import (Config, ConfigSet, check_cap, count_configs, difference,
                     enumerate_configs, intersection, merge, restrict, union)
from .coupling import couple
from .errors import BadParameter, SearchInfeasible, VarSetMismatch
from .system import GSystem, compose_all, systems_equal
from .verdict import Verdict

SEARCH_CAP = 2 ** 16


@dataclass(frozen=True)
class Cover:
    X: tuple
    Y: tuple

    @property
    def Z(self) -> tuple:
        return union(self.X, self.Y)


def make_cover(s: GSystem, X, Y) -> Cover:
    X, Y = tuple(X), tuple(Y)
    if set(X) | set(Y) != set(s.vars):
        raise VarSetMismatch(f"{X} ∪ {Y} does not cover {s.vars}")
    return Cover(X, Y)


@dataclass(frozen=True)
class Decomposition:
    sx: GSystem
    sy: GSystem


@dataclass(frozen=True)
class Certificate:
    """Why a system is not reducible.

    ``kind`` is ``"side"`` (detail: a dep-violating pair for a coordinate
    outside the overlap), ``"rectangle"`` (detail: the ``(a, m, b)`` parts
    violating the rectangle identity) or ``"factor"`` (detail: the overlap
    value ``m`` at which no factorisation exists).
    """
    kind: str
    coordinate: str
    detail: Any


class _Parts:
    """Index bookkeeping for splitting Z-configs into (a, m, b)."""

    def __init__(self, s: GSystem, cover: Cover):
        Z = s.vars
        if set(cover.Z) != set(Z):
            raise VarSetMismatch(f"cover {cover.X} | {cover.Y} does not cover {Z}")
        X = tuple(x for x in Z if x in cover.X)
        Y = tuple(y for y in Z if y in cover.Y)
        self.Z, self.X, self.Y = Z, X, Y
        self.P = difference(X, Y)
        self.M = intersection(X, Y)
        self.Q = difference(Y, X)
        self.m = s.magma
        pos = {z: i for i, z in enumerate(Z)}
        self.slots = [(0, self.P.index(z)) if z in self.P else
                      (1, self.M.index(z)) if z in self.M else
                      (2, self.Q.index(z)) for z in Z]
        self.pos = pos

    def join(self, a, mid, b) -> tuple:
        parts = (a, mid, b)
        return tuple(parts[k][i] for k, i in self.slots)

    def space(self, V):
        return list(product(range(self.m.size), repeat=len(V)))


def _table(s: GSystem, cap=None) -> dict:
    if s.domain is not None:
        raise BadParameter("reducibility is decided for systems on the full space G^Z")
    check_cap(count_configs(s.magma, s.vars), cap)
    f = s.raw()
    return {g.values: f(g.values) for g in enumerate_configs(s.magma, s.vars, cap)}


def _factor_search(F_at, A_space, B_space, m):
    """Find ``u: A -> G``, ``v: B -> G`` with ``F_at(a, b) == u[a] • v[b]``.

    Enumerates candidate tables for the smaller side and solves the other
    side pointwise.  Returns ``(u, v)`` dicts or None.
    """
    n = m.size
    tab = m.table
    swap = len(B_space) < len(A_space)
    outer, inner = (B_space, A_space) if swap else (A_space, B_space)
    if n ** len(outer) > SEARCH_CAP:
        raise SearchInfeasible(f"{n ** len(outer)} candidate factor tables exceed {SEARCH_CAP}")
    for cand in product(range(n), repeat=len(outer)):
        fixed = dict(zip(outer, cand))
        solved = {}
        for y in inner:
            for c in range(n):
                if swap:
                    ok = all(tab[c][fixed[x]] == F_at(y, x) for x in outer)
                else:
                    ok = all(tab[fixed[x]][c] == F_at(x, y) for x in outer)
                if ok:
                    solved[y] = c
                    break
            else:
                break
        else:
            return (solved, fixed) if swap else (fixed, solved)
    return None


def decide_reducible(s: GSystem, cover: Cover, method: str = "auto", cap=None) -> Verdict:
    """Decide whether ``s = α * β`` for some α over X and β over Y.

    On success the witness is a verified :class:`Decomposition` (canonical:
    reference parts ``a*``, ``b*`` are the least configurations).  On failure
    it is a :class:`Certificate`.  ``method`` selects the overlap procedure:
    ``"rectangle"`` (abelian groups only), ``"search"`` (any magma) or
    ``"auto"``.
    """
    pt = _Parts(s, cover)
    m = pt.m
    if method == "auto":
        method = "rectangle" if m.is_abelian_group else "search"
    if method == "rectangle" and not m.is_abelian_group:
        raise BadParameter("the rectangle condition needs an abelian group")
    F = _table(s, cap)
    Z = pt.Z

    for side, V in (("X", pt.P), ("Y", pt.Q)):
        A = pt.X if side == "X" else pt.Y
        for z in V:
            r = dep_holds(s, A, (z,))
            if not r:
                return Verdict(False, Certificate("side", z, r.witness))

    A_sp, M_sp, B_sp = pt.space(pt.P), pt.space(pt.M), pt.space(pt.Q)
    a0, b0 = A_sp[0], B_sp[0]
    tab = m.table
    u, v = {}, {}  # u[z][(a, mid)], v[z][(mid, b)]
    for z in pt.M:
        k = pt.pos[z]
        u[z], v[z] = {}, {}
        for mid in M_sp:
            def F_at(a, b, mid=mid):
                return F[pt.join(a, mid, b)][k]
            if method == "rectangle":
                inv = m.inverses
                ref = F_at(a0, b0)
                for a in A_sp:
                    for b in B_sp:
                        if tab[F_at(a, b)][ref] != tab[F_at(a, b0)][F_at(a0, b)]:
                            return Verdict(False, Certificate("rectangle", z, {
                                "a": Config(pt.P, a), "m": Config(pt.M, mid), "b": Config(pt.Q, b)}))
                for a in A_sp:
                    u[z][(a, mid)] = F_at(a, b0)
                for b in B_sp:
                    v[z][(mid, b)] = tab[F_at(a0, b)][inv[ref]]
            elif method == "search":
                found = _factor_search(F_at, A_sp, B_sp, m)
                if found is None:
                    return Verdict(False, Certificate("factor", z, {"m": Config(pt.M, mid)}))
                for a in A_sp:
                    u[z][(a, mid)] = found[0][a]
                for b in B_sp:
                    v[z][(mid, b)] = found[1][b]
            else:
                raise BadParameter(f"unknown method {method!r}")

    alpha, beta = {}, {}
    for a in A_sp:
        for mid in M_sp:
            out = F[pt.join(a, mid, b0)]
            d = {z: out[pt.pos[z]] for z in pt.P}
            d.update({z: u[z][(a, mid)] for z in pt.M})
            key = Config(pt.P + pt.M, a + mid).reorder(pt.X)
            alpha[key] = Config(tuple(d), tuple(d.values())).reorder(pt.X)
    for mid in M_sp:
        for b in B_sp:
            out = F[pt.join(a0, mid, b)]
            d = {z: out[pt.pos[z]] for z in pt.Q}
            d.update({z: v[z][(mid, b)] for z in pt.M})
            key = Config(pt.M + pt.Q, mid + b).reorder(pt.Y)
            beta[key] = Config(tuple(d), tuple(d.values())).reorder(pt.Y)
    sx = GSystem(m, pt.X, table={k.values: w.values for k, w in alpha.items()}, name=f"{s.name}_X")
    sy = GSystem(m, pt.Y, table={k.values: w.values for k, w in beta.items()}, name=f"{s.name}_Y")
    d = Decomposition(sx, sy)
    check = verify_decomposition(s, d)
    if not check:
        raise AssertionError(f"internal error: constructed decomposition fails at {check.witness}")
    return Verdict(True, d)


def verify_decomposition(s: GSystem, d: Decomposition) -> Verdict:
    return systems_equal(s, couple(d.sx, d.sy))


def recheck_certificate(s: GSystem, cover: Cover, cert: Certificate) -> bool:
    """Independently confirm that a certificate refutes reducibility."""
    pt = _Parts(s, cover)
    m = pt.m
    f = s.raw()
    k = pt.pos[cert.coordinate]
    if cert.kind == "side":
        g0, g1 = (g.reorder(pt.Z) for g in cert.detail)
        A = pt.X if cert.coordinate in pt.P else pt.Y
        return restrict(g0, A) == restrict(g1, A) and f(g0.values)[k] != f(g1.values)[k]
    if cert.kind == "rectangle":
        if not m.is_abelian_group:
            return False
        a, mid, b = (cert.detail[x].values for x in ("a", "m", "b"))
        a0 = (0,) * len(pt.P)
        b0 = (0,) * len(pt.Q)
        F = lambda a_, b_: f(pt.join(a_, mid, b_))[k]
        return m.table[F(a, b)][F(a0, b0)] != m.table[F(a, b0)][F(a0, b)]
    if cert.kind == "factor":
        mid = cert.detail["m"].values
        A_sp, B_sp = pt.space(pt.P), pt.space(pt.Q)
        n = m.size
        # brute force over both factor tables
        for us in product(range(n), repeat=len(A_sp)):
            for vs in product(range(n), repeat=len(B_sp)):
                if all(m.table[us[i]][vs[j]] == f(pt.join(a, mid, b))[k]
                       for i, a in enumerate(A_sp) for j, b in enumerate(B_sp)):
                    return False
        return True
    return False


def _quadruples(pt: _Parts):
    """All (g0, g1, g0', g1') with g0↾Y=g0'↾Y, g1↾Y=g1'↾Y, g0↾X=g1↾X,
    g0'↾X=g1'↾X, as Z-ordered value tuples, in enumeration order."""
    A_sp, M_sp, B_sp = pt.space(pt.P), pt.space(pt.M), pt.space(pt.Q)
    for a in A_sp:
        for mid in M_sp:
            for b in B_sp:
                g0 = pt.join(a, mid, b)
                for b1 in B_sp:
                    g1 = pt.join(a, mid, b1)
                    for a1 in A_sp:
                        yield g0, g1, pt.join(a1, mid, b), pt.join(a1, mid, b1)


def _quad_witness(pt, quad, which):
    names = ("g0", "g1", "g0'", "g1'")
    d = {n: Config(pt.Z, q) for n, q in zip(names, quad)}
    d["implication"] = which
    return d


def theorem_condition2(s: GSystem, cover: Cover, cap=None) -> Verdict:
    """Equality-transfer criterion on constrained quadruples.

    For every quadruple, ``γ(g0)=γ(g1) ⟹ γ(g0')=γ(g1')`` and
    ``γ(g0)=γ(g0') ⟹ γ(g1)=γ(g1')``.  Witness: the first violating quadruple.
    """
    pt = _Parts(s, cover)
    F = _table(s, cap)
    for quad in _quadruples(pt):
        g0, g1, h0, h1 = (F[q] for q in quad)
        if g0 == g1 and h0 != h1:
            return Verdict(False, _quad_witness(pt, quad, 1))
        if g0 == h0 and g1 != h1:
            return Verdict(False, _quad_witness(pt, quad, 2))
    return Verdict(True)


def theorem_condition3(s: GSystem, cover: Cover, cap=None) -> Verdict:
    """Dependence-transfer criterion on constrained quadruples.

    ``dep(X; X∩Y)`` over ``{g0, g1}`` implies it over ``{g0', g1'}``, and
    ``dep(Y; X∩Y)`` over ``{g0, g0'}`` implies it over ``{g1, g1'}``.
    """
    pt = _Parts(s, cover)
    _table(s, cap)
    Z, M = pt.Z, pt.M

    def dep(A, p, q):
        return dep_holds(s, A, M, ConfigSet(Z, (Config(Z, p), Config(Z, q)))).holds

    for quad in _quadruples(pt):
        g0, g1, h0, h1 = quad
        if dep(pt.X, g0, g1) and not dep(pt.X, h0, h1):
            return Verdict(False, _quad_witness(pt, quad, 1))
        if dep(pt.Y, g0, h0) and not dep(pt.Y, g1, h1):
            return Verdict(False, _quad_witness(pt, quad, 2))
    return Verdict(True)


def verify_emergence(s: GSystem, factors, cover: Cover) -> Verdict:
    """Is ``s = γ1 ∘ ... ∘ γk`` with every γi reducible to the cover?

    Composition applies the last factor first.  Witness on success: the
    list of decompositions; on failure a dict naming the failing stage.
    """
    factors = list(factors)
    if not factors:
        raise BadParameter("need at least one factor")
    decomps = []
    for i, f in enumerate(factors):
        r = decide_reducible(f, cover)
        if not r:
            return Verdict(False, {"stage": "factor", "index": i, "certificate": r.witness})
        decomps.append(r.witness)
    eq = systems_equal(s, compose_all(factors))
    if not eq:
        return Verdict(False, {"stage": "composition", "config": eq.witness})
    return Verdict(True, decomps)

"""Coupling of G-systems, glued coupling, star-sets and closure checks."""
from dataclasses import dataclass, field
from typing import Mapping

from .config import (Config, ConfigSet, difference, enumerate_configs, intersection,
                     restrict, translate, union)
from .errors import BadGluing, ClosureViolation, MagmaMismatch
from .system import GSystem, Op, make_system, rename
from .verdict import Verdict


def _domain_or_full(s: GSystem) -> ConfigSet:
    return s.domain if s.domain is not None else ConfigSet.full(s.magma, s.vars)


def _coupled_raw(sx: GSystem, sy: GSystem, Z):
    """The coupled transition on Z-ordered value tuples."""
    X, Y = sx.vars, sy.vars
    px = [Z.index(x) for x in X]
    py = [Z.index(y) for y in Y]
    fx, fy = sx.raw(), sy.raw()
    tab = sx.magma.table
    # for each z: (position in α output or -1, position in β output or -1)
    plan = [(X.index(z) if z in X else -1, Y.index(z) if z in Y else -1) for z in Z]

    def f(values):
        a = fx(tuple(values[i] for i in px))
        b = fy(tuple(values[i] for i in py))
        out = []
        for i, j in plan:
            if j < 0:
                out.append(a[i])
            elif i < 0:
                out.append(b[j])
            else:
                out.append(tab[a[i]][b[j]])
        return tuple(out)

    return f


def couple(sx: GSystem, sy: GSystem, name="") -> GSystem:
    """``sx * sy`` over ``X ∪ Y``: α off the overlap on the X side, β on the
    Y side, and ``α(g↾X)(z) • β(g↾Y)(z)`` on the overlap.

    Restricted domains couple on ``H0 * H1``, whose closure under the coupled
    transition is verified directly.
    """
    if sx.magma != sy.magma:
        raise MagmaMismatch("coupled systems must share the magma")
    m = sx.magma
    Z = union(sx.vars, sy.vars)
    if sx.domain is None and sy.domain is None:
        if sx.rules is not None and sy.rules is not None:
            fns = dict(sx.fns)
            fns.update(sy.fns)
            rules = {}
            for z in Z:
                if z not in sy.vars:
                    rules[z] = sx.rules[z]
                elif z not in sx.vars:
                    rules[z] = sy.rules[z]
                else:
                    rules[z] = Op(sx.rules[z], sy.rules[z])
            return make_system(m, Z, rules, fns=fns, name=name)
        f = _coupled_raw(sx, sy, Z)
        table = {g.values: f(g.values) for g in enumerate_configs(m, Z)}
        return GSystem(m, Z, table=table, name=name)
    H = star_set(_domain_or_full(sx), _domain_or_full(sy))
    f = _coupled_raw(sx, sy, H.vars)
    table = {g.values: f(g.values) for g in H}
    s = GSystem(m, H.vars, table=table, domain=H, name=name)
    closed = is_closed(H, s)
    if not closed:
        g, out = closed.witness
        raise ClosureViolation(f"H0*H1 is not closed under the coupling: {g} -> {out}",
                               witness=closed.witness)
    return s


@dataclass(frozen=True)
class GluingMap:
    """A bijection ``zeta: A -> B`` from variables of X to variables of Y."""
    zeta: Mapping = field(default_factory=dict)

    @property
    def source(self) -> tuple:
        return tuple(self.zeta)

    @property
    def target(self) -> tuple:
        return tuple(self.zeta.values())


def glue_renaming(X, Y, gluing: GluingMap) -> dict:
    """Names of Y's variables in the pushout.

    A glued variable takes the name of its X-side partner; an unglued Y
    variable whose name clashes with X gets primes appended.
    """
    zeta = dict(gluing.zeta)
    if any(a not in X for a in zeta):
        raise BadGluing(f"gluing source {tuple(zeta)} not within {tuple(X)}")
    if any(b not in Y for b in zeta.values()):
        raise BadGluing(f"gluing target {tuple(zeta.values())} not within {tuple(Y)}")
    if len(set(zeta.values())) != len(zeta):
        raise BadGluing("gluing map is not injective")
    back = {b: a for a, b in zeta.items()}
    taken = set(X)
    renaming = {}
    for y in Y:
        if y in back:
            renaming[y] = back[y]
            continue
        new = y
        while new in taken or new in Y and new != y:
            new += "'"
        taken.add(new)
        renaming[y] = new
    return renaming


def couple_glued(sx: GSystem, sy: GSystem, gluing: GluingMap, name=""):
    """Couple along ``gluing``; returns ``(system, renaming of Y's variables)``."""
    if sx.magma != sy.magma:
        raise MagmaMismatch("coupled systems must share the magma")
    renaming = glue_renaming(sx.vars, sy.vars, gluing)
    return couple(sx, rename(sy, renaming), name=name), renaming


def star_set(H0: ConfigSet, H1: ConfigSet) -> ConfigSet:
    """``{h over X∪Y : h↾X ∈ H0 and h↾Y ∈ H1}``."""
    X, Y = H0.vars, H1.vars
    M = intersection(X, Y)
    extra = difference(Y, X)
    Z = X + extra
    buckets = {}
    for h1 in H1:
        buckets.setdefault(restrict(h1, M).values, []).append(restrict(h1, extra).values)
    out = []
    for h0 in H0:
        for tail in buckets.get(restrict(h0, M).values, ()):
            out.append(Config(Z, h0.values + tail))
    return ConfigSet(Z, out)


def is_closed(H: ConfigSet, s: GSystem) -> Verdict:
    """Does the transition map H into H?  Witness: ``(g, step(g))``."""
    f = s.raw()
    for g in H:
        out = Config(s.vars, f(g.reorder(s.vars).values))
        if out not in H:
            return Verdict(False, (g, out))
    return Verdict(True)


def check_closure_condition1(H0: ConfigSet, H1: ConfigSet, sx: GSystem, sy: GSystem,
                             image_only: bool = False) -> Verdict:
    """Closure of H0 under ``h ↦ h • β(h')↾(X∩Y)`` for every h' in H1, and of
    H1 under ``h' ↦ α(h)↾(X∩Y) • h'`` for every h in H0.

    With ``image_only`` the translated points range over α[H0] (resp. β[H1])
    only, which is all the closure argument for the coupling uses.
    """
    m = sx.magma
    M = intersection(sx.vars, sy.vars)
    if not M:
        return Verdict(True)
    fx, fy = sx.raw(), sy.raw()

    def image(H, s, f):
        return [Config(s.vars, f(h.reorder(s.vars).values)) for h in H]

    targets0 = image(H0, sx, fx) if image_only else list(H0)
    targets1 = image(H1, sy, fy) if image_only else list(H1)
    for hp in H1:
        t = restrict(Config(sy.vars, fy(hp.reorder(sy.vars).values)), M)
        for h in targets0:
            moved = translate(t, h, m, right=True)
            if moved not in H0:
                return Verdict(False, {"side": "X", "point": h, "contributor": hp, "result": moved})
    for h in H0:
        t = restrict(Config(sx.vars, fx(h.reorder(sx.vars).values)), M)
        for hp in targets1:
            moved = translate(t, hp, m)
            if moved not in H1:
                return Verdict(False, {"side": "Y", "point": hp, "contributor": h, "result": moved})
    return Verdict(True)


def check_closure_condition2(H0: ConfigSet, H1: ConfigSet, overlap, m) -> Verdict:
    """Invariance of H0 and H1 under translation by every ``t`` in G^overlap.

    H0 is translated on the right and H1 on the left, matching the order of
    the operands in the coupled overlap coordinate.
    """
    overlap = tuple(overlap)
    if not overlap:
        return Verdict(True)
    for t in enumerate_configs(m, overlap):
        for h in H0:
            moved = translate(t, h, m, right=True)
            if moved not in H0:
                return Verdict(False, {"side": "X", "point": h, "translation": t, "result": moved})
        for h in H1:
            moved = translate(t, h, m)
            if moved not in H1:
                return Verdict(False, {"side": "Y", "point": h, "translation": t, "result": moved})
    return Verdict(True)

"""Validation of parsed documents into live objects, and query execution."""
import copy
import time
from dataclasses import dataclass, field, replace
from typing import Any

from .. import atoms, classical, coupling, reduce, system
from ..config import Config, ConfigSet, varset
from ..errors import (ArityMismatch, GSysError, QueryError, UnboundVariable, UnknownName,
                      UnknownVariable, ValidationError)
from ..limits import counting, enumeration_cap
from ..magma import builtin_magma, make_magma
from .ast import (ClassicalDef, ConfigLit, CoverDef, FnDef, GlueLit, IntLit, ListLit,
                  MagmaBuiltin, MagmaDef, QueryDef, Ref, SystemDef, SystemExpr, TeamDef,
                  VarSetLit)
from .render import to_json


@dataclass
class Workspace:
    magmas: dict = field(default_factory=dict)
    fns: dict = field(default_factory=dict)
    systems: dict = field(default_factory=dict)
    teams: dict = field(default_factory=dict)
    covers: dict = field(default_factory=dict)
    models: dict = field(default_factory=dict)
    queries: dict = field(default_factory=dict)  # name -> (QueryDef, resolved args)


@dataclass
class QueryResult:
    query: str
    kind: str
    holds: Any = None
    value: Any = None
    witness: Any = None
    stats: dict = field(default_factory=dict)
    magma: Any = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {"query": self.query, "kind": self.kind}
        if self.holds is not None:
            out["holds"] = self.holds
        if self.value is not None:
            out["value"] = to_json(self.value, self.magma)
        if self.witness is not None:
            out["witness"] = to_json(self.witness, self.magma)
        out["stats"] = dict(self.stats)
        return out


_NAMESPACE = {MagmaDef: "magma", MagmaBuiltin: "magma", FnDef: "fn", SystemDef: "system",
              SystemExpr: "system", TeamDef: "team", CoverDef: "cover",
              ClassicalDef: "classical", QueryDef: "query"}


def _at(span, exc):
    if exc.span is None:
        exc.span = span
    return exc


def _config(c: ConfigLit, m, vars_=None) -> Config:
    names = varset(x for x, _ in c.pairs)
    g = Config(names, tuple(m.index(v) for _, v in c.pairs))
    if vars_ is not None:
        if set(names) != set(vars_):
            raise UnknownVariable(f"configuration over {names}, expected {tuple(vars_)}", c.span)
        g = g.reorder(vars_)
    return g


def validate(doc) -> Workspace:
    w = Workspace()
    seen = {}
    for it in doc.items:
        key = (_NAMESPACE[type(it)], it.name)
        if key in seen:
            raise ValidationError(f"duplicate {key[0]} name {it.name!r}", it.span)
        seen[key] = it
    for it in doc.items:
        if isinstance(it, QueryDef):
            continue
        try:
            _define(w, it)
        except GSysError as e:
            raise _at(it.span, e)
    for it in doc.items:
        if isinstance(it, QueryDef):
            try:
                w.queries[it.name] = (it, _check_query(w, it))
            except GSysError as e:
                raise _at(it.span, e)
    return w


def _lookup(table, name, what, span):
    if name not in table:
        raise UnknownName(f"unknown {what} {name!r}", span)
    return table[name]


def _define(w: Workspace, it):
    if isinstance(it, MagmaDef):
        w.magmas[it.name] = make_magma(it.elements, it.table, name=it.name)
    elif isinstance(it, MagmaBuiltin):
        args = [_lookup(w.magmas, a, "magma", it.span) if isinstance(a, str) else a
                for a in it.args]
        w.magmas[it.name] = replace(builtin_magma(it.kind, *args), name=it.name)
    elif isinstance(it, FnDef):
        m = _lookup(w.magmas, it.magma, "magma", it.span)
        w.fns[it.name] = system.make_fn(it.name, it.arity, m, it.table)
    elif isinstance(it, SystemDef):
        w.systems[it.name] = _system_def(w, it)
    elif isinstance(it, SystemExpr):
        w.systems[it.name] = _system_expr(w, it)
    elif isinstance(it, TeamDef):
        m = _lookup(w.magmas, it.magma, "magma", it.span)
        V = varset(it.vars)
        w.teams[it.name] = ConfigSet(V, [_config(c, m, V) for c in it.rows])
    elif isinstance(it, CoverDef):
        w.covers[it.name] = reduce.Cover(varset(it.X), varset(it.Y))
    elif isinstance(it, ClassicalDef):
        w.models[it.name] = classical.make_classical(
            it.X, it.U, it.Y, it.I,
            {k: v for k, v in it.f}, {k[0]: v for k, v in it.h},
            {k: v for k, v in it.phi}, {k[0]: v for k, v in it.pi}, name=it.name)


def _system_def(w: Workspace, it: SystemDef):
    m = _lookup(w.magmas, it.magma, "magma", it.span)
    X = varset(it.vars)
    H = None
    if it.domain is not None:
        H = ConfigSet(X, [_config(c, m, X) for c in it.domain])
    if it.table is not None:
        table = {}
        for a, b in it.table:
            table[_config(a, m, X)] = _config(b, m, X)
        return system.make_system(m, X, table, H, name=it.name)
    rules = {}
    for r in it.rules:
        if r.var in rules:
            raise ValidationError(f"second rule for {r.var!r}", r.span)
        if r.var not in X:
            raise UnboundVariable(f"rule for undeclared variable {r.var!r}", r.span)
        try:
            system._check_term(r.term, X, m, w.fns, r.var)
        except GSysError as e:
            raise _at(r.span, e)
        rules[r.var] = r.term
    fns = {k: f for k, f in w.fns.items() if f.magma == m}
    return system.make_system(m, X, rules, H, fns=fns, name=it.name)


def _system_expr(w: Workspace, it: SystemExpr):
    refs = []
    for a in it.args:
        if isinstance(a, Ref):
            refs.append(_lookup(w.systems, a.name, "system", a.span))
        elif not isinstance(a, GlueLit):
            raise ValidationError(f"{it.op} expects system names", a.span)
    want = {"compose": None, "couple": 2, "glue": 2, "combine": 2, "tabulate": 1}[it.op]
    if want is not None and len(refs) != want or want is None and len(refs) < 1:
        raise ArityMismatch(f"{it.op} takes {want or 'one or more'} systems, got {len(refs)}",
                            it.span)
    if it.op == "compose":
        s = system.compose_all(refs)
    elif it.op == "couple":
        s = coupling.couple(*refs)
    elif it.op == "glue":
        glue = [a for a in it.args if isinstance(a, GlueLit)]
        if len(glue) != 1:
            raise ArityMismatch("glue takes two systems and a gluing map", it.span)
        s, _ = coupling.couple_glued(refs[0], refs[1], coupling.GluingMap(dict(glue[0].pairs)))
    elif it.op == "combine":
        s = system.pointwise_combine(*refs)
    else:
        s = system.tabulate(refs[0])
    s = copy.copy(s)
    s.name = it.name
    return s


# -- queries ------------------------------------------------------------------

def _kind_of(w, a):
    if isinstance(a, Ref):
        for kind, table in (("system", w.systems), ("team", w.teams), ("cover", w.covers),
                            ("classical", w.models)):
            if a.name in table:
                return kind
        raise UnknownName(f"unknown name {a.name!r}", a.span)
    return {VarSetLit: "varset", ConfigLit: "config", GlueLit: "glue", IntLit: "int",
            ListLit: "list"}[type(a)]


_SIGNATURES = {
    "dep": [("system", "varset", "varset"), ("system", "varset", "varset", "team")],
    "cause": [("system", "varset", "varset"), ("system", "varset", "varset", "team")],
    "reducible": [("system", "varset", "varset"), ("system", "cover")],
    "emergent": [("system", "list", "varset", "varset"), ("system", "list", "cover")],
    "couple": [("system", "system")],
    "glue": [("system", "system", "glue")],
    "simulate": [("system", "config", "int")],
    "embed_equiv": [("classical", "int")],
    "closed": [("system", "team")],
}


def _check_query(w: Workspace, q: QueryDef):
    kinds = tuple(_kind_of(w, a) for a in q.args)
    if kinds not in _SIGNATURES[q.kind]:
        sigs = " | ".join(f"{q.kind}({', '.join(s)})" for s in _SIGNATURES[q.kind])
        raise ArityMismatch(f"{q.kind}({', '.join(kinds)}) does not match {sigs}", q.span)
    out = []
    sys0 = None
    for a, k in zip(q.args, kinds):
        if k == "system":
            obj = w.systems[a.name]
            sys0 = sys0 or obj
        elif k == "team":
            obj = w.teams[a.name]
            if set(obj.vars) != set(sys0.vars):
                raise UnknownVariable(f"team {a.name} is over {obj.vars}, system over {sys0.vars}",
                                      a.span)
        elif k == "cover":
            obj = w.covers[a.name]
            reduce.make_cover(sys0, obj.X, obj.Y)
        elif k == "classical":
            obj = w.models[a.name]
        elif k == "varset":
            obj = varset(a.names)
            bad = [x for x in obj if x not in sys0.vars]
            if bad:
                raise UnknownVariable(f"{bad[0]!r} is not a variable of {sys0.name}", a.span)
        elif k == "config":
            obj = _config(a, sys0.magma, sys0.vars)
        elif k == "int":
            obj = a.value
        elif k == "glue":
            obj = coupling.GluingMap(dict(a.pairs))
        else:
            obj = []
            for r in a.items:
                if not isinstance(r, Ref):
                    raise ValidationError("expected a list of system names", r.span)
                obj.append(_lookup(w.systems, r.name, "system", r.span))
        out.append(obj)
    if q.kind in ("reducible", "emergent") and kinds[-1] == "varset":
        out = out[:-2] + [reduce.make_cover(sys0, out[-2], out[-1])]
    return out


def run_query(w: Workspace, name: str, max_enum=None) -> QueryResult:
    if name not in w.queries:
        raise UnknownName(f"unknown query {name!r}")
    q, args = w.queries[name]
    t0 = time.perf_counter()
    try:
        with counting() as counter:
            if max_enum is not None:
                with enumeration_cap(max_enum):
                    res = _dispatch(q.kind, args)
            else:
                res = _dispatch(q.kind, args)
    except GSysError as e:
        raise QueryError(name, e) from e
    res.query = name
    res.stats = {"configs_enumerated": counter.configs_enumerated,
                 "millis": round((time.perf_counter() - t0) * 1000, 3)}
    return res


def _dispatch(kind, args) -> QueryResult:
    s = args[0]
    m = getattr(s, "magma", None)
    if kind in ("dep", "cause"):
        fn = atoms.dep_holds if kind == "dep" else atoms.cause_holds
        r = fn(*args)
        return QueryResult("", kind, r.holds, witness=r.witness, magma=m)
    if kind == "reducible":
        r = reduce.decide_reducible(s, args[1])
        if r:
            return QueryResult("", kind, True, value=r.witness, magma=m)
        return QueryResult("", kind, False, witness=r.witness, magma=m)
    if kind == "emergent":
        r = reduce.verify_emergence(s, args[1], args[2])
        if r:
            return QueryResult("", kind, True, value=r.witness, magma=m)
        return QueryResult("", kind, False, witness=r.witness, magma=m)
    if kind == "couple":
        return QueryResult("", kind, value=coupling.couple(*args), magma=m)
    if kind == "glue":
        c, renaming = coupling.couple_glued(*args)
        return QueryResult("", kind, value={"system": c, "renaming": renaming}, magma=m)
    if kind == "simulate":
        return QueryResult("", kind, value=system.iterate(s, args[1], args[2]), magma=m)
    if kind == "embed_equiv":
        model, k = args
        inits = [classical.initial_state(model, i, x) for i in model.I for x in model.X]
        r = classical.equivalence_check(model, k, inits)
        return QueryResult("", kind, r.holds, witness=r.witness)
    if kind == "closed":
        r = coupling.is_closed(args[1], s)
        return QueryResult("", kind, r.holds, witness=r.witness, magma=m)
    raise ValueError(kind)

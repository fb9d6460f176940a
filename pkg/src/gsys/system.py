"""G-systems: a magma, a variable tuple, a transition function and an
optional closed domain.

Transitions come in two representations.  *Rules* give one term per
variable (fast to evaluate, composable symbolically); *tables* map every
domain configuration to its successor (needed by the exhaustive oracles).
:func:`tabulate` bridges the two.
"""
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Callable, Mapping, Optional

from .config import Config, ConfigSet, check_cap, count_configs, enumerate_configs, varset
from .errors import (ArityMismatch, BadParameter, DomainNotClosed, MagmaMismatch,
                     OutOfDomain, UnboundVariable, UnknownName, VarSetMismatch)
from .limits import bump
from .magma import Magma
from .verdict import Verdict


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    element: str


@dataclass(frozen=True)
class Op:
    """``left • right`` in the ambient magma."""
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple


def term_vars(t) -> set:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Const):
        return set()
    if isinstance(t, Op):
        return term_vars(t.left) | term_vars(t.right)
    return set().union(*(term_vars(a) for a in t.args))


def subst_term(t, mapping: Mapping):
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Const):
        return t
    if isinstance(t, Op):
        return Op(subst_term(t.left, mapping), subst_term(t.right, mapping))
    return Call(t.fn, tuple(subst_term(a, mapping) for a in t.args))


def term_str(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return "#" + t.element
    if isinstance(t, Op):
        right = term_str(t.right)
        if isinstance(t.right, Op):
            right = f"({right})"
        return f"{term_str(t.left)} • {right}"
    return f"{t.fn}({', '.join(term_str(a) for a in t.args)})"


@dataclass(frozen=True)
class FnTable:
    """A user-defined k-ary function on the carrier, stored row-major."""
    name: str
    arity: int
    magma: Magma
    values: tuple

    def __call__(self, *args: int) -> int:
        i = 0
        for a in args:
            i = i * self.magma.size + a
        return self.values[i]

    def nested(self):
        """Element names as a nested list (a matrix for arity 2)."""
        n = self.magma.size
        names = [self.magma.elements[v] for v in self.values]

        def build(flat, depth):
            if depth == 1:
                return flat
            step = len(flat) // n
            return [build(flat[i * step:(i + 1) * step], depth - 1) for i in range(n)]

        return build(names, self.arity)


def make_fn(name: str, arity: int, m: Magma, table) -> FnTable:
    """Build a function table from a nested list of element names/indices."""
    if arity < 1:
        raise ArityMismatch(f"function {name} must have arity >= 1")
    flat = []

    def walk(node, depth):
        if depth == 0:
            flat.append(m.index(node))
            return
        if not isinstance(node, (list, tuple)) or len(node) != m.size:
            raise ArityMismatch(f"function {name}/{arity}: table must be nested {m.size}-wide lists")
        for child in node:
            walk(child, depth - 1)

    walk(table, arity)
    return FnTable(name, arity, m, tuple(flat))


def fn_from_callable(name: str, arity: int, m: Magma, f: Callable) -> FnTable:
    return FnTable(name, arity, m, tuple(f(*args) for args in product(range(m.size), repeat=arity)))


# -- systems -----------------------------------------------------------------

class GSystem:
    """A validated G-system.  Build through :func:`make_system`."""

    def __init__(self, magma, vars_, rules=None, table=None, domain=None, fns=None, name=""):
        self.magma = magma
        self.vars = tuple(vars_)
        self.rules = rules
        self.table = table
        self.domain = domain
        self.fns = dict(fns or {})
        self.name = name
        self._compiled = None

    @property
    def is_tabulated(self) -> bool:
        return self.table is not None

    def domain_configs(self, cap=None):
        if self.domain is not None:
            bump(len(self.domain))
            return iter(self.domain)
        return enumerate_configs(self.magma, self.vars, cap)

    def domain_size(self) -> int:
        return len(self.domain) if self.domain is not None else count_configs(self.magma, self.vars)

    def raw(self) -> Callable:
        """The transition on value tuples (in ``self.vars`` order)."""
        if self._compiled is None:
            if self.table is not None:
                table = self.table

                def f(values):
                    try:
                        return table[values]
                    except KeyError:
                        raise OutOfDomain(f"{values} not in the tabulated domain") from None
                self._compiled = f
            else:
                index = {x: i for i, x in enumerate(self.vars)}
                parts = [_compile(self.rules[x], index, self.magma, self.fns) for x in self.vars]
                self._compiled = lambda values: tuple(p(values) for p in parts)
        return self._compiled

    def __call__(self, g: Config) -> Config:
        return step(self, g)

    def __repr__(self):
        kind = "table" if self.is_tabulated else "rules"
        dom = "" if self.domain is None else f", |H|={len(self.domain)}"
        return f"GSystem({self.name or '?'}, vars={self.vars}, {kind}{dom})"


def _compile(t, index, m, fns):
    if isinstance(t, Var):
        i = index[t.name]
        return lambda v: v[i]
    if isinstance(t, Const):
        c = m.index(t.element)
        return lambda v: c
    if isinstance(t, Op):
        left = _compile(t.left, index, m, fns)
        right = _compile(t.right, index, m, fns)
        tab = m.table
        return lambda v: tab[left(v)][right(v)]
    fn = fns[t.fn]
    args = [_compile(a, index, m, fns) for a in t.args]
    return lambda v: fn(*(a(v) for a in args))


def _check_term(t, X, m, fns, owner):
    if isinstance(t, Var):
        if t.name not in X:
            raise UnboundVariable(f"rule for {owner!r} uses undeclared variable {t.name!r}")
    elif isinstance(t, Const):
        m.index(t.element)
    elif isinstance(t, Op):
        _check_term(t.left, X, m, fns, owner)
        _check_term(t.right, X, m, fns, owner)
    elif isinstance(t, Call):
        if t.fn not in fns:
            raise UnknownName(f"rule for {owner!r} calls unknown function {t.fn!r}")
        fn = fns[t.fn]
        if fn.arity != len(t.args):
            raise ArityMismatch(f"{t.fn} has arity {fn.arity}, called with {len(t.args)} arguments")
        if fn.magma != m:
            raise MagmaMismatch(f"function {t.fn} is over a different magma")
        for a in t.args:
            _check_term(a, X, m, fns, owner)
    else:
        raise BadParameter(f"not a term: {t!r}")


def make_system(m: Magma, X, t, H: Optional[ConfigSet] = None, fns=None, name="") -> GSystem:
    """Validate and build a G-system.

    ``t`` is either a rule map ``{var: term}`` or a table ``{Config: Config}``
    covering exactly the domain (``H`` if given, else all of G^X).
    """
    X = varset(X)
    fns = dict(fns or {})
    if H is not None:
        if set(H.vars) != set(X):
            raise VarSetMismatch(f"domain over {H.vars}, system over {X}")
        if H.vars != X:
            H = ConfigSet(X, H)
    t = dict(t)
    if all(isinstance(k, str) for k in t) and t:
        if set(t) != set(X):
            missing = set(X) - set(t)
            extra = set(t) - set(X)
            if extra:
                raise UnboundVariable(f"rules given for undeclared variables {sorted(extra)}")
            raise UnboundVariable(f"no rule for variables {sorted(missing)}")
        for x in X:
            _check_term(t[x], X, m, fns, x)
        s = GSystem(m, X, rules={x: t[x] for x in X}, domain=H, fns=fns, name=name)
    elif not X and not t:
        s = GSystem(m, X, rules={}, domain=H, fns=fns, name=name)
    else:
        table = {}
        for g, out in t.items():
            if not isinstance(g, Config) or not isinstance(out, Config):
                raise BadParameter("table keys and values must be Configs")
            table[g.reorder(X).values] = out.reorder(X).values
        expected = H if H is not None else None
        n = len(H) if H is not None else count_configs(m, X)
        if len(table) != n:
            raise DomainNotClosed(f"table has {len(table)} rows, domain has {n}")
        if expected is not None:
            for key in table:
                if Config(X, key) not in expected:
                    raise DomainNotClosed(f"table row {Config(X, key)} outside the domain")
        for out in table.values():
            if any(not 0 <= v < m.size for v in out):
                raise BadParameter(f"table output {out} leaves the carrier")
        s = GSystem(m, X, table=table, domain=H, fns=fns, name=name)
    if H is not None:
        bad = closure_violation(H, s)
        if bad is not None:
            raise DomainNotClosed(f"domain not closed: {bad[0]} -> {bad[1]}", witness=bad)
    return s


def closure_violation(H: ConfigSet, s: GSystem):
    f = s.raw()
    for g in H:
        out = Config(s.vars, f(g.reorder(s.vars).values))
        if out not in H:
            return g, out
    return None


def system_from_function(m: Magma, X, f: Callable, H=None, name="") -> GSystem:
    """Tabulate an arbitrary Python map ``Config -> Config`` into a system."""
    X = varset(X)
    dom = H if H is not None else enumerate_configs(m, X)
    return make_system(m, X, {g: f(g) for g in dom}, H, name=name)


def step(s: GSystem, g: Config) -> Config:
    if g.vars != s.vars:
        g = g.reorder(s.vars)
    if s.domain is not None and g not in s.domain:
        raise OutOfDomain(f"{g} is outside the domain of {s.name or 'the system'}")
    return Config(s.vars, s.raw()(g.values))


def iterate(s: GSystem, g: Config, k: int) -> list:
    if k < 0:
        raise BadParameter("k must be >= 0")
    trace = [g.reorder(s.vars)]
    for _ in range(k):
        trace.append(step(s, trace[-1]))
    return trace


def _same_magma(a: GSystem, b: GSystem):
    if a.magma != b.magma:
        raise MagmaMismatch(f"{a.name or 'system'} and {b.name or 'system'} use different magmas")


def _same_vars(a: GSystem, b: GSystem):
    if set(a.vars) != set(b.vars) or len(a.vars) != len(b.vars):
        raise VarSetMismatch(f"variable sets differ: {a.vars} vs {b.vars}")


def _merge_fns(a: GSystem, b: GSystem) -> dict:
    fns = dict(a.fns)
    for k, v in b.fns.items():
        if k in fns and fns[k] != v:
            raise BadParameter(f"function name {k!r} bound to two different tables")
        fns[k] = v
    return fns


def align(s: GSystem, X) -> GSystem:
    """The same system listed with variable order ``X``."""
    X = tuple(X)
    if X == s.vars:
        return s
    if set(X) != set(s.vars):
        raise VarSetMismatch(f"cannot align {s.vars} to {X}")
    H = None if s.domain is None else ConfigSet(X, s.domain)
    if s.rules is not None:
        return GSystem(s.magma, X, rules=dict(s.rules), domain=H, fns=s.fns, name=s.name)
    perm = [s.vars.index(x) for x in X]
    table = {tuple(k[i] for i in perm): tuple(v[i] for i in perm) for k, v in s.table.items()}
    return GSystem(s.magma, X, table=table, domain=H, fns=s.fns, name=s.name)


def rename(s: GSystem, mapping: Mapping) -> GSystem:
    """Rename variables (mapping old -> new; unmapped names stay)."""
    new = tuple(mapping.get(x, x) for x in s.vars)
    varset(new)
    H = None
    if s.domain is not None:
        H = ConfigSet(new, (Config(new, g.reorder(s.vars).values) for g in s.domain))
    if s.rules is not None:
        sub = {x: Var(mapping.get(x, x)) for x in s.vars}
        rules = {mapping.get(x, x): subst_term(t, sub) for x, t in s.rules.items()}
        return GSystem(s.magma, new, rules=rules, domain=H, fns=s.fns, name=s.name)
    return GSystem(s.magma, new, table=dict(s.table), domain=H, fns=s.fns, name=s.name)


def _table_over(s: GSystem, f: Callable, H) -> dict:
    dom = H if H is not None else enumerate_configs(s.magma, s.vars)
    return {g.values: f(g.values) for g in dom}


def compose(s2: GSystem, s1: GSystem, name="") -> GSystem:
    """``s2 ∘ s1``: apply s1 first, then s2."""
    _same_magma(s2, s1)
    _same_vars(s2, s1)
    s2 = align(s2, s1.vars)
    H = s1.domain
    if s2.domain is not None and H is None:
        raise VarSetMismatch("cannot compose a restricted system after an unrestricted one")
    if s1.rules is not None and s2.rules is not None and s2.domain is None:
        rules = {x: subst_term(t, s1.rules) for x, t in s2.rules.items()}
        return make_system(s1.magma, s1.vars, rules, H, fns=_merge_fns(s2, s1), name=name)
    f1, f2 = s1.raw(), s2.raw()
    table = _table_over(s1, lambda v: f2(f1(v)), H)
    return _from_raw_table(s1.magma, s1.vars, table, H, name)


def compose_all(systems) -> GSystem:
    """``s_1 ∘ s_2 ∘ ... ∘ s_k`` (the last one is applied first)."""
    systems = list(systems)
    if not systems:
        raise BadParameter("need at least one system")
    return reduce(compose, systems)


def _from_raw_table(m, X, table, H, name) -> GSystem:
    s = GSystem(m, X, table=table, domain=H, name=name)
    if H is not None:
        bad = closure_violation(H, s)
        if bad is not None:
            raise DomainNotClosed(f"domain not closed: {bad[0]} -> {bad[1]}", witness=bad)
    return s


def pointwise_combine(s: GSystem, t: GSystem, name="") -> GSystem:
    """``(α • α')(g)(x) = α(g)(x) • α'(g)(x)``."""
    _same_magma(s, t)
    _same_vars(s, t)
    t = align(t, s.vars)
    if s.domain != t.domain and not (s.domain is None and t.domain is None):
        raise VarSetMismatch("systems have different domains")
    if s.rules is not None and t.rules is not None:
        rules = {x: Op(s.rules[x], t.rules[x]) for x in s.vars}
        return make_system(s.magma, s.vars, rules, s.domain, fns=_merge_fns(s, t), name=name)
    fs, ft = s.raw(), t.raw()
    tab = s.magma.table
    table = _table_over(s, lambda v: tuple(tab[a][b] for a, b in zip(fs(v), ft(v))), s.domain)
    return _from_raw_table(s.magma, s.vars, table, s.domain, name)


def tabulate(s: GSystem, cap=None) -> GSystem:
    if s.domain is None:
        check_cap(count_configs(s.magma, s.vars), cap)
    f = s.raw()
    dom = s.domain if s.domain is not None else enumerate_configs(s.magma, s.vars, cap)
    table = {g.values: f(g.values) for g in dom}
    return GSystem(s.magma, s.vars, table=table, domain=s.domain, fns=s.fns, name=s.name)


def systems_equal(s: GSystem, t: GSystem, cap=None) -> Verdict:
    """Extensional equality; on failure the witness is the first differing config."""
    _same_magma(s, t)
    _same_vars(s, t)
    t = align(t, s.vars)
    if (s.domain is None) != (t.domain is None) or (s.domain is not None and s.domain != t.domain):
        raise VarSetMismatch("systems have different domains")
    fs, ft = s.raw(), t.raw()
    for g in s.domain_configs(cap):
        if fs(g.values) != ft(g.values):
            return Verdict(False, g)
    return Verdict(True)


def identity_system(m: Magma, X, name="id") -> GSystem:
    X = varset(X)
    return make_system(m, X, {x: Var(x) for x in X}, name=name)


def constant_system(m: Magma, X, element, name="") -> GSystem:
    X = varset(X)
    e = m.elements[m.index(element)]
    return make_system(m, X, {x: Const(e) for x in X}, name=name)

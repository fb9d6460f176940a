"""Configurations (elements of G^X), teams, and the operations on them.

A :class:`Config` stores element *indices* in the order of its variable
tuple.  Variable sets are plain tuples of distinct names; their order is the
enumeration order.
"""
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import (EnumerationCapExceeded, NoIdentity, OverlapMismatch,
                     UnknownVariable, BadParameter)
from .limits import bump, max_enum
from .magma import Magma


def varset(names: Iterable[str]) -> tuple:
    names = tuple(names)
    if len(set(names)) != len(names):
        raise BadParameter(f"duplicate variable in {names}")
    return names


def union(X, Y) -> tuple:
    return tuple(X) + tuple(y for y in Y if y not in X)


def intersection(X, Y) -> tuple:
    return tuple(x for x in X if x in Y)


def difference(X, Y) -> tuple:
    return tuple(x for x in X if x not in Y)


@dataclass(frozen=True)
class Config:
    vars: tuple
    values: tuple

    @classmethod
    def of(cls, mapping: Mapping = None, **kw) -> "Config":
        d = dict(mapping or {}, **kw)
        return cls(tuple(d), tuple(d.values()))

    def __getitem__(self, x):
        try:
            return self.values[self.vars.index(x)]
        except ValueError:
            raise UnknownVariable(f"variable {x!r} not in {self.vars}") from None

    def as_dict(self) -> dict:
        return dict(zip(self.vars, self.values))

    def reorder(self, vars_) -> "Config":
        """Same map, listed in the order ``vars_`` (which must be a permutation)."""
        if tuple(vars_) == self.vars:
            return self
        if set(vars_) != set(self.vars) or len(vars_) != len(self.vars):
            raise UnknownVariable(f"cannot reorder {self.vars} as {tuple(vars_)}")
        return restrict(self, vars_)

    def named(self, m: Magma) -> dict:
        return {x: m.elements[v] for x, v in zip(self.vars, self.values)}

    def render(self, m: Magma) -> str:
        return ",".join(f"{x}={m.elements[v]}" for x, v in zip(self.vars, self.values))

    def __repr__(self):
        return "{" + ", ".join(f"{x}:{v}" for x, v in zip(self.vars, self.values)) + "}"


def restrict(g: Config, A) -> Config:
    pos = {x: i for i, x in enumerate(g.vars)}
    try:
        return Config(tuple(A), tuple(g.values[pos[a]] for a in A))
    except KeyError as e:
        raise UnknownVariable(f"variable {e.args[0]!r} not in {g.vars}") from None


def substitute(g: Config, s: Config) -> Config:
    """``g[s/S]``: overwrite g on the variables of s."""
    for x in s.vars:
        if x not in g.vars:
            raise UnknownVariable(f"substituted variable {x!r} not in {g.vars}")
    over = s.as_dict()
    return Config(g.vars, tuple(over.get(x, v) for x, v in zip(g.vars, g.values)))


def translate(t: Config, h: Config, m: Magma, right: bool = False) -> Config:
    """Translation action of G^A on G^B (A a subset of B).

    Pointwise ``t(b) • h(b)`` on A (``h(b) • t(b)`` with ``right=True``);
    variables outside A are left unchanged.
    """
    for x in t.vars:
        if x not in h.vars:
            raise UnknownVariable(f"translating variable {x!r} not in {h.vars}")
    tab = m.table
    act = t.as_dict()
    out = []
    for x, v in zip(h.vars, h.values):
        if x in act:
            out.append(tab[v][act[x]] if right else tab[act[x]][v])
        else:
            out.append(v)
    return Config(h.vars, tuple(out))


def support(g: Config, m: Magma) -> tuple:
    e = m.identity
    if e is None:
        raise NoIdentity(f"magma {m.name or '?'} has no identity element")
    return tuple(x for x, v in zip(g.vars, g.values) if v != e)


def zero_extend(g: Config, Z, m: Magma) -> Config:
    e = m.identity
    if e is None:
        raise NoIdentity(f"magma {m.name or '?'} has no identity element")
    for x in g.vars:
        if x not in Z:
            raise UnknownVariable(f"variable {x!r} not in {tuple(Z)}")
    d = g.as_dict()
    return Config(tuple(Z), tuple(d.get(z, e) for z in Z))


def merge(g: Config, h: Config) -> Config:
    d = g.as_dict()
    for x, v in zip(h.vars, h.values):
        if x in d and d[x] != v:
            raise OverlapMismatch(f"configs disagree on {x!r}")
    extra = [(x, v) for x, v in zip(h.vars, h.values) if x not in d]
    return Config(g.vars + tuple(x for x, _ in extra), g.values + tuple(v for _, v in extra))


def count_configs(m: Magma, X) -> int:
    return m.size ** len(X)


def check_cap(n: int, cap=None, what="configs"):
    cap = max_enum() if cap is None else cap
    if n > cap:
        raise EnumerationCapExceeded(f"{n} {what} exceeds the enumeration cap {cap}")


def enumerate_configs(m: Magma, X, cap=None) -> Iterator[Config]:
    """All of G^X, lexicographic in variable then element declaration order."""
    X = tuple(X)
    check_cap(count_configs(m, X), cap)
    return _stream(m.size, X)


def _stream(n, X):
    for values in product(range(n), repeat=len(X)):
        bump()
        yield Config(X, values)


class ConfigSet:
    """A finite set of configurations over a common variable tuple.

    Iteration is in sorted (enumeration) order; duplicates collapse.
    """

    def __init__(self, vars_, members: Iterable[Config] = ()):
        self.vars = tuple(vars_)
        ms = set()
        for g in members:
            if set(g.vars) != set(self.vars):
                raise UnknownVariable(f"team member over {g.vars}, expected {self.vars}")
            ms.add(g.reorder(self.vars))
        self._members = frozenset(ms)
        self._sorted = None

    @classmethod
    def full(cls, m: Magma, X, cap=None) -> "ConfigSet":
        return cls(X, enumerate_configs(m, X, cap))

    @property
    def members(self) -> frozenset:
        return self._members

    def __iter__(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self._members, key=lambda g: g.values))
        return iter(self._sorted)

    def __len__(self):
        return len(self._members)

    def __contains__(self, g):
        if not isinstance(g, Config):
            return False
        if g.vars != self.vars:
            try:
                g = g.reorder(self.vars)
            except UnknownVariable:
                return False
        return g in self._members

    def __eq__(self, other):
        if not isinstance(other, ConfigSet):
            return NotImplemented
        if set(self.vars) != set(other.vars):
            return False
        return {g.reorder(self.vars) for g in other._members} == self._members

    def __hash__(self):
        return hash((frozenset(self.vars), len(self._members)))

    def __repr__(self):
        return f"ConfigSet({self.vars}, {list(self)})"


Team = ConfigSet


def parse_config(text: str, m: Magma) -> Config:
    """Parse ``a=1,b=0`` (element names) into a Config."""
    text = text.strip()
    if not text:
        return Config((), ())
    names, values = [], []
    for part in text.split(","):
        if "=" not in part:
            raise BadParameter(f"expected var=element, got {part!r}")
        x, v = (s.strip() for s in part.split("=", 1))
        names.append(x)
        values.append(m.index(v))
    return Config(varset(names), tuple(values))

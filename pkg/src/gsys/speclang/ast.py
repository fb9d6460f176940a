"""Syntax tree of ``.gsys`` documents.

Spans are ``(line, col, end_line, end_col)``; they never take part in
equality so that ``parse(pretty_print(d)) == d`` compares structure only.
"""
from dataclasses import dataclass, field
from typing import Optional

SPAN = dict(default=None, compare=False, repr=False)


# term nodes reuse gsys.system.Var/Const/Op/Call


@dataclass(frozen=True)
class MagmaDef:
    name: str
    elements: tuple
    table: tuple
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class MagmaBuiltin:
    name: str
    kind: str
    args: tuple  # ints, or magma names for product
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class FnDef:
    name: str
    arity: int
    magma: str
    table: tuple  # nested tuples of element names
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class Rule:
    var: str
    term: object
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class SystemDef:
    name: str
    magma: str
    vars: tuple
    rules: Optional[tuple] = None  # tuple[Rule]
    table: Optional[tuple] = None  # tuple[(ConfigLit, ConfigLit)]
    domain: Optional[tuple] = None  # tuple[ConfigLit]
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class SystemExpr:
    """``system NAME = op(args);`` with op in compose/couple/glue/combine/tabulate."""
    name: str
    op: str
    args: tuple
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class TeamDef:
    name: str
    magma: str
    vars: tuple
    rows: tuple  # tuple[ConfigLit]
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class CoverDef:
    name: str
    X: tuple
    Y: tuple
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class ClassicalDef:
    name: str
    X: tuple
    U: tuple
    Y: tuple
    I: tuple
    f: tuple    # ((x, u), x')
    h: tuple    # ((x,), y)
    phi: tuple  # ((i, y), i')
    pi: tuple   # ((i,), u)
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class QueryDef:
    name: str
    kind: str
    args: tuple
    span: tuple = field(**SPAN)


# query / expression arguments

@dataclass(frozen=True)
class Ref:
    name: str
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class VarSetLit:
    names: tuple
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class ConfigLit:
    pairs: tuple  # ((var, element), ...)
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class GlueLit:
    pairs: tuple  # ((x_var, y_var), ...)
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class IntLit:
    value: int
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class ListLit:
    items: tuple
    span: tuple = field(**SPAN)


@dataclass(frozen=True)
class Document:
    items: tuple

    def by_kind(self, cls):
        return [it for it in self.items if isinstance(it, cls)]


QUERY_KINDS = ("dep", "cause", "reducible", "emergent", "couple", "glue",
               "simulate", "embed_equiv", "closed")
SYSTEM_OPS = ("compose", "couple", "glue", "combine", "tabulate")
BUILTIN_MAGMAS = ("cyclic", "chain_meet", "chain_join", "product")

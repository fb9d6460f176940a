"""Finite magmas given by operation tables.

Elements are opaque names; internally everything works on element indices
in declaration order, which fixes the enumeration order everywhere else.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Optional, Sequence

from .errors import BadParameter, DuplicateElement, MalformedTable
from .limits import DEFAULT_MAX_CARRIER


@dataclass(frozen=True)
class Magma:
    elements: tuple
    table: tuple
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        """Index of an element given by name (or already an index)."""
        if isinstance(element, int) and not isinstance(element, bool):
            if 0 <= element < self.size:
                return element
            raise BadParameter(f"element index {element} out of range")
        try:
            return self._positions[str(element)]
        except KeyError:
            raise BadParameter(f"unknown element {element!r} of magma {self.name or '?'}") from None

    def name_of(self, i: int) -> str:
        return self.elements[i]

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def _positions(self):
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def is_associative(self) -> bool:
        t = self.table
        n = self.size
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x, y, z in product(range(n), repeat=3))

    @cached_property
    def is_commutative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.size) for y in range(x))

    @cached_property
    def identity(self) -> Optional[int]:
        t = self.table
        n = self.size
        found = [e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))]
        # two-sided identities are unique: e = e•e' = e'
        assert len(found) <= 1
        return found[0] if found else None

    @cached_property
    def inverses(self) -> Optional[tuple]:
        """``inv[x]`` for every x, or None when some element has no two-sided inverse."""
        e = self.identity
        if e is None:
            return None
        t = self.table
        inv = []
        for x in range(self.size):
            cands = [y for y in range(self.size) if t[x][y] == e and t[y][x] == e]
            if not cands:
                return None
            inv.append(cands[0])
        return tuple(inv)

    @cached_property
    def is_abelian_group(self) -> bool:
        return self.is_associative and self.is_commutative and self.inverses is not None

    def __repr__(self):
        return f"Magma({self.name or '?'}, |G|={self.size})"


def make_magma(elements: Sequence, op_table: Sequence[Sequence], name: str = "",
               max_size: int = DEFAULT_MAX_CARRIER) -> Magma:
    """Validate and build a magma.

    Table entries are element indices (ints) or element names (strings).
    """
    names = tuple(str(e) for e in elements)
    if len(set(names)) != len(names):
        dup = next(e for e in names if names.count(e) > 1)
        raise DuplicateElement(f"duplicate element {dup!r}")
    n = len(names)
    if n == 0:
        raise MalformedTable("magma carrier must be nonempty")
    if n > max_size:
        raise BadParameter(f"carrier of size {n} exceeds the cap {max_size}")
    pos = {e: i for i, e in enumerate(names)}
    rows = list(op_table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MalformedTable(f"operation table must be {n}x{n}")
    table = []
    for i, row in enumerate(rows):
        out = []
        for j, v in enumerate(row):
            if isinstance(v, int) and not isinstance(v, bool):
                if not 0 <= v < n:
                    raise MalformedTable(f"entry ({i},{j}) = {v} out of range")
                out.append(v)
            elif str(v) in pos:
                out.append(pos[str(v)])
            else:
                raise MalformedTable(f"entry ({i},{j}) = {v!r} is not an element")
        table.append(tuple(out))
    return Magma(names, tuple(table), name)


def builtin_magma(kind: str, *args) -> Magma:
    """Standard magmas: ``cyclic(n)``, ``chain_meet(n)``, ``chain_join(n)``,
    ``product(m1, m2)``."""
    if kind == "product":
        if len(args) != 2 or not all(isinstance(a, Magma) for a in args):
            raise BadParameter("product takes two magmas")
        m1, m2 = args
        pairs = [(x, y) for x in range(m1.size) for y in range(m2.size)]
        names = [f"{m1.elements[x]}_{m2.elements[y]}" for x, y in pairs]
        idx = {p: i for i, p in enumerate(pairs)}
        table = [[idx[(m1.table[x1][x2], m2.table[y1][y2])] for (x2, y2) in pairs]
                 for (x1, y1) in pairs]
        return make_magma(names, table, name=f"{m1.name}x{m2.name}")
    if len(args) != 1 or not isinstance(args[0], int) or args[0] < 1:
        raise BadParameter(f"{kind} takes one integer n >= 1")
    n = args[0]
    if kind == "cyclic":
        table = [[(x + y) % n for y in range(n)] for x in range(n)]
    elif kind == "chain_meet":
        table = [[min(x, y) for y in range(n)] for x in range(n)]
    elif kind == "chain_join":
        table = [[max(x, y) for y in range(n)] for x in range(n)]
    else:
        raise BadParameter(f"unknown builtin magma {kind!r}")
    return make_magma(range(n), table, name=f"{kind}({n})")


# plain-function spellings of the cached properties
def is_associative(m: Magma) -> bool:
    return m.is_associative


def is_commutative(m: Magma) -> bool:
    return m.is_commutative


def identity_of(m: Magma):
    """Name of the two-sided identity, or None."""
    e = m.identity
    return None if e is None else m.elements[e]


def is_abelian_group(m: Magma) -> bool:
    return m.is_abelian_group


Z2 = builtin_magma("cyclic", 2)

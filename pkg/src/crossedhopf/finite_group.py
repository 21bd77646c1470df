"""Finite grading groups given by a multiplication table (identity = 0)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .report import Report


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    name: str = ""
    inverse: tuple[int, ...] = field(init=False, repr=False)

    def __init__(self, table: Sequence[Sequence[int]], name: str = "") -> None:
        t = tuple(tuple(int(x) for x in row) for row in table)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "name", name)
        inv = []
        for a, row in enumerate(t):
            found = [b for b, x in enumerate(row) if x == 0]
            inv.append(found[0] if found else -1)
        object.__setattr__(self, "inverse", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = self.table[out][x]
        return out

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, a: int, b: int) -> int:
        """``b a b^{-1}``."""
        return self.table[self.table[b][a]][self.inverse[b]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or self.order})"


def group_validate(g: FiniteGroup) -> Report:
    rep = Report("group")
    n = g.order
    rep.add("group.nonempty", (), n >= 1)
    if n == 0:
        return rep
    full = set(range(n))
    for i, row in enumerate(g.table):
        ok = len(row) == n and set(row) == full
        rep.add("group.row_permutation", (i,), ok, () if ok else ("row not a permutation",))
    for j in range(n):
        col = [row[j] if j < len(row) else -1 for row in g.table]
        ok = set(col) == full and len(col) == n
        rep.add("group.column_permutation", (j,), ok, () if ok else ("column not a permutation",))
    if not rep.clean:
        return rep
    for i in range(n):
        rep.add("group.identity", (i,), g.table[0][i] == i and g.table[i][0] == i)
        rep.add("group.inverse", (i,), g.inverse[i] >= 0 and g.table[g.inverse[i]][i] == 0)
    bad = [
        (a, b, c)
        for a, b, c in itertools.product(range(n), repeat=3)
        if g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]
    ]
    rep.add("group.associativity", (), not bad, tuple(bad))
    return rep


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z/{n}")


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def symmetric3() -> FiniteGroup:
    """S3 with elements listed as permutations of (0,1,2); index 0 is the identity."""
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}

    def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(p[q[k]] for k in range(3))

    table = [[idx[compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup(table, name="S3")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    table = [
        [g.mul(a // m, b // m) * m + h.mul(a % m, b % m) for b in range(g.order * m)]
        for a in range(g.order * m)
    ]
    return FiniteGroup(table, name=f"{g.name}x{h.name}")

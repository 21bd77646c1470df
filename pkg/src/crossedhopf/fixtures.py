"""Named demo T-coalgebras.

Every fixture is built from a small Hopf algebra presentation and, where the
grading group is nontrivial, a group action by Hopf automorphisms.
"""
from __future__ import annotations

import itertools
import re
from typing import Callable, Sequence

import numpy as np

from .errors import UnknownDemo
from .exact_linalg import QQ, Field, Tensor, einsum
from .finite_group import FiniteGroup, cyclic, trivial_group
from .tcoalg import Component, TCoalg, tensor_product


def constant_tcoalg(
    group: FiniteGroup,
    mul: Tensor,
    unit: Tensor,
    comul: Tensor,
    counit: Tensor,
    antipode: Tensor,
    action: Callable[[int], Tensor] | None = None,
    names: Sequence[str] | None = None,
    name: str = "",
) -> TCoalg:
    """Every component is the same Hopf algebra; ``action(b)`` is the conjugation by ``b``."""
    d = unit.shape[0]
    comp = Component(mul, unit)
    G = list(group.elements)
    ident = Tensor.eye(unit.field, d)
    act = {b: (action(b) if action else ident) for b in G}
    return TCoalg(
        group=group,
        components={a: comp for a in G},
        comul={(a, b): comul for a in G for b in G},
        counit=counit,
        antipode={a: antipode for a in G},
        conj={(b, a): act[b] for a in G for b in G},
        basis_names={a: tuple(names) for a in G} if names else None,
        name=name,
    )


def group_algebra_data(G: FiniteGroup, field: Field = QQ):
    n = G.order
    mul = np.zeros((n, n, n), dtype=np.int64)
    comul = np.zeros((n * n, n), dtype=np.int64)
    anti = np.zeros((n, n), dtype=np.int64)
    for a, b in itertools.product(range(n), repeat=2):
        mul[a, b, G.mul(a, b)] = 1
    for a in range(n):
        comul[a * n + a, a] = 1
        anti[G.inv(a), a] = 1
    unit = Tensor.basis(field, n, 0)
    counit = Tensor(field, np.ones(n, dtype=np.int64))
    return Tensor(field, mul), unit, Tensor(field, comul), counit, Tensor(field, anti)


def trivial(group: FiniteGroup, field: Field = QQ) -> TCoalg:
    one = Tensor(field, np.ones((1, 1, 1), dtype=np.int64))
    return constant_tcoalg(
        group,
        one,
        Tensor(field, np.ones(1, dtype=np.int64)),
        Tensor(field, np.ones((1, 1), dtype=np.int64)),
        Tensor(field, np.ones(1, dtype=np.int64)),
        Tensor(field, np.ones((1, 1), dtype=np.int64)),
        names=["1"],
        name=f"trivial({group.name or group.order})",
    )


def group_algebra(n: int, field: Field = QQ) -> TCoalg:
    """The group algebra of Z/n as a T-coalgebra over the trivial group."""
    data = group_algebra_data(cyclic(n), field)
    names = ["1"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return constant_tcoalg(trivial_group(), *data, names=names, name=f"group_algebra({n})")


def sweedler(field: Field = QQ) -> TCoalg:
    """Sweedler's 4-dimensional Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx.

    Basis ``g^a x^b`` ordered 1, g, x, gx.
    """
    idx = {(a, b): 2 * b + a for a in range(2) for b in range(2)}
    mul = np.zeros((4, 4, 4), dtype=np.int64)
    for (a, b), (c, d) in itertools.product(idx, repeat=2):
        if b + d < 2:
            mul[idx[a, b], idx[c, d], idx[(a + c) % 2, b + d]] = (-1) ** (b * c)
    mulT = Tensor(field, mul)
    comp = Component(mulT, Tensor.basis(field, 4, 0))
    e = [Tensor.basis(field, 4, i) for i in range(4)]
    # coproduct on generators, extended multiplicatively
    dg = einsum("i,j->ij", e[1], e[1])
    dx = einsum("i,j->ij", e[2], e[0]) + einsum("i,j->ij", e[1], e[2])
    pair = [comp, comp]
    images = [
        einsum("i,j->ij", e[0], e[0]),
        dg,
        dx,
        tensor_product(pair, dg, dx),
    ]
    comul = Tensor.from_nested(field, [[x for x in col.ravel().entries()] for col in images]).T
    counit = Tensor.from_nested(field, [1, 1, 0, 0])
    antipode = Tensor.from_nested(field, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    return constant_tcoalg(
        trivial_group(), mulT, comp.unit, comul, counit, antipode, names=["1", "g", "x", "gx"], name="sweedler"
    )


def constant_z3_over_z2(field: Field = QQ) -> TCoalg:
    """k[Z/3] at every grade of Z/2; the nontrivial grade acts by inversion."""
    data = group_algebra_data(cyclic(3), field)
    inversion = Tensor(field, np.array([[1, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=np.int64))
    ident = Tensor.eye(field, 3)
    return constant_tcoalg(
        cyclic(2),
        *data,
        action=lambda b: inversion if b == 1 else ident,
        names=["1", "g", "g^2"],
        name="constant(k[Z/3],Z/2)",
    )


def _parse_group(text: str) -> FiniteGroup:
    from .finite_group import symmetric3

    text = text.strip()
    if text in ("1", "Z/1", "Z1"):
        return trivial_group()
    if text == "S3":
        return symmetric3()
    m = re.fullmatch(r"Z/?(\d+)", text)
    if m:
        return cyclic(int(m.group(1)))
    raise UnknownDemo(f"unknown group {text!r}")


DEMO_NAMES = (
    "trivial(Z/2)",
    "group_algebra(2)",
    "group_algebra(3)",
    "sweedler",
    "constant(k[Z/3],Z/2)",
    "double_kz2",
    "rt_double_kz2",
)


def demo(name: str, field: Field = QQ) -> TCoalg:
    """Build a named fixture.

    Accepted names: ``trivial(G)`` (alias ``trivial`` for Z/2), ``group_algebra(n)``
    (alias ``group_algebraN``), ``sweedler``, ``constant(k[Z/3],Z/2)`` (alias
    ``constant``), ``double_kz2`` and ``rt_double_kz2``.
    """
    from .constructions import double, ribbon_extension

    key = name.replace(" ", "")
    if key == "trivial":
        return trivial(cyclic(2), field)
    m = re.fullmatch(r"trivial\((.+)\)", key)
    if m:
        return trivial(_parse_group(m.group(1)), field)
    m = re.fullmatch(r"group_algebra\(?(\d+)\)?", key)
    if m:
        return group_algebra(int(m.group(1)), field)
    if key == "sweedler":
        return sweedler(field)
    if key in ("constant", "constant(k[Z/3],Z/2)"):
        return constant_z3_over_z2(field)
    if key == "double_kz2":
        return double(group_algebra(2, field))
    if key == "rt_double_kz2":
        D = double(group_algebra(2, field))
        return ribbon_extension(D, D.rmatrix)
    raise UnknownDemo(f"unknown demo {name!r}")

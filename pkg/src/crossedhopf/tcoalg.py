"""Crossed Hopf group-coalgebras stored as structure constants.

A :class:`TCoalg` over a finite group ``pi`` holds, for every grade ``a``, a
unital associative algebra ``H_a`` together with

* ``comul[(a, b)]``: the matrix of ``H_{ab} -> H_a (x) H_b``,
* ``counit``: a covector on ``H_1``,
* ``antipode[a]``: the matrix of ``H_a -> H_{a^-1}``,
* ``conj[(b, a)]``: the matrix of the conjugation ``H_a -> H_{b a b^-1}``.

Matrices act on column coordinate vectors; tensor legs use lexicographic
order.  Grades are group indices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Any, Iterable, Mapping, Sequence

from .errors import GradeMismatch, ShapeMismatch, Singular
from .exact_linalg import (
    Field,
    Tensor,
    einsum,
    eye,
    flip,
    kron,
    letters,
    mat_inv,
    rank,
    solve,
)
from .finite_group import FiniteGroup
from .report import Report


@dataclass(frozen=True, eq=False)
class Component:
    """One graded algebra: ``mul[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``."""

    mul: Tensor
    unit: Tensor

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @property
    def field(self) -> Field:
        return self.unit.field

    def product(self, x: Tensor, y: Tensor) -> Tensor:
        return einsum("i,j,ijk->k", x, y, self.mul)

    def left_matrix(self, x: Tensor) -> Tensor:
        """Matrix of ``y -> x y``."""
        return einsum("i,ijk->kj", x, self.mul)

    def right_matrix(self, y: Tensor) -> Tensor:
        """Matrix of ``x -> x y``."""
        return einsum("j,ijk->ki", y, self.mul)

    @cached_property
    def regular_action(self) -> Tensor:
        """``act[i]`` is the matrix of left multiplication by ``e_i``."""
        return self.mul.transpose(0, 2, 1)

    def basis(self, i: int) -> Tensor:
        return Tensor.basis(self.field, self.dim, i)

    def inverse(self, x: Tensor) -> Tensor:
        return solve(self.left_matrix(x), self.unit)


@dataclass(frozen=True)
class GradedElement:
    grade: int
    coords: Tensor

    def __post_init__(self) -> None:
        if self.coords.ndim != 1:
            raise ShapeMismatch("coordinates must form a vector")


# ---------------------------------------------------------------------------
# tensor algebras A_1 (x) ... (x) A_n; elements are n-dimensional arrays


def tensor_unit(comps: Sequence[Component]) -> Tensor:
    return reduce(lambda x, y: einsum(f"{letters(x.ndim)},z->{letters(x.ndim)}z", x, y), [c.unit for c in comps])


def tensor_product(comps: Sequence[Component], x: Tensor, y: Tensor) -> Tensor:
    """Product of two elements of ``A_1 (x) ... (x) A_n``."""
    n = len(comps)
    if x.ndim != n or y.ndim != n:
        raise ShapeMismatch(f"expected {n}-leg tensors, got {x.shape} and {y.shape}")
    a, b, o = letters(3 * n)[:n], letters(3 * n)[n : 2 * n], letters(3 * n)[2 * n :]
    terms = [a, b] + [a[k] + b[k] + o[k] for k in range(n)]
    return einsum(",".join(terms) + "->" + o, x, y, *[c.mul for c in comps])


def tensor_left_matrix(comps: Sequence[Component], x: Tensor) -> Tensor:
    """Matrix of left multiplication by ``x`` on the flattened tensor algebra."""
    n = len(comps)
    a, b, o = letters(3 * n)[:n], letters(3 * n)[n : 2 * n], letters(3 * n)[2 * n :]
    terms = [a] + [a[k] + b[k] + o[k] for k in range(n)]
    m = einsum(",".join(terms) + "->" + o + b, x, *[c.mul for c in comps])
    size = x.size
    return m.reshape(size, size)


def tensor_right_matrix(comps: Sequence[Component], y: Tensor) -> Tensor:
    n = len(comps)
    a, b, o = letters(3 * n)[:n], letters(3 * n)[n : 2 * n], letters(3 * n)[2 * n :]
    terms = [b] + [a[k] + b[k] + o[k] for k in range(n)]
    m = einsum(",".join(terms) + "->" + o + a, y, *[c.mul for c in comps])
    size = y.size
    return m.reshape(size, size)


def tensor_inverse(comps: Sequence[Component], x: Tensor) -> Tensor:
    """Two-sided inverse in a finite-dimensional tensor algebra."""
    unit = tensor_unit(comps)
    y = solve(tensor_left_matrix(comps, x), unit.ravel()).reshape(x.shape)
    if tensor_product(comps, y, x) != unit:
        raise Singular("left inverse is not a right inverse")
    return y


def apply_legs(x: Tensor, maps: Sequence[Tensor | None]) -> Tensor:
    """Apply one linear map per leg of an n-leg tensor (``None`` = identity)."""
    out = x
    for k, m in enumerate(maps):
        if m is None:
            continue
        n = out.ndim
        idx = letters(n + 1)
        src = idx[:n]
        tgt = src[:k] + idx[n] + src[k + 1 :]
        out = einsum(f"{idx[n]}{src[k]},{src}->{tgt}", m, out)
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TCoalg:
    group: FiniteGroup
    components: Mapping[int, Component]
    comul: Mapping[tuple[int, int], Tensor]
    counit: Tensor
    antipode: Mapping[int, Tensor]
    conj: Mapping[tuple[int, int], Tensor]
    rmatrix: Any = None
    twist: Any = None
    basis_names: Mapping[int, Sequence[str]] | None = None
    name: str = ""
    extra: Mapping[str, Any] = field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.counit.field

    @property
    def grades(self) -> range:
        return self.group.elements

    def dim(self, a: int) -> int:
        return self.components[a].dim

    def comp(self, a: int) -> Component:
        return self.components[a]

    def unit(self, a: int) -> Tensor:
        return self.components[a].unit

    def phi(self, b: int, a: int) -> Tensor:
        """Conjugation by ``b`` restricted to ``H_a``."""
        return self.conj[(b, a)]

    @cached_property
    def antipode_inv(self) -> dict[int, Tensor]:
        """``(s_a)^-1 : H_{a^-1} -> H_a`` for every ``a``."""
        out = {}
        for a in self.grades:
            try:
                out[a] = mat_inv(self.antipode[a])
            except Singular as exc:
                raise Singular(f"antipode s_{a} is not invertible") from exc
        return out

    def mul(self, a: int, x: Tensor, y: Tensor) -> Tensor:
        return self.components[a].product(x, y)

    def prod(self, a: int, *xs: Tensor) -> Tensor:
        return reduce(lambda x, y: self.mul(a, x, y), xs)

    def inverse(self, a: int, x: Tensor) -> Tensor:
        return self.components[a].inverse(x)

    def tensor_comps(self, grades: Iterable[int]) -> list[Component]:
        return [self.components[g] for g in grades]

    def with_(self, **changes: Any) -> "TCoalg":
        kw = {f: getattr(self, f) for f in self.__dataclass_fields__}
        kw.update(changes)
        return TCoalg(**kw)

    def check_shapes(self) -> None:
        """Raise :class:`ShapeMismatch` naming the first non-conforming block."""
        g = self.group
        for a in g.elements:
            if a not in self.components:
                raise ShapeMismatch(f"missing component {a}")
            c = self.components[a]
            d = c.unit.shape[0] if c.unit.ndim == 1 else -1
            if d < 1:
                raise ShapeMismatch(f"component {a}: dimension must be at least 1")
            if c.mul.shape != (d, d, d):
                raise ShapeMismatch(f"component {a}: mul has shape {c.mul.shape}, expected {(d, d, d)}")
        for a, b in itertools.product(g.elements, repeat=2):
            m = self.comul.get((a, b))
            want = (self.dim(a) * self.dim(b), self.dim(g.mul(a, b)))
            if m is None or m.shape != want:
                got = None if m is None else m.shape
                raise ShapeMismatch(f"comul ({a},{b}): shape {got}, expected {want}")
            m = self.conj.get((b, a))
            want = (self.dim(g.conj(a, b)), self.dim(a))
            if m is None or m.shape != want:
                got = None if m is None else m.shape
                raise ShapeMismatch(f"conj ({b},{a}): shape {got}, expected {want}")
        if self.counit.shape != (self.dim(0),):
            raise ShapeMismatch(f"counit: shape {self.counit.shape}, expected {(self.dim(0),)}")
        for a in g.elements:
            m = self.antipode.get(a)
            want = (self.dim(g.inv(a)), self.dim(a))
            if m is None or m.shape != want:
                got = None if m is None else m.shape
                raise ShapeMismatch(f"antipode {a}: shape {got}, expected {want}")


# ---------------------------------------------------------------------------
# comparison helper used by every verifier


def compare(rep: Report, check: str, index: Sequence[Any], lhs: Tensor, rhs: Tensor) -> bool:
    """Record an exact equality check; the witness lists every differing position."""
    if lhs.shape != rhs.shape:
        return rep.add(check, index, False, (f"shape {lhs.shape} != {rhs.shape}",))
    if lhs == rhs:
        return rep.add(check, index, True)
    diff = (lhs - rhs).nonzero()
    wit = tuple(f"{pos}: {lhs.item(*pos)} != {rhs.item(*pos)}" for pos in diff)
    return rep.add(check, index, False, wit)


# ---------------------------------------------------------------------------


def iterated_comul(H: TCoalg, grades: Sequence[int]) -> Tensor:
    """Left-nested iterated comultiplication ``H_{a1...an} -> H_a1 (x) ... (x) H_an``."""
    grades = list(grades)
    if not grades:
        raise ValueError("need at least one grade")
    g = H.group
    if len(grades) == 1:
        return eye(H.field, H.dim(grades[0]))
    tails = [g.prod(*grades[k:]) for k in range(len(grades))]
    m = H.comul[(grades[0], tails[1])]
    left = H.dim(grades[0])
    for k in range(1, len(grades) - 1):
        m = kron(eye(H.field, left), H.comul[(grades[k], tails[k + 1])]) @ m
        left *= H.dim(grades[k])
    return m


def antipode_inverse(H: TCoalg) -> dict[int, Tensor]:
    return dict(H.antipode_inv)


def elem_mul(H: TCoalg, x: GradedElement, y: GradedElement) -> GradedElement:
    if x.grade != y.grade:
        raise GradeMismatch(f"cannot multiply grades {x.grade} and {y.grade}")
    return GradedElement(x.grade, H.mul(x.grade, x.coords, y.coords))


def coopposite(H: TCoalg) -> TCoalg:
    g = H.group
    inv = g.inv
    comps = {a: H.components[inv(a)] for a in g.elements}
    comul = {}
    for a, b in itertools.product(g.elements, repeat=2):
        comul[(a, b)] = flip(H.dim(inv(b)), H.dim(inv(a)), H.field) @ H.comul[(inv(b), inv(a))]
    antipode = {a: H.antipode_inv[a] for a in g.elements}
    conj = {(b, a): H.conj[(b, inv(a))] for a, b in itertools.product(g.elements, repeat=2)}
    names = None
    if H.basis_names:
        names = {a: H.basis_names[inv(a)] for a in g.elements}
    return TCoalg(g, comps, comul, H.counit, antipode, conj, basis_names=names, name=f"cop({H.name})")


def tcoalg_equal(H1: TCoalg, H2: TCoalg, with_structures: bool = True) -> bool:
    if H1.group != H2.group or H1.field is not H2.field:
        return False
    g = H1.group
    for a in g.elements:
        c1, c2 = H1.components[a], H2.components[a]
        if c1.mul != c2.mul or c1.unit != c2.unit:
            return False
        if H1.antipode[a] != H2.antipode[a]:
            return False
    for key in itertools.product(g.elements, repeat=2):
        if H1.comul[key] != H2.comul[key] or H1.conj[key] != H2.conj[key]:
            return False
    if H1.counit != H2.counit:
        return False
    if with_structures:
        if (H1.rmatrix is None) != (H2.rmatrix is None):
            return False
        if H1.rmatrix is not None and not H1.rmatrix.equals(H2.rmatrix):
            return False
        if (H1.twist is None) != (H2.twist is None):
            return False
        if H1.twist is not None and not H1.twist.equals(H2.twist):
            return False
    return True


# ---------------------------------------------------------------------------


def _check_algebra_map(
    rep: Report, check: str, index: tuple, m: Tensor, src: Sequence[Component], tgt: Sequence[Component]
) -> None:
    """``m`` maps the tensor algebra ``src`` into ``tgt``; check unit and products."""
    d = [c.dim for c in src]
    src_unit = tensor_unit(src).ravel()
    tgt_unit = tensor_unit(tgt).ravel() if tgt else Tensor.eye(m.field, 1)[0]
    compare(rep, check + ".unit", index, m @ src_unit, tgt_unit)
    c = src[0].mul
    # image of products e_i e_j, as a (i, j, target) array
    lhs = einsum("ijk,tk->ijt", c, m)
    shape = [t.dim for t in tgt]
    x = m.reshape(*shape, d[0])
    n = len(tgt)
    a, b, o = letters(3 * n)[:n], letters(3 * n)[n : 2 * n], letters(3 * n)[2 * n :]
    terms = [a + "y", b + "z"] + [a[k] + b[k] + o[k] for k in range(n)]
    rhs = einsum(",".join(terms) + "->yz" + o, x, x, *[t.mul for t in tgt])
    compare(rep, check + ".product", index, lhs, rhs.reshape(d[0], d[0], -1))


def validate_tcoalg(H: TCoalg) -> Report:
    """Exhaustively check every Hopf-level axiom; one entry per axiom instance."""
    H.check_shapes()
    rep = Report(f"tcoalg {H.name}".strip())
    g = H.group
    G = list(g.elements)
    F = H.field
    for a in G:
        c = H.components[a]
        lhs = einsum("ijm,mkl->ijkl", c.mul, c.mul)
        rhs = einsum("jkm,iml->ijkl", c.mul, c.mul)
        compare(rep, "component.associativity", (a,), lhs, rhs)
        I = eye(F, c.dim)
        compare(rep, "component.unit_left", (a,), einsum("i,ijk->kj", c.unit, c.mul), I)
        compare(rep, "component.unit_right", (a,), einsum("j,ijk->ki", c.unit, c.mul), I)
    for a, b in itertools.product(G, repeat=2):
        src = [H.components[g.mul(a, b)]]
        _check_algebra_map(rep, "comul.algebra", (a, b), H.comul[(a, b)], src, H.tensor_comps([a, b]))
    def split(a: int, b: int) -> Tensor:
        return H.comul[(a, b)].reshape(H.dim(a), H.dim(b), -1)

    for a, b, c in itertools.product(G, repeat=3):
        lhs = einsum("xyn,pqy->xpqn", split(a, g.mul(b, c)), split(b, c))
        rhs = einsum("ycn,xpy->xpcn", split(g.mul(a, b), c), split(a, b))
        compare(rep, "coassociativity", (a, b, c), lhs, rhs)
    eps = H.counit.reshape(1, -1)
    for a in G:
        I = eye(F, H.dim(a))
        compare(rep, "counit.left", (a,), kron(eps, I) @ H.comul[(0, a)], I)
        compare(rep, "counit.right", (a,), kron(I, eps) @ H.comul[(a, 0)], I)
    _check_algebra_map(rep, "counit.algebra", (), eps, [H.components[0]], [])
    for a in G:
        ai = g.inv(a)
        ca = H.components[a]
        target = einsum("i,j->ij", ca.unit, H.counit)
        x = H.comul[(a, ai)].reshape(H.dim(a), H.dim(ai), H.dim(0))
        y = apply_legs(x, [None, H.antipode[ai]])
        compare(rep, "antipode.right", (a,), einsum("abk,abm->mk", y, ca.mul), target)
        x = H.comul[(ai, a)].reshape(H.dim(ai), H.dim(a), H.dim(0))
        y = apply_legs(x, [H.antipode[ai], None])
        compare(rep, "antipode.left", (a,), einsum("abk,abm->mk", y, ca.mul), target)
    for b, c, a in itertools.product(G, repeat=3):
        lhs = H.conj[(b, g.conj(a, c))] @ H.conj[(c, a)]
        compare(rep, "conj.multiplicative", (b, c, a), lhs, H.conj[(g.mul(b, c), a)])
    for c, a, b in itertools.product(G, repeat=3):
        lhs = kron(H.conj[(c, a)], H.conj[(c, b)]) @ H.comul[(a, b)]
        rhs = H.comul[(g.conj(a, c), g.conj(b, c))] @ H.conj[(c, g.mul(a, b))]
        compare(rep, "conj.comul", (c, a, b), lhs, rhs)
    for c in G:
        compare(rep, "conj.counit", (c,), eps @ H.conj[(c, 0)], eps)
    for b, a in itertools.product(G, repeat=2):
        m = H.conj[(b, a)]
        ok = m.shape[0] == m.shape[1] and rank(m) == m.shape[0]
        rep.add("conj.invertible", (b, a), ok, () if ok else (f"rank {rank(m)} < {m.shape[0]}",))
        _check_algebra_map(rep, "conj.algebra", (b, a), m, [H.components[a]], [H.components[g.conj(a, b)]])
    return rep

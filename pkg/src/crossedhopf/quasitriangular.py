"""R-matrix families, Drinfeld elements and ribbon elements.

``R[(a, b)]`` is the coefficient matrix of an element of ``H_a (x) H_b``:
``R = sum_{ij} R[i, j] e_{a.i} (x) e_{b.j}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .errors import Singular
from .exact_linalg import Tensor, einsum, eye, flip, kron, mat_inv
from .report import Report
from .tcoalg import (
    TCoalg,
    compare,
    tensor_inverse,
    tensor_left_matrix,
    tensor_product,
    tensor_right_matrix,
)


@dataclass(frozen=True, eq=False)
class RMatrixFamily:
    R: Mapping[tuple[int, int], Tensor]
    Rinv: Mapping[tuple[int, int], Tensor]

    def __getitem__(self, key: tuple[int, int]) -> Tensor:
        return self.R[key]

    def inv(self, a: int, b: int) -> Tensor:
        return self.Rinv[(a, b)]

    def equals(self, other: "RMatrixFamily") -> bool:
        keys = set(self.R) | set(other.R)
        return all(k in self.R and k in other.R and self.R[k] == other.R[k] for k in keys)


def rmatrix_family(H: TCoalg, R: Mapping[tuple[int, int], Tensor], Rinv=None) -> RMatrixFamily:
    """Wrap coefficient matrices, computing inverses that were not supplied."""
    Rinv = dict(Rinv or {})
    for (a, b), r in R.items():
        if (a, b) not in Rinv:
            Rinv[(a, b)] = tensor_inverse(H.tensor_comps([a, b]), r)
    return RMatrixFamily(dict(R), Rinv)


def trivial_rmatrix(H: TCoalg) -> RMatrixFamily:
    R = {
        (a, b): einsum("i,j->ij", H.unit(a), H.unit(b)) for a, b in itertools.product(H.grades, repeat=2)
    }
    return RMatrixFamily(R, dict(R))


@dataclass(frozen=True, eq=False)
class RibbonFamily:
    theta: Mapping[int, Tensor]
    theta_inv: Mapping[int, Tensor] = field(default_factory=dict)

    def __getitem__(self, a: int) -> Tensor:
        return self.theta[a]

    def equals(self, other: "RibbonFamily") -> bool:
        return set(self.theta) == set(other.theta) and all(self.theta[a] == other.theta[a] for a in self.theta)


def ribbon_family(H: TCoalg, theta: Mapping[int, Tensor]) -> RibbonFamily:
    inv = {}
    for a, t in theta.items():
        try:
            inv[a] = H.inverse(a, t)
        except Singular:
            pass
    return RibbonFamily(dict(theta), inv)


@dataclass(frozen=True, eq=False)
class DrinfeldFamily:
    u: Mapping[int, Tensor]
    u_inv: Mapping[int, Tensor]

    def __getitem__(self, a: int) -> Tensor:
        return self.u[a]


def _resolve(H: TCoalg, R: RMatrixFamily | None) -> RMatrixFamily:
    R = R if R is not None else H.rmatrix
    if R is None:
        raise ValueError(f"{H.name or 'T-coalgebra'} carries no R-matrix")
    return R


def flip_twisted(H: TCoalg, x: Tensor, a: int, b: int) -> Tensor:
    """``sigma (phi_{a^-1} (x) id)`` applied to ``x`` in ``H_{a b a^-1} (x) H_a``.

    The result lives in ``H_a (x) H_b``.
    """
    g = H.group
    phi = H.phi(g.inv(a), g.conj(b, a))
    return einsum("ij,ai->ja", x, phi)


def insert_middle(H: TCoalg, x: Tensor, y: Tensor, a: int) -> Tensor:
    """``x_{1.3} y_{12.}``: ``sum x1 y1 (x) y2 (x) x2`` for ``x`` in ``H_a (x) H_c``, ``y`` in ``H_a (x) H_b``."""
    return einsum("ac,pb,ape->ebc", x, y, H.comp(a).mul)


def insert_first(H: TCoalg, x: Tensor, y: Tensor, c: int) -> Tensor:
    """``x_{1.3} y_{.23}``: ``sum x1 (x) y1 (x) x2 y2`` for ``x`` in ``H_a (x) H_c``, ``y`` in ``H_b (x) H_c``."""
    return einsum("ac,bq,cqf->abf", x, y, H.comp(c).mul)


def validate_rmatrix(H: TCoalg, R: RMatrixFamily | None = None) -> Report:
    R = _resolve(H, R)
    g = H.group
    G = list(g.elements)
    F = H.field
    rep = Report(f"rmatrix {H.name}".strip())
    for a, b in itertools.product(G, repeat=2):
        want = (H.dim(a), H.dim(b))
        if R[(a, b)].shape != want:
            from .errors import ShapeMismatch

            raise ShapeMismatch(f"R ({a},{b}): shape {R[(a, b)].shape}, expected {want}")
    for a, b in itertools.product(G, repeat=2):
        comps = H.tensor_comps([a, b])
        r = R[(a, b)]
        unit = einsum("i,j->ij", H.unit(a), H.unit(b))
        compare(rep, "rmatrix.invertible_right", (a, b), tensor_product(comps, r, R.inv(a, b)), unit)
        compare(rep, "rmatrix.invertible_left", (a, b), tensor_product(comps, R.inv(a, b), r), unit)
        ab = g.mul(a, b)
        lhs = tensor_left_matrix(comps, r) @ H.comul[(a, b)]
        c = g.conj(b, a)
        twisted = flip(H.dim(b), H.dim(a), F) @ kron(H.phi(g.inv(a), c), eye(F, H.dim(a))) @ H.comul[(c, a)]
        rhs = tensor_right_matrix(comps, r) @ twisted
        compare(rep, "rmatrix.intertwine", (a, b), lhs, rhs)
        del ab
    for a, b, c in itertools.product(G, repeat=3):
        lhs = (R[(a, g.mul(b, c))] @ H.comul[(b, c)].T).reshape(H.dim(a), H.dim(b), H.dim(c))
        rhs = insert_middle(H, R[(a, c)], R[(a, b)], a)
        compare(rep, "rmatrix.split_right", (a, b, c), lhs, rhs)
        ab = g.mul(a, b)
        lhs = (H.comul[(a, b)] @ R[(ab, c)]).reshape(H.dim(a), H.dim(b), H.dim(c))
        conj_a = g.conj(a, g.inv(b))
        x = H.phi(b, conj_a) @ R[(conj_a, c)]
        rhs = insert_first(H, x, R[(b, c)], c)
        compare(rep, "rmatrix.split_left", (a, b, c), lhs, rhs)
    for a, b, c in itertools.product(G, repeat=3):
        lhs = H.phi(a, b) @ R[(b, c)] @ H.phi(a, c).T
        compare(rep, "rmatrix.conj", (a, b, c), lhs, R[(g.conj(b, a), g.conj(c, a))])
    return rep


# ---------------------------------------------------------------------------


def drinfeld_element(H: TCoalg, R: RMatrixFamily, a: int) -> Tensor:
    """``u_a = sum (s_{a^-1} phi_a)(zeta_i) xi_i`` over ``R_{a, a^-1}``."""
    ai = H.group.inv(a)
    z = H.antipode[ai] @ H.phi(a, ai)
    return einsum("ab,mb,mak->k", R[(a, ai)], z, H.comp(a).mul)


def drinfeld_inverse_formula(H: TCoalg, R: RMatrixFamily, a: int) -> Tensor:
    """``sum (s_a)^-1(zeta~_i) xi~_i`` over the inverse ``R~_{a, a^-1}``."""
    ai = H.group.inv(a)
    return einsum("ab,mb,mak->k", R.inv(a, ai), H.antipode_inv[a], H.comp(a).mul)


def drinfeld_inverse_formula2(H: TCoalg, R: RMatrixFamily, a: int) -> Tensor:
    """``sum zeta_i (s_{a^-1} s_a)(xi_i)`` over ``R_{a, a}``.

    The legs are in this order; the mirrored order ``xi_i s s(zeta_i)`` is not
    an inverse of ``u_a`` in general (it fails on the double of Sweedler's algebra).
    """
    ai = H.group.inv(a)
    ss = H.antipode[ai] @ H.antipode[a]
    return einsum("ab,ma,bmk->k", R[(a, a)], ss, H.comp(a).mul)


def drinfeld_elements(H: TCoalg, R: RMatrixFamily | None = None) -> DrinfeldFamily:
    R = _resolve(H, R)
    u = {a: drinfeld_element(H, R, a) for a in H.grades}
    inv = {}
    for a in H.grades:
        cand = drinfeld_inverse_formula(H, R, a)
        try:
            direct = H.inverse(a, u[a])
        except Singular as exc:
            raise Singular(f"Drinfeld element u_{a} is not invertible") from exc
        if direct != cand:
            raise Singular(f"inverse formula for u_{a} disagrees with the direct inverse")
        inv[a] = cand
    return DrinfeldFamily(u, inv)


def double_drinfeld(H: TCoalg, u: Mapping[int, Tensor], a: int) -> Tensor:
    """``u_a s_{a^-1}(u_{a^-1})``."""
    ai = H.group.inv(a)
    return H.mul(a, u[a], H.antipode[ai] @ u[ai])


def drinfeld_coproduct_rhs(H: TCoalg, R: RMatrixFamily, a: int, b: int, x: Tensor, y: Tensor) -> Tensor:
    """``R~_{a,b} . sigma(phi (x) id)(R~_{aba^-1, a}) . (x (x) y)``."""
    g = H.group
    comps = H.tensor_comps([a, b])
    c = g.conj(b, a)
    twisted = flip_twisted(H, R.inv(c, a), a, b)
    core = tensor_product(comps, R.inv(a, b), twisted)
    return tensor_product(comps, core, einsum("i,j->ij", x, y))


def check_drinfeld_props(H: TCoalg, R: RMatrixFamily | None = None) -> Report:
    R = _resolve(H, R)
    g = H.group
    G = list(g.elements)
    rep = Report(f"drinfeld {H.name}".strip())
    u = {a: drinfeld_element(H, R, a) for a in G}
    uinv = {a: drinfeld_inverse_formula(H, R, a) for a in G}
    # 1: at the neutral grade the element is s_1(zeta) xi
    direct = einsum("ab,mb,mak->k", R[(0, 0)], H.antipode[0], H.comp(0).mul)
    compare(rep, "drinfeld.neutral_formula", (0,), u[0], direct)
    for a in G:
        one = H.unit(a)
        compare(rep, "drinfeld.inverse.right", (a,), H.mul(a, u[a], uinv[a]), one)
        compare(rep, "drinfeld.inverse.left", (a,), H.mul(a, uinv[a], u[a]), one)
        compare(rep, "drinfeld.inverse.formulas_agree", (a,), drinfeld_inverse_formula2(H, R, a), uinv[a])
        try:
            direct = H.inverse(a, u[a])
            compare(rep, "drinfeld.inverse.direct", (a,), direct, uinv[a])
        except Singular:
            rep.add("drinfeld.inverse.direct", (a,), False, ("left multiplication is singular",))
    for a, b in itertools.product(G, repeat=2):
        lhs = (H.comul[(a, b)] @ u[g.mul(a, b)]).reshape(H.dim(a), H.dim(b))
        compare(rep, "drinfeld.coproduct", (a, b), lhs, drinfeld_coproduct_rhs(H, R, a, b, u[a], u[b]))
    compare(rep, "drinfeld.counit", (0,), H.counit.reshape(1, -1) @ u[0], Tensor.eye(H.field, 1)[0])
    for a in G:
        ai = g.inv(a)
        su = H.antipode[ai] @ u[ai]
        compare(rep, "drinfeld.antipode_commutes", (a,), H.mul(a, su, u[a]), H.mul(a, u[a], su))
    for b, a in itertools.product(G, repeat=2):
        compare(rep, "drinfeld.conjugation", (b, a), H.phi(b, a) @ u[a], u[g.conj(a, b)])
    for a in G:
        ai = g.inv(a)
        comp = H.comp(a)
        lhs = H.antipode[ai] @ H.antipode[a] @ H.phi(a, a)
        rhs = comp.left_matrix(u[a]) @ comp.right_matrix(uinv[a])
        compare(rep, "drinfeld.square_antipode", (a,), lhs, rhs)
        w = double_drinfeld(H, u, a)
        a2 = g.mul(a, a)
        compare(rep, "drinfeld.double_element", (a,), comp.left_matrix(w), comp.right_matrix(w) @ H.phi(a2, a))
    return rep


def check_antipode_identities(H: TCoalg, R: RMatrixFamily | None = None) -> Report:
    """Two element identities for ``s_{a^-1}(u_{a^-1})``.

    * it equals ``sum xi_i s_{a^-1}(zeta_i)`` over ``R_{a, a^-1}``;
    * ``s(u) h = ((s_a)^-1 (s_{a^-1})^-1 phi_a)(h) s(u)`` for every basis ``h`` of ``H_a``.
    """
    R = _resolve(H, R)
    g = H.group
    rep = Report(f"antipode identities {H.name}".strip())
    for a in H.grades:
        ai = g.inv(a)
        comp = H.comp(a)
        su = H.antipode[ai] @ drinfeld_element(H, R, ai)
        formula = einsum("ab,mb,amk->k", R[(a, ai)], H.antipode[ai], comp.mul)
        compare(rep, "antipode.drinfeld_formula", (a,), su, formula)
        twist = H.antipode_inv[a] @ H.antipode_inv[ai] @ H.phi(a, a)
        lhs = comp.left_matrix(su)
        rhs = comp.right_matrix(su) @ twist
        compare(rep, "antipode.drinfeld_commutation", (a,), lhs, rhs)
    return rep


# ---------------------------------------------------------------------------


def validate_ribbon(H: TCoalg, R: RMatrixFamily | None = None, theta: RibbonFamily | None = None) -> Report:
    R = _resolve(H, R)
    theta = theta if theta is not None else H.twist
    if theta is None:
        raise ValueError("no ribbon family supplied")
    g = H.group
    G = list(g.elements)
    rep = Report(f"ribbon {H.name}".strip())
    inv = {}
    for a in G:
        try:
            inv[a] = H.inverse(a, theta[a])
            ok = H.mul(a, theta[a], inv[a]) == H.unit(a)
            rep.add("ribbon.invertible", (a,), ok)
        except Singular:
            rep.add("ribbon.invertible", (a,), False, ("theta is not invertible",))
    for a in G:
        comp = H.comp(a)
        if a in inv:
            conj = comp.left_matrix(inv[a]) @ comp.right_matrix(theta[a])
            compare(rep, "ribbon.conjugation_by_theta", (a,), H.phi(a, a), conj)
        compare(rep, "ribbon.antipode", (a,), H.antipode[a] @ theta[a], theta[g.inv(a)])
    for a, b in itertools.product(G, repeat=2):
        comps = H.tensor_comps([a, b])
        lhs = (H.comul[(a, b)] @ theta[g.mul(a, b)]).reshape(H.dim(a), H.dim(b))
        c = g.conj(b, a)
        twisted = flip_twisted(H, R[(c, a)], a, b)
        rhs = tensor_product(comps, einsum("i,j->ij", theta[a], theta[b]), twisted)
        rhs = tensor_product(comps, rhs, R[(a, b)])
        compare(rep, "ribbon.coproduct", (a, b), lhs, rhs)
    for b, a in itertools.product(G, repeat=2):
        compare(rep, "ribbon.conjugation_invariant", (b, a), H.phi(b, a) @ theta[a], theta[g.conj(a, b)])
    return rep


def mirror_rmatrix(H: TCoalg, R: RMatrixFamily | None = None) -> RMatrixFamily:
    """``Rbar_{a,b} = (sigma R_{b^-1, a^-1})^-1`` as a family on the mirror of ``H``."""
    R = _resolve(H, R)
    inv = H.group.inv
    bar = {}
    bar_inv = {}
    for a, b in itertools.product(H.grades, repeat=2):
        swapped = R[(inv(b), inv(a))].T
        bar_inv[(a, b)] = swapped
        bar[(a, b)] = R.inv(inv(b), inv(a)).T
    return RMatrixFamily(bar, bar_inv)


def rmatrix_inverse_check(H: TCoalg, R: RMatrixFamily, a: int, b: int) -> bool:
    comps = H.tensor_comps([a, b])
    return tensor_inverse(comps, R[(a, b)]) == R.inv(a, b)


__all__ = [
    "RMatrixFamily",
    "RibbonFamily",
    "DrinfeldFamily",
    "rmatrix_family",
    "trivial_rmatrix",
    "ribbon_family",
    "validate_rmatrix",
    "drinfeld_elements",
    "check_drinfeld_props",
    "check_antipode_identities",
    "validate_ribbon",
    "mirror_rmatrix",
    "double_drinfeld",
]

_ = mat_inv

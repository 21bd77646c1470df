"""Representations of a T-coalgebra: tensor, crossing, duals, braiding and twist.

A module of grade ``a`` is stored as the stack ``act[i] = rho(e_i)`` of action
matrices for the basis of ``H_a``.  Crossing keeps the underlying space, so
every structure map is a plain matrix; tensor products use the index
``u * dim(V) + v`` and are strict.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GradeMismatch, ShapeMismatch, Singular
from .exact_linalg import (
    Tensor,
    column_basis,
    einsum,
    eye,
    flip,
    kron,
    mat_inv,
    nullspace,
    solve_in_span,
    stack,
)
from .quasitriangular import (
    RibbonFamily,
    RMatrixFamily,
    _resolve,
    double_drinfeld,
    drinfeld_elements,
)
from .report import Report
from .tcoalg import TCoalg, compare


@dataclass(frozen=True, eq=False)
class HModule:
    grade: int
    act: Tensor  # (dim H_grade, n, n)
    name: str = ""

    @property
    def dim(self) -> int:
        return self.act.shape[1]

    @property
    def field(self):
        return self.act.field

    def rho(self, h: Tensor) -> Tensor:
        """Action matrix of an element given in coordinates."""
        return einsum("i,ijk->jk", h, self.act)

    def same_as(self, other: "HModule") -> bool:
        return self.grade == other.grade and self.act == other.act

    def renamed(self, name: str) -> "HModule":
        return HModule(self.grade, self.act, name)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: HModule
    target: HModule
    matrix: Tensor


@dataclass(frozen=True, eq=False)
class TwistPair:
    """An object of the twist extension: a module and an invertible ``t: U -> ^U U``."""

    module: HModule
    t: Tensor


@dataclass(frozen=True, eq=False)
class Duality:
    dual: HModule
    b: Tensor  # (n*n, 1): 1 -> U (x) U*
    d: Tensor  # (1, n*n): U* (x) U -> 1
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# construction


def make_module(H: TCoalg, grade: int, mats: Sequence[Tensor], name: str = "") -> HModule:
    if len(mats) != H.dim(grade):
        raise ShapeMismatch(f"grade {grade} needs {H.dim(grade)} action matrices, got {len(mats)}")
    return HModule(grade, stack(list(mats)), name)


def validate_module(H: TCoalg, M: HModule) -> Report:
    rep = Report(f"module {M.name}".strip())
    a = M.grade
    if M.act.shape[0] != H.dim(a) or M.act.shape[1] != M.act.shape[2]:
        rep.add("module.shape", (a,), False, (f"action stack has shape {M.act.shape}",))
        return rep
    compare(rep, "module.unit", (a,), M.rho(H.unit(a)), eye(M.field, M.dim))
    lhs = einsum("ixy,jyz->ijxz", M.act, M.act)
    rhs = einsum("ijk,kxz->ijxz", H.comp(a).mul, M.act)
    compare(rep, "module.product", (a,), lhs, rhs)
    return rep


def is_module_map(U: HModule, V: HModule, f: Tensor) -> bool:
    """``f: U -> V`` commutes with the actions (same grade assumed)."""
    return einsum("xy,iyz->ixz", f, U.act) == einsum("ixy,yz->ixz", V.act, f)


def regular_module(H: TCoalg, a: int) -> HModule:
    """``H_a`` acting on itself by left multiplication."""
    return HModule(a, H.comp(a).regular_action, f"regular({a})")


def trivial_module(H: TCoalg) -> HModule:
    """The ground field with ``H_1`` acting through the counit."""
    return HModule(0, H.counit.reshape(-1, 1, 1), "unit")


def tensor_modules(H: TCoalg, U: HModule, V: HModule) -> HModule:
    """``U (x) V`` of grade ``ab``; ``h`` acts through ``Delta_{a,b}(h)``."""
    a, b = U.grade, V.grade
    c = H.group.mul(a, b)
    x = H.comul[(a, b)].reshape(H.dim(a), H.dim(b), H.dim(c))
    act = einsum("pqk,pxy,quv->kxuyv", x, U.act, V.act)
    n = U.dim * V.dim
    return HModule(c, act.reshape(H.dim(c), n, n), f"({U.name}*{V.name})")


def tensor_all(H: TCoalg, mods: Sequence[HModule]) -> HModule:
    out = mods[0]
    for m in mods[1:]:
        out = tensor_modules(H, out, m)
    return out


def crossing(H: TCoalg, b: int, U: HModule) -> HModule:
    """``^b U``: the same space, with ``h`` acting as ``phi_{b^-1}(h)``."""
    if b == 0:
        return U
    g = H.group
    c = g.conj(U.grade, b)
    phi = H.phi(g.inv(b), c)  # H_c -> H_grade
    act = einsum("ji,jxy->ixy", phi, U.act)
    return HModule(c, act, f"^{b}{U.name}")


def dual_module(H: TCoalg, U: HModule) -> Duality:
    """``U*`` of grade ``a^-1``: ``<h f, u> = <f, s_{a^-1}(h) u>``, with ``b = sum e_i (x) e^i``."""
    a = U.grade
    ai = H.group.inv(a)
    act = einsum("ji,jxy->iyx", H.antipode[ai], U.act)
    n = U.dim
    vec = eye(U.field, n).reshape(n * n, 1)
    return Duality(HModule(ai, act, f"{U.name}*"), vec, vec.T)


def hom_space(U: HModule, V: HModule) -> list[Tensor]:
    """A basis of the module maps ``U -> V``."""
    if U.grade != V.grade:
        raise GradeMismatch(f"modules of grades {U.grade} and {V.grade}")
    m, n = V.dim, U.dim
    F = U.field
    # f -> rho_V(e_i) f - f rho_U(e_i) on vec(f) with row-major index
    blocks = [kron(V.act[i], eye(F, n)) - kron(eye(F, m), U.act[i].T) for i in range(U.act.shape[0])]
    from .exact_linalg import concat

    ker = nullspace(concat(blocks, axis=0))
    return [ker[:, j].reshape(m, n) for j in range(ker.shape[1])]


def submodule(M: HModule, vectors: Tensor, name: str = "") -> tuple[HModule, Tensor]:
    """The submodule spanned by the columns of ``vectors`` (assumed invariant) and its inclusion."""
    B = column_basis(vectors)
    acts = [solve_in_span(B, M.act[i] @ B) for i in range(M.act.shape[0])]
    return HModule(M.grade, stack(acts), name or f"sub({M.name})"), B


def cyclic_submodule(M: HModule, v: Tensor, name: str = "") -> tuple[HModule, Tensor]:
    """The submodule generated by ``v``; returns it with its inclusion matrix."""
    cols = column_basis(stack([M.act[i] @ v for i in range(M.act.shape[0])], axis=1))
    return submodule(M, cols, name)


def module_sample(H: TCoalg, grades: Iterable[int] | None = None, max_dim: int = 2) -> list[HModule]:
    """Trivial module, regular modules, and small cyclic submodules of the regular ones."""
    grades = list(H.grades if grades is None else grades)
    out = [trivial_module(H)]
    for a in grades:
        reg = regular_module(H, a)
        out.append(reg)
        seen: list[HModule] = []
        for j in range(reg.dim):
            sub, _ = cyclic_submodule(reg, Tensor.basis(H.field, reg.dim, j), f"cyc({a},{j})")
            if sub.dim <= max_dim and sub.dim < reg.dim and not any(s.same_as(sub) for s in seen):
                seen.append(sub)
        out.extend(seen)
    return out


# ---------------------------------------------------------------------------
# braiding and twist


def braiding_map(H: TCoalg, R: RMatrixFamily | None, U: HModule, V: HModule) -> Tensor:
    """``c_{U,V}(u (x) v) = zeta_i v (x) xi_i u`` as a matrix ``U (x) V -> ^U V (x) U``."""
    R = _resolve(H, R)
    r = R[(U.grade, V.grade)]
    m = einsum("ab,bxy,auv->xuyv", r, V.act, U.act).reshape(V.dim * U.dim, V.dim * U.dim)
    return m @ flip(U.dim, V.dim, U.field)


def twist_map(H: TCoalg, theta: RibbonFamily | None, U: HModule) -> Tensor:
    """``theta_U(u) = theta_a u`` as a matrix ``U -> ^U U``."""
    theta = theta if theta is not None else H.twist
    if theta is None:
        raise ValueError(f"{H.name} carries no twist")
    return U.rho(theta[U.grade])


def _maps_between(H: TCoalg, sample: Sequence[HModule]) -> list[tuple[HModule, HModule, Tensor]]:
    out = []
    for U, V in itertools.product(sample, repeat=2):
        if U.grade == V.grade:
            out.extend((U, V, f) for f in hom_space(U, V))
    return out


def check_braiding_axioms(H: TCoalg, R: RMatrixFamily | None, sample: Sequence[HModule]) -> Report:
    """Naturality, both tensor-split laws, conjugation invariance and linearity on a sample."""
    R = _resolve(H, R)
    rep = Report(f"braiding {H.name}".strip())
    g = H.group
    F = H.field
    c = lambda X, Y: braiding_map(H, R, X, Y)  # noqa: E731
    idx = {id(m): k for k, m in enumerate(sample)}
    for U, V in itertools.product(sample, repeat=2):
        key = (idx[id(U)], idx[id(V)])
        cuv = c(U, V)
        src = tensor_modules(H, U, V)
        tgt = tensor_modules(H, crossing(H, U.grade, V), U)
        rep.add("braiding.linear", key, is_module_map(src, tgt, cuv))
        for b in g.elements:
            compare(rep, "braiding.d", key + (b,), c(crossing(H, b, U), crossing(H, b, V)), cuv)
    maps = _maps_between(H, sample)
    for (U, U2, f), (V, V2, h) in itertools.product(maps, repeat=2):
        key = (idx[id(U)], idx[id(U2)], idx[id(V)], idx[id(V2)])
        compare(rep, "braiding.a", key, kron(h, f) @ c(U, V), c(U2, V2) @ kron(f, h))
    for U, V, W in itertools.product(sample, repeat=3):
        key = (idx[id(U)], idx[id(V)], idx[id(W)])
        UV = tensor_modules(H, U, V)
        lhs = c(UV, W)
        rhs = kron(c(U, crossing(H, V.grade, W)), eye(F, V.dim)) @ kron(eye(F, U.dim), c(V, W))
        compare(rep, "braiding.b", key, lhs, rhs)
        VW = tensor_modules(H, V, W)
        lhs = c(U, VW)
        rhs = kron(eye(F, V.dim), c(U, W)) @ kron(c(U, V), eye(F, W.dim))
        compare(rep, "braiding.c", key, lhs, rhs)
    return rep


def yang_baxter(H: TCoalg, R: RMatrixFamily | None, U: HModule, V: HModule, W: HModule) -> tuple[Tensor, Tensor]:
    """Both sides of the crossed Yang-Baxter identity on ``U (x) V (x) W``."""
    R = _resolve(H, R)
    F = H.field
    c = lambda X, Y: braiding_map(H, R, X, Y)  # noqa: E731
    a = U.grade
    uV, uW = crossing(H, a, V), crossing(H, a, W)
    vW = crossing(H, V.grade, W)
    I = lambda n: eye(F, n)  # noqa: E731
    lhs = kron(c(uV, uW), I(U.dim)) @ kron(I(V.dim), c(U, W)) @ kron(c(U, V), I(W.dim))
    rhs = kron(I(W.dim), c(U, V)) @ kron(c(U, vW), I(V.dim)) @ kron(I(U.dim), c(V, W))
    return lhs, rhs


def check_twist_axioms(
    H: TCoalg, R: RMatrixFamily | None, theta: RibbonFamily | None, sample: Sequence[HModule]
) -> Report:
    """Twist naturality, the tensor rule, conjugation invariance and the ribbon identity."""
    R = _resolve(H, R)
    theta = theta if theta is not None else H.twist
    rep = Report(f"twist {H.name}".strip())
    t = lambda X: twist_map(H, theta, X)  # noqa: E731
    idx = {id(m): k for k, m in enumerate(sample)}
    for U, V, f in _maps_between(H, sample):
        compare(rep, "twist.natural", (idx[id(U)], idx[id(V)]), t(V) @ f, f @ t(U))
    for U in sample:
        rep.add("twist.linear", (idx[id(U)],), is_module_map(U, crossing(H, U.grade, U), t(U)))
        for b in H.grades:
            compare(rep, "twist.ultra", (idx[id(U)], b), t(crossing(H, b, U)), t(U))
    for U, V in itertools.product(sample, repeat=2):
        compare(rep, "twist.main", (idx[id(U)], idx[id(V)]), t(tensor_modules(H, U, V)), twist_product(H, R, U, V, t(U), t(V)))
    for U in sample:
        lhs, rhs = tortility_sides(H, theta, U)
        compare(rep, "twist.tortility", (idx[id(U)],), lhs, rhs)
    return rep


def twist_product(H: TCoalg, R: RMatrixFamily | None, U: HModule, V: HModule, tu: Tensor, tv: Tensor) -> Tensor:
    """``c_{^{UV}V, ^U U} c_{^U U, ^V V} (tu (x) tv)``."""
    R = _resolve(H, R)
    uU = crossing(H, U.grade, U)
    vV = crossing(H, V.grade, V)
    uvV = crossing(H, uU.grade, vV)
    return braiding_map(H, R, uvV, uU) @ braiding_map(H, R, uU, vV) @ kron(tu, tv)


def twistator(H: TCoalg, R: RMatrixFamily | None, T1: TwistPair, T2: TwistPair) -> TwistPair:
    U, V = T1.module, T2.module
    return TwistPair(tensor_modules(H, U, V), twist_product(H, R, U, V, T1.t, T2.t))


def is_twist_arrow(H: TCoalg, T1: TwistPair, T2: TwistPair, f: Tensor) -> bool:
    """``f`` is a module map with ``f t1 = t2 f`` (crossing does not change matrices)."""
    U, V = T1.module, T2.module
    if f.shape != (V.dim, U.dim):
        raise ShapeMismatch(f"map of shape {f.shape} between dimensions {U.dim} and {V.dim}")
    return is_module_map(U, V, f) and f @ T1.t == T2.t @ f


def tortility_sides(H: TCoalg, theta: RibbonFamily | None, U: HModule) -> tuple[Tensor, Tensor]:
    """``(id (x) theta_{^U U*}) b_{^U U}`` and ``(theta_U (x) id) b_U``."""
    D = dual_module(H, U)
    n = U.dim
    F = U.field
    lhs = kron(eye(F, n), twist_map(H, theta, crossing(H, U.grade, D.dual))) @ D.b
    rhs = kron(twist_map(H, theta, U), eye(F, n)) @ D.b
    return lhs, rhs


# ---------------------------------------------------------------------------
# omega, reflexivity and good duals


def omega(H: TCoalg, R: RMatrixFamily | None, U: HModule, inverse: bool = True) -> Tensor:
    """The map ``^{UU}U -> U`` built from a duality and two braidings.

    The middle braiding is ``c^-1_{^{UU}U, U}`` when ``inverse`` holds and the
    plain ``c_{^U U, ^{UU}U}`` otherwise.
    """
    R = _resolve(H, R)
    a = U.grade
    n = U.dim
    uU = crossing(H, a, U)
    uuU = crossing(H, a, uU)
    D = dual_module(H, uU)
    first = braiding_map(H, R, uU, D.dual) @ D.b  # 1 -> ^{UU}U* (x) ^U U
    if inverse:
        mid = mat_inv(braiding_map(H, R, uuU, U))
    else:
        mid = braiding_map(H, R, uU, uuU)
    # (d (x) id)(id (x) mid)(first (x) id), contracted without forming the krons
    return einsum("pa,arqy,pq->ry", D.d.reshape(n, n), mid.reshape(n, n, n, n), first.reshape(n, n))


def omega_expected(H: TCoalg, R: RMatrixFamily | None, U: HModule) -> Tensor:
    """Action of ``u_a s_{a^-1}(u_{a^-1})``."""
    R = _resolve(H, R)
    dr = drinfeld_elements(H, R)
    return U.rho(double_drinfeld(H, dr.u, U.grade))


def theta_square(H: TCoalg, theta: RibbonFamily | None, U: HModule) -> Tensor:
    t = twist_map(H, theta, U)
    return twist_map(H, theta, crossing(H, U.grade, U)) @ t


def reversed_adjunction(
    H: TCoalg, R: RMatrixFamily | None, theta: RibbonFamily | None, U: HModule
) -> tuple[Tensor, Tensor]:
    """``b'_U: 1 -> U* (x) U`` and ``d'_U: U (x) U* -> 1``."""
    R = _resolve(H, R)
    D = dual_module(H, U)
    F = U.field
    n = U.dim
    t = twist_map(H, theta, U)
    b2 = kron(eye(F, n), t) @ braiding_map(H, R, U, D.dual) @ D.b
    d2 = D.d @ braiding_map(H, R, crossing(H, U.grade, U), D.dual) @ kron(t, eye(F, n))
    return b2, d2


def good_dual_predicates(
    H: TCoalg, R: RMatrixFamily | None, theta: RibbonFamily | None, U: HModule, label: tuple = ()
) -> Report:
    """Reflexivity, good dual, tortility, reversed-adjunction triangles and the double dual."""
    R = _resolve(H, R)
    theta = theta if theta is not None else H.twist
    rep = Report(f"duals {U.name}".strip())
    F = U.field
    n = U.dim
    I = eye(F, n)
    D = dual_module(H, U)
    try:
        inv_sq = mat_inv(theta_square(H, theta, U))
        compare(rep, "dual.reflexive", label, inv_sq, omega(H, R, U))
    except Singular:
        rep.add("dual.reflexive", label, False, ("theta squared is singular",))
    t = twist_map(H, theta, U)
    compare(rep, "dual.good", label, twist_map(H, theta, D.dual), t.T)
    lhs, rhs = tortility_sides(H, theta, U)
    compare(rep, "dual.tortile", label, lhs, rhs)
    b2, d2 = reversed_adjunction(H, R, theta, U)
    compare(rep, "dual.reversed.triangle_u", label, kron(d2, I) @ kron(I, b2), I)
    compare(rep, "dual.reversed.triangle_dual", label, kron(I, d2) @ kron(b2, I), I)
    # the reversed adjunction of (b', d') returns (b, d)
    tD = twist_map(H, theta, D.dual)
    b3 = kron(I, tD) @ braiding_map(H, R, D.dual, U) @ b2
    d3 = d2 @ braiding_map(H, R, crossing(H, D.dual.grade, D.dual), U) @ kron(tD, I)
    compare(rep, "dual.double_dual.unit", label, b3, D.b)
    compare(rep, "dual.double_dual.counit", label, d3, D.d)
    return rep


def duality_triangles(U: HModule, D: Duality) -> tuple[Tensor, Tensor]:
    """``(id (x) d)(b (x) id)`` on ``U`` and ``(d (x) id)(id (x) b)`` on ``U*``; both should be identities."""
    F = U.field
    n = U.dim
    I = eye(F, n)
    return kron(I, D.d) @ kron(D.b, I), kron(D.d, I) @ kron(I, D.b)


def tensor_duality(H: TCoalg, U: HModule, V: HModule) -> Duality:
    """``V* (x) U*`` as the dual of ``U (x) V`` with the nested unit and counit."""
    Du, Dv = dual_module(H, U), dual_module(H, V)
    F = U.field
    m, n = U.dim, V.dim
    b = kron(kron(eye(F, m), Dv.b), eye(F, m)) @ Du.b
    d = Dv.d @ kron(kron(eye(F, n), Du.d), eye(F, n))
    return Duality(tensor_modules(H, Dv.dual, Du.dual), b, d)


def mirror_module(H: TCoalg, U: HModule) -> HModule:
    """The same action viewed over the mirror, where it sits in the inverse grade."""
    return HModule(H.group.inv(U.grade), U.act, f"mirror({U.name})")

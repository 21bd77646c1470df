"""Twist-paired modules ``(M, t)`` and their equivalence with modules over the ribbon extension.

``t`` is a matrix on the space of ``M`` read as a module map ``M -> ^M M``;
crossing keeps the underlying space, so no reindexing is ever needed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GradeMismatch, ShapeMismatch, Singular
from .exact_linalg import Tensor, eye, kron, mat_inv, stack
from .modules import (
    HModule,
    braiding_map,
    crossing,
    dual_module,
    is_module_map,
    omega,
    tensor_modules,
    trivial_module,
    validate_module,
)
from .quasitriangular import RMatrixFamily, _resolve, double_drinfeld, drinfeld_elements
from .report import Report
from .tcoalg import TCoalg, compare


@dataclass(frozen=True, eq=False)
class RibObject:
    module: HModule
    t: Tensor
    name: str = ""

    @property
    def grade(self) -> int:
        return self.module.grade

    @property
    def dim(self) -> int:
        return self.module.dim

    def same_as(self, other: "RibObject") -> bool:
        return self.module.same_as(other.module) and self.t == other.t


def rib_object(M: HModule, t: Tensor, name: str = "") -> RibObject:
    if t.shape != (M.dim, M.dim):
        raise ShapeMismatch(f"twist of shape {t.shape} on a module of dimension {M.dim}")
    return RibObject(M, t, name or M.name)


def unit_rib(H: TCoalg) -> RibObject:
    M = trivial_module(H)
    return RibObject(M, eye(H.field, 1), "unit")


def twist_square_target(H: TCoalg, R: RMatrixFamily | None, M: HModule) -> Tensor:
    """Action of ``u_a s_{a^-1}(u_{a^-1})``, which ``t^-2`` must equal."""
    R = _resolve(H, R)
    return M.rho(double_drinfeld(H, drinfeld_elements(H, R).u, M.grade))


def validate_rib(H: TCoalg, R: RMatrixFamily | None, O: RibObject, label: tuple = ()) -> Report:
    """Module axioms, crossed linearity of ``t`` and ``t^-2 = u_a s_{a^-1}(u_{a^-1})``."""
    rep = Report(f"rib {O.name}".strip())
    rep.extend(validate_module(H, O.module), "")
    M = O.module
    rep.add("rib.linear", label, is_module_map(M, crossing(H, M.grade, M), O.t))
    try:
        ti = mat_inv(O.t)
    except Singular:
        rep.add("rib.twist_square", label, False, ("t is singular",))
        return rep
    compare(rep, "rib.twist_square", label, ti @ ti, twist_square_target(H, R, M))
    return rep


def is_rib_map(O1: RibObject, O2: RibObject, f: Tensor) -> bool:
    """``f`` is a module map with ``t2 f = f t1``."""
    if f.shape != (O2.dim, O1.dim):
        raise ShapeMismatch(f"map of shape {f.shape} between dimensions {O1.dim} and {O2.dim}")
    return is_module_map(O1.module, O2.module, f) and O2.t @ f == f @ O1.t


def rib_tensor(H: TCoalg, R: RMatrixFamily | None, O1: RibObject, O2: RibObject) -> RibObject:
    """``(t (x) t') c_{^M M', M} c_{M, M'}`` on ``M (x) M'``."""
    R = _resolve(H, R)
    M, N = O1.module, O2.module
    first = braiding_map(H, R, M, N)
    second = braiding_map(H, R, crossing(H, M.grade, N), M)
    t = kron(O1.t, O2.t) @ second @ first
    return RibObject(tensor_modules(H, M, N), t, f"({O1.name}*{O2.name})")


def rib_dual(H: TCoalg, O: RibObject) -> RibObject:
    """The coordinate dual ``M*`` with the transposed twist."""
    D = dual_module(H, O.module)
    return RibObject(D.dual, O.t.T, f"{O.name}*")


def rib_tortility(H: TCoalg, O: RibObject) -> tuple[Tensor, Tensor]:
    """``(id (x) t_{M*}) b`` and ``(t_M (x) id) b``; equal for a ribbon pair."""
    D = dual_module(H, O.module)
    I = eye(H.field, O.dim)
    return kron(I, rib_dual(H, O).t) @ D.b, kron(O.t, I) @ D.b


def rt_module_from_rib(H: TCoalg, RT: TCoalg, O: RibObject) -> HModule:
    """``(h + k v_a) m = h m + k t^-1(m)`` over the ribbon extension."""
    M = O.module
    if RT.extra.get("base_dims", {}).get(M.grade) != H.dim(M.grade):
        raise GradeMismatch("the ribbon extension does not match the base T-coalgebra")
    ti = mat_inv(O.t)
    acts = [M.act[i] for i in range(H.dim(M.grade))] + [M.act[i] @ ti for i in range(H.dim(M.grade))]
    return HModule(M.grade, stack(acts), f"rt({O.name})")


def rib_from_rt_module(H: TCoalg, RT: TCoalg, N: HModule) -> RibObject:
    """Restrict to the base component and set ``t`` to the inverse of the action of ``v_a``."""
    a = N.grade
    d = H.dim(a)
    act = stack([N.act[i] for i in range(d)])
    v = N.rho(RT.extra["v"][a])
    try:
        t = mat_inv(v)
    except Singular as exc:
        raise Singular(f"v_{a} acts non-invertibly on {N.name}") from exc
    return RibObject(HModule(a, act, N.name), t, f"rib({N.name})")


def center_twist_condition(H: TCoalg, R: RMatrixFamily | None, O: RibObject) -> bool:
    """``(t t)^-1 = omega_M`` with ``omega`` computed from the braiding and duality of ``M``."""
    tt = O.t @ O.t
    try:
        return mat_inv(tt) == omega(H, R, O.module)
    except Singular:
        return False

"""Yetter-Drinfeld modules, half-braidings, and modules over the quantum double.

A coaction ``Delta_{V,l}: V -> V (x) H_l`` is stored as a matrix of shape
``(dim V * dim H_l, dim V)`` with row index ``x * dim H_l + j``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .constructions import _offsets
from .errors import GradeMismatch
from .exact_linalg import Tensor, assemble, einsum, eye, kron, stack
from .modules import (
    HModule,
    braiding_map,
    crossing,
    is_module_map,
    tensor_modules,
    validate_module,
)
from .report import Report
from .tcoalg import TCoalg, compare


@dataclass(frozen=True, eq=False)
class YDModule:
    module: HModule
    coaction: Mapping[int, Tensor]
    name: str = ""

    @property
    def grade(self) -> int:
        return self.module.grade

    @property
    def dim(self) -> int:
        return self.module.dim

    def co(self, H: TCoalg, lam: int) -> Tensor:
        """The coaction as a ``(x, j, y)`` array: coefficient of ``e_x (x) e_j`` in ``Delta(e_y)``."""
        return self.coaction[lam].reshape(self.dim, H.dim(lam), self.dim)

    def same_as(self, other: "YDModule") -> bool:
        return self.module.same_as(other.module) and all(
            self.coaction[k] == other.coaction[k] for k in self.coaction
        )


@dataclass(frozen=True, eq=False)
class HalfBraiding:
    """A module with a rule producing ``(sigma_X, sigma_X^-1)`` for any module ``X``."""

    module: HModule
    evaluate: Callable[[HModule], tuple[Tensor, Tensor]]
    name: str = ""


def _from_co(arrays: Mapping[int, Tensor]) -> dict[int, Tensor]:
    out = {}
    for lam, a in arrays.items():
        n, d, m = a.shape
        out[lam] = a.reshape(n * d, m)
    return out


def trivial_coaction(H: TCoalg, M: HModule, name: str = "") -> YDModule:
    """``Delta_{V,l}(v) = v (x) 1_l``; a YD structure when the grading data is trivial enough."""
    n = M.dim
    co = {lam: einsum("xy,j->xjy", eye(M.field, n), H.unit(lam)) for lam in H.grades}
    return YDModule(M, _from_co(co), name or f"triv({M.name})")


def unit_yd(H: TCoalg) -> YDModule:
    from .modules import trivial_module

    return trivial_coaction(H, trivial_module(H), "unit")


def validate_yd(H: TCoalg, V: YDModule) -> Report:
    """Coassociativity, counit and the crossed compatibility, over all grades."""
    rep = Report(f"yd {V.name}".strip())
    rep.extend(validate_module(H, V.module), "")
    g = H.group
    G = list(g.elements)
    a = V.grade
    for l1, l2 in itertools.product(G, repeat=2):
        l12 = g.mul(l1, l2)
        dl = H.comul[(l1, l2)].reshape(H.dim(l1), H.dim(l2), H.dim(l12))
        lhs = einsum("xky,pqk->xpqy", V.co(H, l12), dl)
        rhs = einsum("zqy,xpz->xpqy", V.co(H, l2), V.co(H, l1))
        compare(rep, "yd.coassociative", (l1, l2), lhs, rhs)
    compare(rep, "yd.counit", (), einsum("xjy,j->xy", V.co(H, 0), H.counit), eye(H.field, V.dim))
    act = V.module.act
    for lam in G:
        al = g.mul(a, lam)
        c = g.conj(lam, a)
        cl = H.comp(lam).mul
        d1 = H.comul[(a, lam)].reshape(H.dim(a), H.dim(lam), H.dim(al))
        d2 = H.comul[(c, a)].reshape(H.dim(c), H.dim(a), H.dim(al))
        phi = H.phi(g.inv(a), c)
        co = V.co(H, lam)
        lhs = einsum("pqk,pxz,zmy,qmj->kxjy", d1, act, co, cl)
        rhs = einsum("pqk,xmz,qzy,rp,mrj->kxjy", d2, co, act, phi, cl)
        compare(rep, "yd.crossed", (lam,), lhs, rhs)
    return rep


def is_yd_map(H: TCoalg, V: YDModule, W: YDModule, f: Tensor) -> bool:
    """``f`` is module-linear and intertwines every coaction."""
    if not is_module_map(V.module, W.module, f):
        return False
    for lam in H.grades:
        lhs = W.coaction[lam] @ f
        rhs = kron(f, eye(H.field, H.dim(lam))) @ V.coaction[lam]
        if lhs != rhs:
            return False
    return True


def yd_tensor(H: TCoalg, V: YDModule, W: YDModule) -> YDModule:
    """``Delta(v (x) w) = v_(V) (x) w_(W) (x) w_(l) phi_{b^-1}(v_(b l b^-1))``."""
    g = H.group
    b = W.grade
    M = tensor_modules(H, V.module, W.module)
    co = {}
    for lam in H.grades:
        x = g.conj(lam, b)
        phi = H.phi(g.inv(b), x)
        arr = einsum("xay,ubw,ca,bcj->xujyw", V.co(H, x), W.co(H, lam), phi, H.comp(lam).mul)
        n = V.dim * W.dim
        co[lam] = arr.reshape(n, H.dim(lam), n)
    return YDModule(M, _from_co(co), f"({V.name}*{W.name})")


def yd_crossing(H: TCoalg, b: int, V: YDModule) -> YDModule:
    """``^b V``: crossed module, coaction conjugated by ``phi_b`` and reindexed."""
    if b == 0:
        return V
    g = H.group
    co = {}
    for lam in H.grades:
        x = g.conj(lam, g.inv(b))
        co[lam] = einsum("xay,ja->xjy", V.co(H, x), H.phi(b, x))
    return YDModule(crossing(H, b, V.module), _from_co(co), f"^{b}{V.name}")


def halfbraiding_eval(H: TCoalg, V: YDModule, X: HModule) -> tuple[Tensor, Tensor]:
    """``sigma_X(v (x) x) = s_{l^-1}(v_(l^-1)) x (x) v_(V)`` and its inverse."""
    g = H.group
    lam = X.grade
    li = g.inv(lam)
    n, m = V.dim, X.dim
    fwd = einsum("xay,ba,buw->uxyw", V.co(H, li), H.antipode[li], X.act).reshape(m * n, n * m)
    back = einsum("xav,auy->xuyv", V.co(H, lam), X.act).reshape(n * m, m * n)
    return fwd, back


def yd_braiding(H: TCoalg, V: YDModule, W: YDModule) -> Tensor:
    """``c_{V,W}: V (x) W -> ^V W (x) V``."""
    return halfbraiding_eval(H, V, W.module)[0]


def halfbraiding_from_yd(H: TCoalg, V: YDModule) -> HalfBraiding:
    return HalfBraiding(V.module, lambda X: halfbraiding_eval(H, V, X), f"hb({V.name})")


def yd_from_halfbraiding(H: TCoalg, sigma: HalfBraiding) -> YDModule:
    """``Delta_{V,l}(v) = sigma^-1_{H_l}(1_l (x) v)`` using the regular module of ``H_l``."""
    from .modules import regular_module

    M = sigma.module
    n = M.dim
    co = {}
    for lam in H.grades:
        _, back = sigma.evaluate(regular_module(H, lam))
        co[lam] = back @ kron(H.unit(lam).reshape(-1, 1), eye(H.field, n))
    return YDModule(M, co, f"F1({sigma.name})")


def check_halfbraiding(H: TCoalg, sigma: HalfBraiding, sample: Sequence[HModule]) -> Report:
    """Inverse pair, linearity, naturality on module maps, and the tensor rule."""
    from .modules import _maps_between

    rep = Report(f"halfbraiding {sigma.name}".strip())
    U = sigma.module
    a = U.grade
    F = H.field
    idx = {id(m): k for k, m in enumerate(sample)}
    for X in sample:
        fwd, back = sigma.evaluate(X)
        k = (idx[id(X)],)
        compare(rep, "halfbraiding.inverse_left", k, back @ fwd, eye(F, U.dim * X.dim))
        compare(rep, "halfbraiding.inverse_right", k, fwd @ back, eye(F, U.dim * X.dim))
        src = tensor_modules(H, U, X)
        tgt = tensor_modules(H, crossing(H, a, X), U)
        rep.add("halfbraiding.linear", k, is_module_map(src, tgt, fwd))
    for X, Y, f in _maps_between(H, sample):
        lhs = kron(f, eye(F, U.dim)) @ sigma.evaluate(X)[0]
        rhs = sigma.evaluate(Y)[0] @ kron(eye(F, U.dim), f)
        compare(rep, "halfbraiding.natural", (idx[id(X)], idx[id(Y)]), lhs, rhs)
    for X, Y in itertools.product(sample, repeat=2):
        XY = tensor_modules(H, X, Y)
        lhs = sigma.evaluate(XY)[0]
        rhs = kron(eye(F, X.dim), sigma.evaluate(Y)[0]) @ kron(sigma.evaluate(X)[0], eye(F, Y.dim))
        compare(rep, "halfbraiding.tensor", (idx[id(X)], idx[id(Y)]), lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# modules over the double


def yd_to_ddouble(H: TCoalg, V: YDModule) -> HModule:
    """``(h * f) v = f |> (h v)`` with ``f |> v = <f, v_(g)> v_(V)`` for ``f`` in ``H*_g``."""
    a = V.grade
    fs = []
    for gam in H.grades:
        co = V.co(H, gam)
        fs.extend(co[:, j, :] for j in range(H.dim(gam)))
    acts = [f @ V.module.act[i] for i in range(H.dim(a)) for f in fs]
    return HModule(a, stack(acts), f"G({V.name})")


def _dual_part(H: TCoalg, M: HModule) -> Tensor:
    """Action matrices of ``1 * f_n`` for the dual basis ``f_n`` of all grades, stacked."""
    off, N = _offsets(H)
    unit = H.unit(M.grade)
    return einsum("i,inxy->nxy", unit, M.act.reshape(H.dim(M.grade), N, M.dim, M.dim))


def ddouble_to_yd(H: TCoalg, M: HModule) -> YDModule:
    """Restrict to ``H_a`` and read the coaction off the dual part: ``Delta(v) = sum (1 * e^{l.i}) v (x) e_{l.i}``."""
    a = M.grade
    off, N = _offsets(H)
    uK = _counit_in_dual(H)
    act = einsum("n,inxy->ixy", uK, M.act.reshape(H.dim(a), N, M.dim, M.dim))
    fact = _dual_part(H, M)
    co = {}
    for lam in H.grades:
        block = fact[off[lam] : off[lam] + H.dim(lam)]
        co[lam] = block.transpose(1, 0, 2)
    return YDModule(HModule(a, act, M.name), _from_co(co), f"Ghat({M.name})")


def _counit_in_dual(H: TCoalg) -> Tensor:
    """The counit of ``H_1`` written in the stacked dual basis (identity block first)."""
    _, N = _offsets(H)
    return assemble(H.field, (N,), [((slice(0, H.dim(0)),), H.counit)])


def halfbraiding_from_ddouble(H: TCoalg, M: HModule) -> HalfBraiding:
    """``sigma_X(m (x) x) = s_{l^-1}(e_{l^-1.i}) x (x) (1 * e^{l^-1.i}) m``, the braiding of the double."""

    def evaluate(X: HModule) -> tuple[Tensor, Tensor]:
        g = H.group
        lam = X.grade
        li = g.inv(lam)
        off, _ = _offsets(H)
        full = _dual_part(H, M)
        fact = full[off[li] : off[li] + H.dim(li)]
        n, m = M.dim, X.dim
        fwd = einsum("axy,ba,buw->uxyw", fact, H.antipode[li], X.act).reshape(m * n, n * m)
        fl = full[off[lam] : off[lam] + H.dim(lam)]
        back = einsum("axv,auy->xuyv", fl, X.act).reshape(n * m, m * n)
        return fwd, back

    return HalfBraiding(M, evaluate, f"c({M.name},-)")


def transported_braiding(H: TCoalg, D: TCoalg, V: YDModule, W: YDModule) -> Tensor:
    """``c_{G(V), G(W)}`` computed in the representation category of the double."""
    return braiding_map(D, D.rmatrix, yd_to_ddouble(H, V), yd_to_ddouble(H, W))


def yd_sample(H: TCoalg, modules: Sequence[HModule]) -> list[YDModule]:
    """YD modules read off a list of modules over the double."""
    return [ddouble_to_yd(H, M) for M in modules]


def check_grade(V: YDModule, W: YDModule) -> None:
    if V.grade != W.grade:
        raise GradeMismatch(f"YD modules of grades {V.grade} and {W.grade}")

"""Mirror, crossed dual, quantum double and ribbon extension."""
from __future__ import annotations

import itertools

from .exact_linalg import Tensor, assemble, block_diag, concat, einsum, kron
from .quasitriangular import (
    RibbonFamily,
    RMatrixFamily,
    _resolve,
    double_drinfeld,
    drinfeld_elements,
    flip_twisted,
    mirror_rmatrix,
    ribbon_family,
)
from .tcoalg import (
    Component,
    TCoalg,
    iterated_comul,
    tensor_product,
    tensor_right_matrix,
)


def mirror(H: TCoalg, R: RMatrixFamily | None = None) -> TCoalg:
    """The mirror T-coalgebra: grades are inverted and the coproduct is twisted by ``phi``.

    ``Hbar_a = H_{a^-1}`` and ``Dbar_{a,b}(h) = phi_b(h') (x) h''`` with
    ``h' (x) h''`` the ``(b^-1 a^-1 b, b^-1)`` coproduct of ``h``.  An attached
    (or supplied) R-matrix is mirrored too; an attached ribbon family becomes
    ``thetabar_a = theta_{a^-1}^-1``.
    """
    g = H.group
    inv = g.inv
    G = list(g.elements)
    F = H.field
    comps = {a: H.components[inv(a)] for a in G}
    comul = {}
    for a, b in itertools.product(G, repeat=2):
        bi = inv(b)
        x = g.conj(inv(a), bi)
        comul[(a, b)] = kron(H.phi(b, x), Tensor.eye(F, H.dim(bi))) @ H.comul[(x, bi)]
    antipode = {a: H.phi(a, a) @ H.antipode[inv(a)] for a in G}
    conj = {(b, a): H.conj[(b, inv(a))] for a, b in itertools.product(G, repeat=2)}
    R = R if R is not None else H.rmatrix
    Rbar = mirror_rmatrix(H, R) if R is not None else None
    twist = None
    if H.twist is not None:
        theta = {a: H.twist.theta_inv[inv(a)] for a in G}
        twist = RibbonFamily(theta, {a: H.twist.theta[inv(a)] for a in G})
    names = {a: H.basis_names[inv(a)] for a in G} if H.basis_names else None
    return TCoalg(
        g, comps, comul, H.counit, antipode, conj, rmatrix=Rbar, twist=twist, basis_names=names,
        name=f"mirror({H.name})",
    )


# ---------------------------------------------------------------------------


def _offsets(H: TCoalg) -> tuple[dict[int, int], int]:
    off, n = {}, 0
    for a in H.grades:
        off[a] = n
        n += H.dim(a)
    return off, n


def _sl(off: dict[int, int], H: TCoalg, a: int) -> slice:
    return slice(off[a], off[a] + H.dim(a))


def dual_coop(H: TCoalg) -> TCoalg:
    """Every component is the direct sum of the duals ``H*_b``, in group order.

    The product is dual to the coproduct, the unit is the counit, and the
    coproduct with second index ``b`` is dual to ``x (x) y -> y phi_{b^-1}(x)``.
    """
    g = H.group
    G = list(g.elements)
    F = H.field
    off, N = _offsets(H)
    sl = lambda a: _sl(off, H, a)  # noqa: E731
    mul = assemble(
        F,
        (N, N, N),
        [
            ((sl(c), sl(d), sl(g.mul(c, d))), H.comul[(c, d)].reshape(H.dim(c), H.dim(d), -1))
            for c, d in itertools.product(G, repeat=2)
        ],
    )
    unit = assemble(F, (N,), [((sl(0),), H.counit)])
    counit = assemble(F, (N,), [((sl(c),), H.unit(c)) for c in G])
    comul_b = {}
    for b in G:
        blocks = []
        for c in G:
            x = g.conj(c, b)
            phi = H.phi(g.inv(b), x)
            block = einsum("ma,bmc->abc", phi, H.comp(c).mul)
            blocks.append(((sl(x), sl(c), sl(c)), block))
        comul_b[b] = assemble(F, (N, N, N), blocks).reshape(N * N, N)
    anti = {}
    for a in G:
        blocks = []
        for c in G:
            x = g.conj(c, a)
            m = H.phi(g.inv(a), x) @ H.antipode_inv[x]
            blocks.append(((sl(g.inv(x)), sl(c)), m.T))
        anti[a] = assemble(F, (N, N), blocks)
    phis = {}
    for b in G:
        blocks = []
        for c in G:
            x = g.conj(c, b)
            blocks.append(((sl(x), sl(c)), H.phi(g.inv(b), x).T))
        phis[b] = assemble(F, (N, N), blocks)
    comp = Component(mul, unit)
    names = None
    if H.basis_names:
        tags = [f"e^{c}.{H.basis_names[c][i]}" for c in G for i in range(H.dim(c))]
    else:
        tags = [f"e^{c}.{i}" for c in G for i in range(H.dim(c))]
    names = {a: tuple(tags) for a in G}
    return TCoalg(
        g,
        {a: comp for a in G},
        {(a, b): comul_b[b] for a, b in itertools.product(G, repeat=2)},
        counit,
        anti,
        {(b, a): phis[b] for a, b in itertools.product(G, repeat=2)},
        basis_names=names,
        name=f"dual_coop({H.name})",
        extra={"offsets": off},
    )


def double(H: TCoalg) -> TCoalg:
    """The quantum double with components ``H_a (x) (sum_b H*_b)`` and its R-matrix.

    Basis element ``(i, n)`` is ``e_i * f_n`` with ``f_n`` the ``n``-th basis
    vector of the crossed dual, at flat index ``i * N + n``.
    """
    g = H.group
    G = list(g.elements)
    F = H.field
    K = dual_coop(H)
    off, N = _offsets(H)
    cK = K.comp(0).mul
    uK = K.comp(0).unit
    comps = {}
    for a in G:
        da = H.dim(a)
        blocks = []
        for d in G:
            c = g.conj(d, a)
            di = g.inv(d)
            D3 = iterated_comul(H, [c, a, di]).reshape(H.dim(c), da, H.dim(di), da)
            phi = H.phi(g.inv(a), c)
            sinv = H.antipode_inv[d]
            T = einsum("xr,xmz,yp,zye->rmpe", sinv, H.comp(d).mul, phi, H.comp(d).mul)
            cKd = cK[:, off[d] : off[d] + H.dim(d), :]
            blocks.append(einsum("pqri,qjl,rmpe,cmn->icjeln", D3, H.comp(a).mul, T, cKd))
        full = concat(blocks, axis=3)
        dim = da * N
        comps[a] = Component(full.reshape(dim, dim, dim), kron(H.unit(a), uK))
    comul = {}
    for a, b in itertools.product(G, repeat=2):
        dab = H.dim(g.mul(a, b))
        x = H.comul[(a, b)].reshape(H.dim(a), H.dim(b), dab)
        y = K.comul[(a, b)].reshape(N, N, N)
        comul[(a, b)] = einsum("abi,xyz->axbyiz", x, y).reshape(H.dim(a) * N * H.dim(b) * N, dab * N)
    counit = kron(H.counit, K.counit)
    antipode = {}
    for a in G:
        ai = g.inv(a)
        left = kron(H.antipode[a], uK.reshape(N, 1))
        right = kron(H.unit(ai).reshape(-1, 1), K.antipode[a])
        m = einsum("pi,qz,pqk->kiz", left, right, comps[ai].mul)
        antipode[a] = m.reshape(H.dim(ai) * N, H.dim(a) * N)
    conj = {(b, a): kron(H.phi(b, a), K.conj[(b, a)]) for a, b in itertools.product(G, repeat=2)}
    R, Rinv = {}, {}
    for a, b in itertools.product(G, repeat=2):
        bi = g.inv(b)
        emb = assemble(F, (N, H.dim(bi)), [((_sl(off, H, bi), slice(None)), Tensor.eye(F, H.dim(bi)))])
        left = einsum("a,ni->ani", H.unit(a), emb)
        right = einsum("bi,m->bmi", H.antipode[bi], uK)
        R[(a, b)] = einsum("ani,bmi->anbm", left, right).reshape(H.dim(a) * N, H.dim(b) * N)
        emb = assemble(F, (N, H.dim(b)), [((_sl(off, H, b), slice(None)), Tensor.eye(F, H.dim(b)))])
        left = einsum("a,ni->ani", H.unit(a), emb)
        right = einsum("bi,m->bmi", Tensor.eye(F, H.dim(b)), uK)
        Rinv[(a, b)] = einsum("ani,bmi->anbm", left, right).reshape(H.dim(a) * N, H.dim(b) * N)
    hnames = H.basis_names or {a: tuple(str(i) for i in range(H.dim(a))) for a in G}
    names = {a: tuple(f"{h}*{f}" for h in hnames[a] for f in K.basis_names[0]) for a in G}
    return TCoalg(
        g, comps, comul, counit, antipode, conj, rmatrix=RMatrixFamily(R, Rinv), basis_names=names,
        name=f"double({H.name})", extra={"offsets": off, "dual_dim": N},
    )


def double_embeddings(H: TCoalg, D: TCoalg, a: int) -> tuple[Tensor, Tensor]:
    """Matrices of ``h -> h * eps`` and ``f -> 1 * f`` into the ``a`` component of the double."""
    N = D.extra["dual_dim"]
    uK = assemble(H.field, (N,), [((slice(0, H.dim(0)),), H.counit)])
    left = kron(Tensor.eye(H.field, H.dim(a)), uK.reshape(N, 1))
    right = kron(H.unit(a).reshape(-1, 1), Tensor.eye(H.field, N))
    return left, right


# ---------------------------------------------------------------------------


def ribbon_extension(H: TCoalg, R: RMatrixFamily | None = None) -> TCoalg:
    """Adjoin ``v_a`` with ``v_a h = phi_a(h) v_a`` and ``v_a^2 = u_a s_{a^-1}(u_{a^-1})``.

    Basis of the ``a`` component: ``e_i`` (h-part) followed by ``e_i v_a``.
    The attached ribbon family is ``theta_a = v_a^-1``.
    """
    R = _resolve(H, R)
    g = H.group
    G = list(g.elements)
    F = H.field
    dr = drinfeld_elements(H, R)
    comps = {}
    vs = {}
    for a in G:
        d = H.dim(a)
        c = H.comp(a).mul
        phi = H.phi(a, a)
        w = double_drinfeld(H, dr.u, a)
        twisted = einsum("imk,mj->ijk", c, phi)
        with_w = einsum("ijn,nyk,y->ijk", twisted, c, w)
        h, v = slice(0, d), slice(d, 2 * d)
        mul = assemble(F, (2 * d, 2 * d, 2 * d), [((h, h, h), c), ((h, v, v), c), ((v, h, v), twisted), ((v, v, h), with_w)])
        unit = assemble(F, (2 * d,), [((h,), H.unit(a))])
        comps[a] = Component(mul, unit)
        vs[a] = assemble(F, (2 * d,), [((v,), H.unit(a))])
    comul = {}
    for a, b in itertools.product(G, repeat=2):
        da, db, dab = H.dim(a), H.dim(b), H.dim(g.mul(a, b))
        c = g.conj(b, a)
        comps_ab = H.tensor_comps([a, b])
        Y = tensor_product(comps_ab, R.inv(a, b), flip_twisted(H, R.inv(c, a), a, b))
        vpart = tensor_right_matrix(comps_ab, Y) @ H.comul[(a, b)]
        m = assemble(
            F,
            (2, da, 2, db, 2 * dab),
            [
                ((0, slice(None), 0, slice(None), slice(0, dab)), H.comul[(a, b)].reshape(da, db, dab)),
                ((1, slice(None), 1, slice(None), slice(dab, 2 * dab)), vpart.reshape(da, db, dab)),
            ],
        )
        comul[(a, b)] = m.reshape(4 * da * db, 2 * dab)
    counit = concat([H.counit, H.counit])
    antipode = {a: block_diag(H.antipode[a], H.antipode[a] @ H.phi(g.inv(a), a)) for a in G}
    conj = {(b, a): block_diag(H.phi(b, a), H.phi(b, a)) for a, b in itertools.product(G, repeat=2)}

    def embed(m: Tensor, a: int, b: int) -> Tensor:
        return assemble(F, (2 * H.dim(a), 2 * H.dim(b)), [((slice(0, H.dim(a)), slice(0, H.dim(b))), m)])

    Rrt = RMatrixFamily(
        {k: embed(m, *k) for k, m in R.R.items()},
        {k: embed(m, *k) for k, m in R.Rinv.items()},
    )
    out = TCoalg(g, comps, comul, counit, antipode, conj, rmatrix=Rrt, name=f"RT({H.name})")
    theta = {a: out.inverse(a, vs[a]) for a in G}
    names = None
    if H.basis_names:
        names = {a: tuple(H.basis_names[a]) + tuple(f"({n})v" for n in H.basis_names[a]) for a in G}
    return out.with_(
        twist=RibbonFamily(theta, dict(vs)),
        basis_names=names,
        extra={"v": vs, "base_dims": {a: H.dim(a) for a in G}},
    )


def ribbon_family_from_v(RT: TCoalg) -> RibbonFamily:
    """The rejected alternative ``theta_a = v_a``; kept so the suite can show it fails."""
    vs = RT.extra["v"]
    return ribbon_family(RT, dict(vs))

import itertools

import pytest
from conftest import fixture, with_trivial_r
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedhopf.constructions import (
    double,
    double_embeddings,
    dual_coop,
    mirror,
    ribbon_extension,
    ribbon_family_from_v,
)
from crossedhopf.exact_linalg import QQ, Tensor, einsum, eye, kron, rank
from crossedhopf.quasitriangular import (
    double_drinfeld,
    drinfeld_elements,
    validate_ribbon,
    validate_rmatrix,
)
from crossedhopf.tcoalg import tcoalg_equal, validate_tcoalg

BASES = ["trivial", "ga2", "ga3", "sweedler", "constant"]


def test_mirror_of_trivial():
    T = fixture("trivial")
    assert tcoalg_equal(mirror(T), T)


@pytest.mark.parametrize("name", BASES)
def test_constructions_preserve_validity(name):
    H = fixture(name)
    for build in (mirror, dual_coop, double):
        assert validate_tcoalg(build(H)).clean, build.__name__


def test_mirror_of_ribbon_extension_keeps_the_ribbon_axioms():
    RT = fixture("rt_d_ga2")
    M = mirror(RT)
    assert validate_rmatrix(M).clean
    assert validate_ribbon(M).clean
    assert tcoalg_equal(mirror(M), RT)


def test_dual_coop_of_trivial_is_the_group_algebra_of_the_grading_group():
    # the product is dual to the graded coproduct of the one-dimensional pieces: e^a e^b = e^(ab)
    K = dual_coop(fixture("trivial"))
    assert [K.dim(a) for a in K.grades] == [2, 2]
    mul = K.comp(0).mul
    for k, i, j in itertools.product(range(2), repeat=3):
        assert mul.item(k, i, j) == (1 if k == (i + j) % 2 else 0)


def test_dual_coop_of_group_algebra_is_the_function_algebra():
    K = dual_coop(fixture("ga3"))
    mul = K.comp(0).mul
    for i, j, k in itertools.product(range(3), repeat=3):
        assert mul.item(i, j, k) == (1 if i == j == k else 0)
    assert K.unit(0) == Tensor.from_nested(QQ, [1, 1, 1])
    # the coproduct is dual to the (commutative) product: delta_g -> sum_{ab = g} delta_b (x) delta_a
    c = K.comul[(0, 0)].reshape(3, 3, 3)
    for a, b, gi in itertools.product(range(3), repeat=3):
        assert c.item(a, b, gi) == (1 if (a + b) % 3 == gi else 0)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6), st.integers(0, 1))
def test_dual_coop_counit_law(coords, b):
    K = dual_coop(fixture("constant"))
    f = Tensor.from_nested(QQ, coords)
    left = kron(K.counit.reshape(1, -1), eye(QQ, 6)) @ K.comul[(0, b)]
    assert left @ f == f


def test_double_dimensions():
    assert fixture("d_ga2").dim(0) == 4
    assert [fixture("d_constant").dim(a) for a in (0, 1)] == [18, 18]


@pytest.mark.parametrize("name", ["ga2", "sweedler", "constant"])
def test_cross_product_of_the_two_halves(name):
    # (1 * f)(h * eps) = h * f for every basis pair
    H = fixture(name)
    D = double(H)
    for a in H.grades:
        left, right = double_embeddings(H, D, a)
        N = D.extra["dual_dim"]
        for i, n in itertools.product(range(H.dim(a)), range(N)):
            prod = D.mul(a, right[:, n], left[:, i])
            assert prod == Tensor.basis(QQ, D.dim(a), i * N + n)


@pytest.mark.parametrize("name", ["ga2", "sweedler", "constant"])
def test_embeddings_are_injective_algebra_maps(name):
    H = fixture(name)
    D = double(H)
    K = dual_coop(H)
    for a in H.grades:
        left, right = double_embeddings(H, D, a)
        assert rank(left) == H.dim(a)
        assert rank(right) == K.dim(a)
        for x, y in itertools.product(range(H.dim(a)), repeat=2):
            hx, hy = H.comp(a).basis(x), H.comp(a).basis(y)
            assert D.mul(a, left @ hx, left @ hy) == left @ H.mul(a, hx, hy)
        for x, y in itertools.product(range(K.dim(a)), repeat=2):
            fx, fy = K.comp(a).basis(x), K.comp(a).basis(y)
            assert D.mul(a, right @ fx, right @ fy) == right @ K.mul(a, fx, fy)


def test_ribbon_extension_of_trivial():
    T = with_trivial_r(fixture("trivial"))
    RT = ribbon_extension(T)
    assert [RT.dim(a) for a in RT.grades] == [2, 2]
    for a in RT.grades:
        v = RT.extra["v"][a]
        assert RT.mul(a, v, v) == RT.unit(a)
    assert validate_tcoalg(RT).clean
    assert validate_rmatrix(RT).clean
    assert validate_ribbon(RT).clean


def test_ribbon_extension_of_the_z2_double():
    RT = fixture("rt_d_ga2")
    assert RT.dim(0) == 8
    assert validate_tcoalg(RT).clean
    assert validate_rmatrix(RT).clean
    assert validate_ribbon(RT).clean


def test_v_commutes_past_h_through_the_conjugation():
    H = fixture("d_constant")
    RT = fixture("rt_d_constant")
    for a in H.grades:
        d = H.dim(a)
        v = RT.extra["v"][a]
        for i in range(d):
            h = Tensor.basis(QQ, 2 * d, i)
            ph = einsum("ij,j->i", H.phi(a, a), H.comp(a).basis(i))
            ph2 = Tensor.from_nested(QQ, ph.entries() + [0] * d)
            assert RT.mul(a, v, h) == RT.mul(a, ph2, v)


@pytest.mark.parametrize("name", ["d_ga2", "d_constant"])
def test_v_squared_is_the_double_drinfeld_element(name):
    H = fixture(name)
    RT = fixture("rt_" + name)
    dr = drinfeld_elements(H)
    for a in H.grades:
        v = RT.extra["v"][a]
        w = double_drinfeld(H, dr.u, a)
        padded = Tensor.from_nested(QQ, w.entries() + [0] * H.dim(a))
        assert RT.mul(a, v, v) == padded


def test_theta_equal_to_v_fails_the_coproduct_condition_when_v_is_not_an_involution():
    RT = fixture("rt_d_constant")
    assert validate_ribbon(RT).clean
    assert not validate_ribbon(RT, None, ribbon_family_from_v(RT)).passed("ribbon.coproduct")


def test_on_the_z2_double_v_is_an_involution():
    # u s(u) = 1 there, so theta = v and theta = v^-1 coincide
    RT = fixture("rt_d_ga2")
    v = RT.extra["v"][0]
    assert RT.mul(0, v, v) == RT.unit(0)
    assert validate_ribbon(RT, None, ribbon_family_from_v(RT)).clean


def test_double_is_deterministic():
    assert tcoalg_equal(double(fixture("ga2")), fixture("d_ga2"))

import pytest

from conftest import fixture, mutate
from crossedhopf.errors import GradeMismatch, ShapeMismatch
from crossedhopf.exact_linalg import QQ, Tensor, einsum, eye, mat_inv
from crossedhopf.fixtures import group_algebra, sweedler
from crossedhopf.tcoalg import (
    GradedElement,
    antipode_inverse,
    coopposite,
    elem_mul,
    iterated_comul,
    tcoalg_equal,
    validate_tcoalg,
)


def basis(H, a, i):
    return Tensor.basis(H.field, H.dim(a), i)


@pytest.mark.parametrize("name", ["trivial", "ga2", "ga3", "sweedler", "constant"])
def test_fixtures_are_clean(name):
    assert validate_tcoalg(fixture(name)).clean


def test_group_algebra_structure_by_hand():
    H = group_algebra(2)
    one, g = basis(H, 0, 0), basis(H, 0, 1)
    gg = einsum("i,j->ij", g, g).reshape(-1)
    assert H.comul[(0, 0)] @ g == gg
    assert H.antipode[0] @ g == g
    assert H.counit.entries() == [1, 1]
    assert H.mul(0, g, g) == one


def test_perturbed_product_is_flagged():
    H = group_algebra(2)
    rep = validate_tcoalg(mutate(H, "mul", 0, (1, 1, 0)))
    # g g = 2 still gives an associative algebra; the coproduct stops being multiplicative
    assert rep.passed("component.associativity")
    assert not rep.passed("comul.algebra.product")


def test_iterated_comul_base_cases():
    H = fixture("constant")
    assert iterated_comul(H, [1]) == eye(QQ, 3)
    assert iterated_comul(H, [1, 0]) == H.comul[(1, 0)]


def test_iterated_comul_on_a_grouplike():
    H = group_algebra(2)
    g = basis(H, 0, 1)
    ggg = einsum("i,j,k->ijk", g, g, g).reshape(-1)
    assert iterated_comul(H, [0, 0, 0]) @ g == ggg


def test_antipode_inverses():
    assert all(m == eye(QQ, 1) for m in antipode_inverse(fixture("trivial")).values())
    H = group_algebra(2)
    assert antipode_inverse(H)[0] == H.antipode[0]
    S = sweedler()
    si = antipode_inverse(S)[0]
    assert S.antipode[0] @ si == eye(QQ, 4)
    # s has order 4 on Sweedler's algebra, so s^-1 = s^3
    s = S.antipode[0]
    assert si == s @ s @ s
    assert si != s


def test_element_products():
    H = group_algebra(2)
    one, g = GradedElement(0, basis(H, 0, 0)), GradedElement(0, basis(H, 0, 1))
    assert elem_mul(H, one, g) == g
    assert elem_mul(H, g, g) == one
    S = sweedler()
    x = GradedElement(0, basis(S, 0, 2))
    assert elem_mul(S, x, x).coords.is_zero()
    C = fixture("constant")
    with pytest.raises(GradeMismatch):
        elem_mul(C, GradedElement(0, basis(C, 0, 0)), GradedElement(1, basis(C, 1, 0)))


def test_coopposite():
    T = fixture("trivial")
    assert tcoalg_equal(coopposite(T), T, with_structures=False)
    H = group_algebra(2)
    assert coopposite(H).comul[(0, 0)] == H.comul[(0, 0)]
    S = sweedler()
    assert validate_tcoalg(coopposite(S)).clean
    assert not tcoalg_equal(coopposite(S), S)
    assert tcoalg_equal(S, S)


def test_coopposite_of_constant_is_clean():
    assert validate_tcoalg(coopposite(fixture("constant"))).clean


def test_shape_errors_name_the_block():
    H = group_algebra(2)
    bad = H.with_(comul={(0, 0): eye(QQ, 2)})
    with pytest.raises(ShapeMismatch, match=r"comul \(0,0\)"):
        validate_tcoalg(bad)


def test_constant_builder_rejects_non_invertible_action():
    H = fixture("constant")
    zero = Tensor.zeros(QQ, (3, 3))
    conj = {**H.conj, (1, 0): zero}
    rep = validate_tcoalg(H.with_(conj=conj))
    assert not rep.passed("conj.invertible")


def test_antipode_sign_mutation_is_flagged():
    S = sweedler()
    s = S.antipode[0]
    rep = validate_tcoalg(S.with_(antipode={0: mat_inv(s)}))
    assert not rep.passed("antipode")

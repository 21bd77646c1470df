from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedhopf.errors import DivisionByZero, ShapeMismatch, Singular
from crossedhopf.exact_linalg import (
    GF,
    QQ,
    Tensor,
    add,
    column_basis,
    div,
    einsum,
    eye,
    field_from_name,
    flip,
    inv,
    kron,
    mat_inv,
    mat_mul,
    mul,
    neg,
    nullspace,
    rank,
    solve_in_span,
    sub,
)

F7 = GF(7)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def matrices(n, m, field=QQ, elements=None):
    elements = elements or (rationals if field is QQ else st.integers(0, field.p - 1))
    return st.lists(elements, min_size=n * m, max_size=n * m).map(
        lambda xs: Tensor.from_nested(field, np.array(xs, dtype=object).reshape(n, m).tolist())
    )


def M(rows, field=QQ):
    return Tensor.from_nested(field, rows)


# field operations ------------------------------------------------------------


def test_rational_sum_is_reduced():
    assert add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_inverse_of_one():
    assert inv(QQ(1)) == 1


def test_prime_field_product():
    # 3 * 5 = 15 = 2 * 7 + 1
    assert mul(F7(3), F7(5)) == F7(1)


def test_prime_field_values_are_canonical():
    assert int(F7(-1)) == 6
    assert int(F7(15)) == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        inv(QQ(0))
    with pytest.raises(DivisionByZero):
        div(F7(3), F7(0))


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        QQ.parse("0.5")
    assert QQ.parse("-3/6") == Fraction(-1, 2)


def test_field_names_round_trip():
    assert field_from_name("QQ") is QQ
    assert field_from_name("GF(7)") is F7
    with pytest.raises(ValueError):
        field_from_name("GF(8)")


@given(rationals, rationals)
def test_rational_field_axioms(a, b):
    assert sub(add(a, b), b) == a
    assert add(a, neg(a)) == 0
    if a != 0:
        assert mul(a, inv(a)) == 1
        assert div(mul(a, b), a) == b


@given(st.integers(), st.integers(1, 6))
def test_prime_field_axioms(a, b):
    x, y = F7(a), F7(b)
    assert mul(div(x, y), y) == x
    assert add(x, neg(x)) == F7(0)


# matrices ----------------------------------------------------------------------


def test_identity_product():
    assert eye(QQ, 2) @ eye(QQ, 2) == eye(QQ, 2)


def test_swap_is_involution():
    s = M([[0, 1], [1, 0]])
    assert s @ s == eye(QQ, 2)


def test_unipotent_inverse():
    # [[1,1],[0,1]] @ [[1,-1],[0,1]] = I
    assert mat_inv(M([[1, 1], [0, 1]])) == M([[1, -1], [0, 1]])


def test_scalar_inverse():
    assert mat_inv(M([[2]])) == M([[Fraction(1, 2)]])
    assert mat_inv(eye(QQ, 3)) == eye(QQ, 3)


def test_fixed_rational_inverse():
    # inverse computed by hand with the adjugate: det = 2, adj = [[4,-2],[-3,1]]
    a = M([[1, 2], [3, 4]])
    assert mat_inv(a) == M([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]])


def test_singular_and_shape_errors():
    with pytest.raises(Singular):
        mat_inv(M([[1, 2], [2, 4]]))
    with pytest.raises(ShapeMismatch):
        mat_mul(eye(QQ, 2), eye(QQ, 3))
    with pytest.raises(ShapeMismatch):
        mat_inv(M([[1, 2, 3]]))


def test_kron_identity_and_basis():
    assert kron(eye(QQ, 2), eye(QQ, 3)) == eye(QQ, 6)
    a, b = M([[1, 2], [3, 4]]), M([[0, 1], [5, 7]])
    ab = kron(a, b)
    for i in range(2):
        for j in range(2):
            e = kron(Tensor.basis(QQ, 2, i), Tensor.basis(QQ, 2, j))
            assert ab @ e == kron(a @ Tensor.basis(QQ, 2, i), b @ Tensor.basis(QQ, 2, j))


def test_flip_on_basis():
    f = flip(2, 3)
    for i in range(2):
        for j in range(3):
            src = kron(Tensor.basis(QQ, 2, i), Tensor.basis(QQ, 3, j))
            assert f @ src == kron(Tensor.basis(QQ, 3, j), Tensor.basis(QQ, 2, i))
    assert flip(3, 2) @ f == eye(QQ, 6)


def test_nullspace_and_rank():
    a = M([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(a)
    assert ns.shape == (3, 2)
    assert (a @ ns).is_zero()
    assert rank(a) == 1
    assert rank(ns) == 2


def test_column_basis_and_coordinates():
    a = M([[1, 2, 0], [0, 0, 1], [1, 2, 1]])
    basis = column_basis(a)
    assert basis.shape == (3, 2)
    x = solve_in_span(basis, a[:, 1])
    assert basis @ x == a[:, 1]


def test_large_entries_stay_exact():
    big = 10**15
    a = M([[big, 1], [1, big]])
    sq = a @ a
    assert sq.item(0, 0) == big * big + 1
    assert mat_inv(a) @ a == eye(QQ, 2)


def test_float_path_matches_object_path():
    rng = np.random.default_rng(0)
    x = rng.integers(-1000, 1000, size=(6, 5))
    y = rng.integers(-1000, 1000, size=(5, 4))
    a, b = Tensor(QQ, x), Tensor(QQ, y)
    expected = np.array(x, dtype=object) @ np.array(y, dtype=object)
    assert (a @ b).tolist() == expected.tolist()
    assert einsum("ij,jk->ik", a, b).tolist() == expected.tolist()


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@settings(max_examples=40, deadline=None)
@given(matrices(2, 2), matrices(2, 2), matrices(2, 2), matrices(2, 2))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3))
def test_inverse_when_invertible(a):
    if rank(a) < 3:
        with pytest.raises(Singular):
            mat_inv(a)
    else:
        assert a @ mat_inv(a) == eye(QQ, 3)
        assert mat_inv(a) @ a == eye(QQ, 3)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3, F7))
def test_prime_field_inverse(a):
    if rank(a) == 3:
        assert a @ mat_inv(a) == eye(F7, 3)


@settings(max_examples=30, deadline=None)
@given(matrices(2, 4))
def test_rank_nullity(a):
    assert rank(a) + nullspace(a).shape[1] == 4

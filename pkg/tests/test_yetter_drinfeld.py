import itertools

import pytest
from conftest import fixture

from crossedhopf.errors import GradeMismatch
from crossedhopf.exact_linalg import QQ, eye, kron
from crossedhopf.modules import (
    crossing,
    module_sample,
    regular_module,
    tensor_modules,
    validate_module,
)
from crossedhopf.yetter_drinfeld import (
    YDModule,
    check_grade,
    check_halfbraiding,
    ddouble_to_yd,
    halfbraiding_eval,
    halfbraiding_from_ddouble,
    halfbraiding_from_yd,
    is_yd_map,
    transported_braiding,
    trivial_coaction,
    unit_yd,
    validate_yd,
    yd_braiding,
    yd_crossing,
    yd_from_halfbraiding,
    yd_sample,
    yd_tensor,
    yd_to_ddouble,
)

BASES = {"ga2": "d_ga2", "sweedler": "d_sweedler", "constant": "d_constant"}
LIMIT = {"ga2": 2, "sweedler": 3, "constant": 6}


def small_yd(base: str):
    H, D = fixture(base), fixture(BASES[base])
    mods = [M for M in module_sample(D, max_dim=LIMIT[base]) if M.dim <= LIMIT[base]]
    return H, D, yd_sample(H, mods)


@pytest.mark.parametrize("base", list(BASES))
def test_sampled_yd_modules_are_valid(base):
    H, _, sample = small_yd(base)
    assert len(sample) >= 2
    for V in sample:
        assert validate_yd(H, V).clean, V.name


def test_unit_is_yd():
    for base in BASES:
        H = fixture(base)
        assert validate_yd(H, unit_yd(H)).clean


def test_trivial_coaction_on_regular_group_algebra_module():
    H = fixture("ga3")
    V = trivial_coaction(H, regular_module(H, 0))
    assert validate_yd(H, V).clean


def test_perturbed_coaction_is_rejected():
    H, _, sample = small_yd("sweedler")
    V = sample[-1]
    co = dict(V.coaction)
    co[0] = co[0] + kron(eye(QQ, V.dim), H.unit(0).reshape(-1, 1))
    rep = validate_yd(H, YDModule(V.module, co))
    assert not rep.clean


@pytest.mark.parametrize("base", list(BASES))
def test_double_module_round_trip(base):
    H, D, sample = small_yd(base)
    for V in sample:
        M = yd_to_ddouble(H, V)
        assert validate_module(D, M).clean
        assert ddouble_to_yd(H, M).same_as(V)


def test_double_modules_round_trip_the_other_way():
    H, D = fixture("constant"), fixture("d_constant")
    for M in module_sample(D, max_dim=6):
        if M.dim <= 6:
            assert yd_to_ddouble(H, ddouble_to_yd(H, M)).same_as(M)


@pytest.mark.parametrize("base", ["sweedler", "constant"])
def test_tensor_and_crossing_stay_yd(base):
    H, _, sample = small_yd(base)
    one = unit_yd(H)
    for V, W in itertools.product(sample[:4], repeat=2):
        VW = yd_tensor(H, V, W)
        assert validate_yd(H, VW).clean
    for V in sample:
        assert yd_tensor(H, one, V).same_as(V)
        assert yd_tensor(H, V, one).same_as(V)
        for b in H.grades:
            X = yd_crossing(H, b, V)
            assert validate_yd(H, X).clean
            assert yd_crossing(H, H.group.inv(b), X).same_as(V)


@pytest.mark.parametrize("base", list(BASES))
def test_braiding_matches_the_double(base):
    H, D, sample = small_yd(base)
    for V, W in itertools.product(sample, repeat=2):
        c = yd_braiding(H, V, W)
        assert c == transported_braiding(H, D, V, W)
        src = yd_tensor(H, V, W)
        tgt = yd_tensor(H, yd_crossing(H, V.grade, W), V)
        assert is_yd_map(H, src, tgt, c)


def test_halfbraiding_round_trip():
    H, D, sample = small_yd("sweedler")
    xs = [M for M in module_sample(H) if M.dim <= 2]
    for V in sample:
        sigma = halfbraiding_from_yd(H, V)
        assert check_halfbraiding(H, sigma, xs).clean
        assert yd_from_halfbraiding(H, sigma).same_as(V)


def test_halfbraiding_from_the_double_agrees_with_the_yd_one():
    H, D = fixture("constant"), fixture("d_constant")
    for M in [M for M in module_sample(D, max_dim=6) if M.dim <= 6]:
        sigma = halfbraiding_from_ddouble(H, M)
        V = ddouble_to_yd(H, M)
        for X in module_sample(H):
            assert sigma.evaluate(X)[0] == halfbraiding_eval(H, V, X)[0]


def test_halfbraiding_is_natural_in_tensor_products():
    H, _, sample = small_yd("constant")
    V = sample[-1]
    X, Y = regular_module(H, 1), regular_module(H, 0)
    fwd = halfbraiding_eval(H, V, tensor_modules(H, X, Y))[0]
    one = eye(QQ, X.dim)
    step = kron(one, halfbraiding_eval(H, V, Y)[0]) @ kron(halfbraiding_eval(H, V, X)[0], eye(QQ, Y.dim))
    assert fwd == step
    assert crossing(H, V.grade, X).grade == H.group.conj(X.grade, V.grade)


def test_grade_mismatch():
    H, _, sample = small_yd("constant")
    graded = {V.grade for V in sample}
    assert graded == {0, 1}
    V = next(V for V in sample if V.grade == 0)
    W = next(V for V in sample if V.grade == 1)
    with pytest.raises(GradeMismatch):
        check_grade(V, W)

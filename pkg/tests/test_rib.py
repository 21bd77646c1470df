import itertools

import pytest
from conftest import fixture, with_trivial_r

from crossedhopf.errors import GradeMismatch, ShapeMismatch, Singular
from crossedhopf.exact_linalg import QQ, Tensor, eye
from crossedhopf.modules import (
    HModule,
    module_sample,
    regular_module,
    tensor_modules,
    validate_module,
)
from crossedhopf.rib import (
    center_twist_condition,
    is_rib_map,
    rib_dual,
    rib_from_rt_module,
    rib_object,
    rib_tensor,
    rib_tortility,
    rt_module_from_rib,
    twist_square_target,
    unit_rib,
    validate_rib,
)


def rt_objects(limit=4):
    H, RT = fixture("d_ga2"), fixture("rt_d_ga2")
    mods = [N for N in module_sample(RT, max_dim=limit) if N.dim <= limit]
    return H, RT, [rib_from_rt_module(H, RT, N) for N in mods]


def test_unit_object():
    H = fixture("d_ga2")
    one = unit_rib(H)
    assert validate_rib(H, None, one).clean
    assert center_twist_condition(H, None, one)
    T = with_trivial_r(fixture("trivial"))
    assert validate_rib(T, None, unit_rib(T)).clean


def test_objects_from_the_ribbon_extension_are_valid():
    H, _, objs = rt_objects()
    assert len(objs) >= 3
    for O in objs:
        assert validate_rib(H, None, O).clean, O.name
        assert center_twist_condition(H, None, O)


def test_doubling_t_breaks_the_square_condition():
    H, _, objs = rt_objects()
    O = objs[-1]
    bad = rib_object(O.module, O.t * 2)
    rep = validate_rib(H, None, bad)
    assert rep.passed("rib.linear")
    assert not rep.passed("rib.twist_square")
    assert not center_twist_condition(H, None, bad)


def test_singular_t_is_reported():
    H = fixture("d_ga2")
    M = regular_module(H, 0)
    rep = validate_rib(H, None, rib_object(M, Tensor.zeros(QQ, (4, 4))))
    assert not rep.passed("rib.twist_square")


def test_rib_object_checks_shape():
    H = fixture("d_ga2")
    with pytest.raises(ShapeMismatch):
        rib_object(regular_module(H, 0), eye(QQ, 3))


def test_tensor_with_unit_and_associativity():
    H, _, objs = rt_objects()
    one = unit_rib(H)
    for O in objs:
        assert rib_tensor(H, None, one, O).same_as(O)
        assert rib_tensor(H, None, O, one).same_as(O)
    for A, B, C in itertools.product(objs[:3], repeat=3):
        left = rib_tensor(H, None, rib_tensor(H, None, A, B), C)
        right = rib_tensor(H, None, A, rib_tensor(H, None, B, C))
        assert left.same_as(right)


def test_tensor_and_dual_stay_valid():
    H, _, objs = rt_objects()
    for A, B in itertools.product(objs[:3], repeat=2):
        assert validate_rib(H, None, rib_tensor(H, None, A, B)).clean
    for O in objs:
        Od = rib_dual(H, O)
        assert validate_rib(H, None, Od).clean
        lhs, rhs = rib_tortility(H, O)
        assert lhs == rhs


def test_dual_of_unit_is_unit():
    H = fixture("d_ga2")
    one = unit_rib(H)
    assert rib_dual(H, one).same_as(one)


def test_rib_maps():
    H, _, objs = rt_objects()
    O = objs[1]
    assert is_rib_map(O, O, eye(QQ, O.dim))
    assert not is_rib_map(O, rib_object(O.module, O.t * 2), eye(QQ, O.dim))
    with pytest.raises(ShapeMismatch):
        is_rib_map(O, objs[0], eye(QQ, O.dim))


def test_round_trip_with_the_ribbon_extension():
    H, RT, objs = rt_objects()
    for O in objs:
        N = rt_module_from_rib(H, RT, O)
        assert validate_module(RT, N).clean
        assert rib_from_rt_module(H, RT, N).same_as(O)


def test_tensor_matches_the_ribbon_extension():
    H, RT, objs = rt_objects()
    for A, B in itertools.product(objs, repeat=2):
        NA, NB = rt_module_from_rib(H, RT, A), rt_module_from_rib(H, RT, B)
        via_rt = rib_from_rt_module(H, RT, tensor_modules(RT, NA, NB))
        assert via_rt.same_as(rib_tensor(H, None, A, B))


def test_twist_square_target_on_the_unit_is_one():
    H = fixture("d_constant")
    assert twist_square_target(H, None, unit_rib(H).module) == eye(QQ, 1)


def test_mismatched_extension_is_rejected():
    H = fixture("d_constant")
    RT = fixture("rt_d_ga2")
    M = regular_module(H, 0)
    with pytest.raises(GradeMismatch):
        rt_module_from_rib(H, RT, rib_object(M, eye(QQ, M.dim)))


def test_non_invertible_v_action_is_reported():
    H, RT = fixture("d_ga2"), fixture("rt_d_ga2")
    # the base acts through the counit and v acts by zero
    scalars = [H.counit.item(i) for i in range(4)] + [0] * 4
    N = HModule(0, Tensor.from_nested(QQ, [[[x]] for x in scalars]))
    with pytest.raises(Singular):
        rib_from_rt_module(H, RT, N)


def test_objects_over_the_constant_double():
    H, RT = fixture("d_constant"), fixture("rt_d_constant")
    sample = [N for N in module_sample(RT, max_dim=12) if N.dim <= 12]
    # the unit plus one small module in each grade
    mods = [sample[0]] + [next(N for N in sample[1:] if N.grade == a) for a in H.grades]
    assert [N.grade for N in mods] == [0, 0, 1]
    for N in mods:
        O = rib_from_rt_module(H, RT, N)
        assert validate_rib(H, None, O).clean, O.name
        assert center_twist_condition(H, None, O)
        assert rt_module_from_rib(H, RT, O).same_as(N)

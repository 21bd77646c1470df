import functools
import itertools

import pytest

from crossedhopf.constructions import double, ribbon_extension
from crossedhopf.exact_linalg import Tensor
from crossedhopf.fixtures import constant_z3_over_z2, group_algebra, sweedler, trivial
from crossedhopf.finite_group import cyclic
from crossedhopf.quasitriangular import trivial_rmatrix
from crossedhopf.tcoalg import Component, TCoalg

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@functools.lru_cache(maxsize=None)
def fixture(name: str) -> TCoalg:
    """Cached fixtures; constructions are deterministic so sharing them is safe."""
    builders = {
        "trivial": lambda: trivial(cyclic(2)),
        "ga2": lambda: group_algebra(2),
        "ga3": lambda: group_algebra(3),
        "sweedler": sweedler,
        "constant": constant_z3_over_z2,
        "d_ga2": lambda: double(group_algebra(2)),
        "d_ga3": lambda: double(group_algebra(3)),
        "d_sweedler": lambda: double(sweedler()),
        "d_constant": lambda: double(constant_z3_over_z2()),
        "d_trivial": lambda: double(trivial(cyclic(2))),
        "rt_d_ga2": lambda: ribbon_extension(fixture("d_ga2")),
        "rt_d_constant": lambda: ribbon_extension(fixture("d_constant")),
    }
    return builders[name]()


def with_trivial_r(H: TCoalg) -> TCoalg:
    return H.with_(rmatrix=trivial_rmatrix(H))


def structure_matrices(H: TCoalg):
    """Every structure array as (label, getter key)."""
    for a in H.grades:
        yield ("mul", a)
        yield ("unit", a)
        yield ("antipode", a)
    for key in sorted(H.comul):
        yield ("comul", key)
    for key in sorted(H.conj):
        yield ("conj", key)
    yield ("counit", None)


def _bump(t: Tensor, index: tuple[int, ...]) -> Tensor:
    cells = itertools.product(*map(range, t.shape))
    e = Tensor.from_scalars(t.field, [t.field.one if i == index else t.field.zero for i in cells], t.shape)
    return t + e


def mutate(H: TCoalg, what: str, key, index: tuple[int, ...]) -> TCoalg:
    """Add one to a single entry of one structure array."""
    if what == "mul":
        c = H.comp(key)
        return H.with_(components={**H.components, key: Component(_bump(c.mul, index), c.unit)})
    if what == "unit":
        c = H.comp(key)
        return H.with_(components={**H.components, key: Component(c.mul, _bump(c.unit, index))})
    if what == "counit":
        return H.with_(counit=_bump(H.counit, index))
    table = {"antipode": H.antipode, "comul": H.comul, "conj": H.conj}[what]
    return H.with_(**{what: {**table, key: _bump(table[key], index)}})


def array_of(H: TCoalg, what: str, key) -> Tensor:
    if what == "mul":
        return H.comp(key).mul
    if what == "unit":
        return H.unit(key)
    if what == "counit":
        return H.counit
    return {"antipode": H.antipode, "comul": H.comul, "conj": H.conj}[what][key]


@pytest.fixture
def record_acceptance():
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[number] = (title, passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

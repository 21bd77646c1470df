"""Adjoin a ribbon element to the double of k[Z/2] and look at both twist choices.

On this fixture u s(u) = 1, so v is an involution and the twist v^-1 equals
v itself; on the constant T-coalgebra's double the two choices differ and only
v^-1 passes the ribbon axioms.
"""
from crossedhopf.constructions import double, ribbon_extension, ribbon_family_from_v
from crossedhopf.fixtures import constant_z3_over_z2, group_algebra
from crossedhopf.quasitriangular import validate_ribbon, validate_rmatrix
from crossedhopf.tcoalg import validate_tcoalg

for base in (group_algebra(2), constant_z3_over_z2()):
    D = double(base)
    RT = ribbon_extension(D)
    v = RT.extra["v"][0]
    involution = RT.mul(0, v, v) == RT.unit(0)
    clean = all(r.clean for r in (validate_tcoalg(RT), validate_rmatrix(RT), validate_ribbon(RT)))
    with_v = validate_ribbon(RT, None, ribbon_family_from_v(RT))
    print(f"{base.name}: component dim {RT.dim(0)}, v^2 = 1: {involution}")
    print(f"  twist v^-1 passes every suite: {clean}")
    print(f"  twist v    fails the coproduct rule: {not with_v.passed('ribbon.coproduct')}")

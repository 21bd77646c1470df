"""Yetter-Drinfeld modules over the constant T-coalgebra k[Z/3] over Z/2.

Modules over the double are turned into YD modules and back, and the YD
braiding is compared with the braiding the double's R-matrix induces.
"""
import itertools

from crossedhopf.constructions import double
from crossedhopf.fixtures import constant_z3_over_z2
from crossedhopf.modules import module_sample
from crossedhopf.yetter_drinfeld import (
    ddouble_to_yd,
    transported_braiding,
    validate_yd,
    yd_braiding,
    yd_to_ddouble,
)

H = constant_z3_over_z2()
D = double(H)
mods = [M for M in module_sample(D, max_dim=6) if M.dim <= 6]
yds = [ddouble_to_yd(H, M) for M in mods]
for M, V in zip(mods, yds):
    back = yd_to_ddouble(H, V).same_as(M)
    print(f"grade {V.grade} dim {V.dim:<2} YD axioms {'ok' if validate_yd(H, V).clean else 'FAIL'}, round trip {back}")

agree = sum(yd_braiding(H, V, W) == transported_braiding(H, D, V, W) for V, W in itertools.product(yds, repeat=2))
print(f"braidings agreeing with the double: {agree} of {len(yds) ** 2}")

"""Build the quantum double of k[Z/2], inspect its Drinfeld element, and verify it."""
from crossedhopf.constructions import double
from crossedhopf.fixtures import group_algebra
from crossedhopf.quasitriangular import check_drinfeld_props, drinfeld_elements, validate_rmatrix
from crossedhopf.tcoalg import validate_tcoalg


def show(vec, names):
    return " + ".join(f"{c} [{n}]" for c, n in zip(vec.entries(), names) if c != 0) or "0"


H = group_algebra(2)
D = double(H)
print(f"double of {H.name}: component dimension {D.dim(0)}")
print("basis:", ", ".join(D.basis_names[0]))

for rep in (validate_tcoalg(D), validate_rmatrix(D), check_drinfeld_props(D)):
    print(f"{rep.title:<40} {'clean' if rep.clean else 'FAILED'} ({len(rep.entries)} checks)")

dr = drinfeld_elements(D)
print("u =", show(dr.u[0], D.basis_names[0]))
print("u^-1 =", show(dr.u_inv[0], D.basis_names[0]))

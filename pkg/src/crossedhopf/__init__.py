"""Exact computations with crossed Hopf group-coalgebras and their representation categories."""
from .constructions import double, dual_coop, mirror, ribbon_extension
from .exact_linalg import GF, QQ, Tensor, einsum, eye, flip, kron, mat_inv, mat_mul
from .finite_group import FiniteGroup, cyclic, group_validate, trivial_group
from .fixtures import (
    DEMO_NAMES,
    constant_z3_over_z2,
    demo,
    group_algebra,
    sweedler,
    trivial,
)
from .modules import (
    HModule,
    braiding_map,
    check_braiding_axioms,
    check_twist_axioms,
    crossing,
    dual_module,
    good_dual_predicates,
    module_sample,
    omega,
    regular_module,
    tensor_modules,
    trivial_module,
    twist_map,
    validate_module,
)
from .quasitriangular import (
    RibbonFamily,
    RMatrixFamily,
    check_antipode_identities,
    check_drinfeld_props,
    drinfeld_elements,
    mirror_rmatrix,
    validate_ribbon,
    validate_rmatrix,
)
from .report import Report
from .rib import (
    RibObject,
    rib_dual,
    rib_from_rt_module,
    rib_tensor,
    rt_module_from_rib,
    validate_rib,
)
from .tcoalg import TCoalg, coopposite, tcoalg_equal, validate_tcoalg
from .yetter_drinfeld import (
    YDModule,
    ddouble_to_yd,
    halfbraiding_eval,
    validate_yd,
    yd_braiding,
    yd_from_halfbraiding,
    yd_to_ddouble,
)

__all__ = [
    "DEMO_NAMES",
    "FiniteGroup",
    "GF",
    "HModule",
    "QQ",
    "RMatrixFamily",
    "Report",
    "RibObject",
    "RibbonFamily",
    "TCoalg",
    "Tensor",
    "YDModule",
    "braiding_map",
    "check_antipode_identities",
    "check_braiding_axioms",
    "check_drinfeld_props",
    "check_twist_axioms",
    "constant_z3_over_z2",
    "coopposite",
    "crossing",
    "cyclic",
    "ddouble_to_yd",
    "demo",
    "double",
    "drinfeld_elements",
    "dual_coop",
    "dual_module",
    "einsum",
    "eye",
    "flip",
    "good_dual_predicates",
    "group_algebra",
    "group_validate",
    "halfbraiding_eval",
    "kron",
    "mat_inv",
    "mat_mul",
    "mirror",
    "mirror_rmatrix",
    "module_sample",
    "omega",
    "regular_module",
    "rib_dual",
    "rib_from_rt_module",
    "rib_tensor",
    "ribbon_extension",
    "rt_module_from_rib",
    "sweedler",
    "tcoalg_equal",
    "tensor_modules",
    "trivial",
    "trivial_group",
    "trivial_module",
    "twist_map",
    "validate_module",
    "validate_rib",
    "validate_ribbon",
    "validate_rmatrix",
    "validate_tcoalg",
    "validate_yd",
    "yd_braiding",
    "yd_from_halfbraiding",
    "yd_to_ddouble",
]

__version__ = "0.1.0"

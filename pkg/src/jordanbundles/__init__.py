"""Exact computational algebra for p-nilpotent operators attached to
infinitesimal group schemes: finite-field linear algebra, weighted graded
polynomial rings, one-parameter-subgroup varieties, module representations,
global/local nilpotent operators with Jordan-type invariants, and graded
kernel/image sheaves on the projective line with splitting types."""

from .field import (
    Field,
    ext_field_build,
    prime_field,
    enumerate_elements,
    row_reduce,
    rank,
    kernel_basis,
    solve,
    inverse,
)
from .polyring import (
    WeightedRing,
    Poly,
    PolyMatrix,
    Substitution,
    substitute,
    poly_eval,
    monomial_basis,
    generic_rank,
)
from .schemes import (
    FAMILIES,
    LieData,
    GroupSchemeDesc,
    multi_additive,
    additive_kernel,
    restricted_lie,
    restricted_lie_sl2,
    sl2_height2,
    gln_height2,
    generator_names,
    coord_ring,
    validate_point,
    enumerate_points,
    sample_points,
    frobenius_point_map,
    conic_chart_sl2,
    identity_chart_rank2,
    p1_chart,
)
from .modules import (
    ModuleRep,
    validate_module,
    dual_module,
    tensor_module,
    direct_sum,
    external_product,
    symmetric_power,
    frobenius_twist_gar,
    submodule_generated,
    restrict_subspace,
    trivial_module,
    construct_zigzag,
    construct_weyl_sl2,
    construct_steinberg,
    regular_module_E,
    free_module_E,
    construct_syzygy_E2,
    construct_duals_example,
    sl2_height2_natural,
    gln_natural,
    gln_tensor_power,
    decompose_summands,
    principal_indecomposable_sl2,
    random_module,
    module_to_dict,
    module_from_dict,
)
from .operators import (
    ThetaMatrix,
    theta_global,
    theta_local,
    JordanType,
    jordan_type,
    jordan_type_chain_oracle,
    local_jtype,
    mj_fiber_dim,
    ConstancyReport,
    constant_jrank_report,
    generic_jrank,
    jtype_scan,
    rank_variety_scan,
    constant_kernel_image_property,
)
from .bundles import (
    P1Matrix,
    restrict_p1,
    GradedSubmodule,
    kernel_graded,
    image_graded,
    SplittingType,
    splitting_type,
    SheafReport,
    subquotient_mj,
    image_sheaf_report,
    global_sections,
    BundleTestReport,
    projectivity_test,
    endotrivial_test,
    K0Class,
    k0_class,
    rho_kappa_matrix,
)

__version__ = "0.1.0"

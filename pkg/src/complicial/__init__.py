"""Finite stratified simplicial sets, Gray tensor cubes, coherent paths,
Gray-category nerves, and a certified anodyne-extension verifier."""

from .operators import (
    MINUS,
    PLUS,
    Operator,
    compose_ops,
    delta,
    elementary,
    ez_factorize,
    identity,
    is_admissible,
    make_operator,
    rho_operator,
    rho_precompose,
    sigma,
)
from .stratified import (
    FiniteStratifiedSet,
    Simplex,
    StratifiedMap,
    SubsetHandle,
    enumerate_maps,
    gray_product,
    is_subset_kind,
    make_thin,
    regular_generated,
    set_from_json,
    set_to_json,
    subset_to_set,
    union_regular,
    validate_set,
)
from .shapes import (
    C_ddot,
    C_dot,
    CubeFunction,
    big_C,
    big_H,
    boundary,
    c_map,
    classify_cube_simplex,
    complicial,
    complicial_dprimed,
    complicial_primed,
    cube,
    horn,
    parse_vertex_chain,
    special_top,
    special_w,
    standard,
    standard_thin,
    vertex_chain,
)
from .hcpath import (
    PathArrow,
    compose_path,
    hc_horn_member,
    hom_set,
    path_act,
    split_at_zeros,
    top_special_arrow,
)
from .anodyne import (
    AnodyneCertificate,
    HornPushout,
    LiftingReport,
    ThinHornPushout,
    ThinnessPushout,
    builtin_certificates,
    certificate_from_json,
    certificate_to_json,
    rlp_report,
    search_tower,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Support-level model of a stratified tensor triangulated category."""
from .model import (
    PRESETS,
    BousfieldClassRepr,
    DichotomyWitness,
    ModelObject,
    Scenario,
    SupportSpace,
    ThickClassRepr,
    antichain_scenario,
    bousfield_class,
    build_scenario,
    chain_scenario,
    coproduct,
    coproduct_class,
    diamond_scenario,
    dichotomy_check,
    gamma,
    generator_object,
    hom_cosupp,
    injective_hull_object,
    is_acyclic,
    is_local,
    kinj_compact_preset,
    koszul_object,
    perp_check,
    perp_sides,
    scenario_preset,
    tensor,
    tensor_class,
    thick_class,
    unit_object,
    zero_object,
)
from .spectra import (
    BalmerReport,
    SpF,
    as_primes,
    balmer_point,
    balmer_primes,
    bousfield_lattice,
    bousfield_point,
    f_map,
    sp_f,
    supp_T,
    supp_Tc,
    support_axioms_check,
    thick_lattice,
    universal_support,
    universal_support_candidates,
)
from .strata import (
    GammaP,
    RecollementReport,
    gamma_orthogonality_table,
    gamma_P_via_opens,
    gamma_table,
    local_global_and_stratified_check,
    recollement_decompose,
    thomason_report,
    thomason_roundtrip,
)
from .verify import class_frame_laws, verify_scenario

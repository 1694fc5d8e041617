"""Exact combinatorics of genuine small representations of nonlinear
double covers of split simply-laced groups at infinitesimal character rho/2."""

from __future__ import annotations

from .root_system import (
    BetaChain,
    RootSubsystem,
    RootSystem,
    ScopeError,
    WordError,
    build_root_system,
    canonical_reflection_word,
    decompose_to_chain,
    integral_system,
    half_integral_roots,
)
from .cartan import (
    CartanClass,
    CenterData,
    FiniteAbelianGroup,
    HasseDiagram,
    Involution,
    TorusShape,
    cartan_classes,
    cartan_shape,
    cover_center_data,
    genuine_central_character_count,
    hasse_diagram,
    involution_for_class,
    root_type,
)
from .parameters import (
    PairSetParameter,
    TransformError,
    cayley,
    class_of,
    contains,
    enumerate_block,
    length,
    make_parameter,
    orbit_representatives,
    pi_RD,
    pseudospherical_params,
    rd_subsets,
    theta,
    tower_parameter,
)
from .coherent import (
    CertificateError,
    ChainCertificate,
    RuleOutReport,
    StabilizerDescription,
    chain_types,
    count_small,
    replay_witness,
    rule_out,
    stabilizer,
)
from .klv_poset import (
    FormalIntegerCombination,
    M_entry,
    ParameterPoset,
    block_poset,
    m_entry,
    tower_poset,
    verify_inversion,
    zuckerman_restricted,
)
from .lifting import (
    K_coefficient,
    TheoremReport,
    cartan_constant,
    lift_trivial,
    verify_main_theorem,
)

__all__ = [
    "BetaChain",
    "CartanClass",
    "CenterData",
    "CertificateError",
    "ChainCertificate",
    "FiniteAbelianGroup",
    "FormalIntegerCombination",
    "HasseDiagram",
    "Involution",
    "K_coefficient",
    "M_entry",
    "PairSetParameter",
    "ParameterPoset",
    "RootSubsystem",
    "RootSystem",
    "RuleOutReport",
    "ScopeError",
    "StabilizerDescription",
    "TheoremReport",
    "TorusShape",
    "TransformError",
    "WordError",
    "block_poset",
    "build_root_system",
    "canonical_reflection_word",
    "cartan_classes",
    "cartan_constant",
    "cartan_shape",
    "cayley",
    "chain_types",
    "class_of",
    "contains",
    "count_small",
    "cover_center_data",
    "decompose_to_chain",
    "enumerate_block",
    "genuine_central_character_count",
    "half_integral_roots",
    "hasse_diagram",
    "integral_system",
    "involution_for_class",
    "length",
    "lift_trivial",
    "m_entry",
    "make_parameter",
    "orbit_representatives",
    "pi_RD",
    "pseudospherical_params",
    "rd_subsets",
    "replay_witness",
    "root_type",
    "rule_out",
    "stabilizer",
    "theta",
    "tower_parameter",
    "tower_poset",
    "verify_inversion",
    "verify_main_theorem",
    "zuckerman_restricted",
]

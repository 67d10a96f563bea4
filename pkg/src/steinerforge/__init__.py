"""steinerforge: binary cyclic codes with two-coset defining sets, their
extensions and duals, exact weight distributions, and the combinatorial
designs (including Steiner systems) carried by their fixed-weight codewords.

Everything is certified: dimensions against closed forms, weight totals
against 2^k, design claims by exhaustive coverage counting, and group
invariance by checking every affine map.  Hot loops run on a compiled
extension when available, with a pure-Python fallback selected at import.
"""

__version__ = "0.1.0"

from .affine import (
    AffineMap,
    InvarianceReport,
    all_maps,
    apply_point,
    blocks_invariant_under,
    certify_invariance,
    compose,
    group_order,
    identity_map,
    inverse,
    position_permutation,
    random_map,
    require_invariance,
    solve_pair,
)
from .am import AmReport, assmus_mattson, largest_w
from .codes import (
    CONVENTION,
    DistanceResult,
    LinearCode,
    Provenance,
    build_cyclic,
    build_cyclic_from_defining_set,
    column_syndromes,
    dual,
    extend,
    load_code,
    membership_by_defining_set,
    membership_matrix,
    min_distance,
    power_sum,
    puncture,
    save_code,
)
from .cyclotomic import (
    DefiningSet,
    coset,
    coset_leaders,
    defining_set_for,
    klp_affine_invariant,
    p_adic_leq,
)
from .designs import (
    CoverageReport,
    DesignCertificate,
    DesignInstance,
    block_count,
    certify,
    design_from_code,
    enumerate_weight_w,
    load_blocks,
    save_blocks,
    save_certificate,
    steiner_admissible_v,
    steiner_check,
    verify_t_design,
)
from .errors import CertificationError, ConsistencyError, InfeasibleError
from .gf2 import BitMatrix, GF2m, default_modulus, minimal_polynomial
from .kernels import active_backend, have_compiled
from .weights import (
    WeightDistribution,
    brute_weight_distribution,
    closed_form_dual_wd,
    extended_primal_wd_closed_form,
    macwilliams_transform,
    power_moment_check,
)

__all__ = [
    "__version__",
    # errors
    "CertificationError", "ConsistencyError", "InfeasibleError",
    # fields and matrices
    "BitMatrix", "GF2m", "default_modulus", "minimal_polynomial",
    # cyclotomic structure
    "DefiningSet", "coset", "coset_leaders", "defining_set_for",
    "klp_affine_invariant", "p_adic_leq",
    # codes
    "CONVENTION", "DistanceResult", "LinearCode", "Provenance",
    "build_cyclic", "build_cyclic_from_defining_set", "column_syndromes",
    "dual", "extend", "load_code", "membership_by_defining_set",
    "membership_matrix", "min_distance", "power_sum", "puncture", "save_code",
    # weight distributions
    "WeightDistribution", "brute_weight_distribution", "closed_form_dual_wd",
    "extended_primal_wd_closed_form", "macwilliams_transform",
    "power_moment_check",
    # designs
    "CoverageReport", "DesignCertificate", "DesignInstance", "block_count",
    "certify", "design_from_code", "enumerate_weight_w", "load_blocks",
    "save_blocks", "save_certificate", "steiner_admissible_v", "steiner_check",
    "verify_t_design",
    # affine group
    "AffineMap", "InvarianceReport", "all_maps", "apply_point",
    "blocks_invariant_under", "certify_invariance", "compose", "group_order",
    "identity_map", "inverse", "position_permutation", "random_map",
    "require_invariance", "solve_pair",
    # criterion
    "AmReport", "assmus_mattson", "largest_w",
    # backend
    "active_backend", "have_compiled",
]

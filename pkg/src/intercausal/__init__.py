"""Inter-causal structure of two binary causes sharing binary evidence.

The package answers three questions about a 2x2 conditional likelihood
table p{e|A,B}: whether observing one evidence state leaves the causes
independent (a rank-one test), how strongly the other state couples them
(synergy measures with an exclusion/collaboration sign), and what the
resulting beliefs look like as the priors and evidence weight vary
(closed forms, cross-checked against brute-force enumeration).

Conditioning convention everywhere: rows index B (positive state first),
columns index A (positive state first).
"""

from .errors import (
    DegenerateEntriesError,
    DomainError,
    ImpossibleEvidenceError,
    InfeasibleError,
    IntercausalError,
    NonPositiveWeightError,
    NotCICIError,
    OutOfNoisyOrRangeError,
    OutOfRangeError,
    ParseError,
    ZeroPreposteriorError,
)
from .core import (
    BeliefQuery,
    EvidenceState,
    FactoredSymmetric,
    GeneralLikelihoodMatrix,
    LikelihoodMatrix,
    NoisyOrParams,
    SingularFactorization,
    SynergyClass,
    SynergyReport,
    probabilities,
    require_probability,
)
from .cici import (
    DEFAULT_TOL,
    SwapClass,
    canonicalize,
    classify_swap,
    complete_collaboration_matrix,
    complete_exclusion_matrix,
    factorize,
    is_cici,
    is_degenerate_double_cici,
    noisy_or_matrix,
    noisy_or_to_singular,
    noisy_or_to_symmetric,
    outer_product_matrix,
    singular_to_noisy_or,
    symmetric_to_noisy_or,
)
from .synergy import (
    additive_synergy,
    bayes_reverse,
    multiplicative_synergy,
    scale_axis,
    synergy_report,
)
from .inference import (
    BeliefSurface,
    EdgeCurve,
    JointPotential,
    OracleMarginals,
    belief_A,
    belief_B,
    belief_surface,
    brute_force_oracle,
    edge_csv,
    edge_curve,
    joint_potential,
    scaling_invariance_check,
    surface_csv,
)
from .bounds import (
    CornerValue,
    ExclusionValue,
    Expansion,
    confirmed_corner,
    estimate_parameters,
    factored_symmetric_matrix,
    independent_edge,
    positive_exclusion,
    prior_straddle_check,
    reciprocal_expansion,
)
from .verify import ALL_CHECKS, CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "IntercausalError",
    "DomainError",
    "OutOfRangeError",
    "NotCICIError",
    "DegenerateEntriesError",
    "OutOfNoisyOrRangeError",
    "NonPositiveWeightError",
    "ZeroPreposteriorError",
    "ImpossibleEvidenceError",
    "InfeasibleError",
    "ParseError",
    # core values
    "EvidenceState",
    "SynergyClass",
    "LikelihoodMatrix",
    "GeneralLikelihoodMatrix",
    "NoisyOrParams",
    "SingularFactorization",
    "FactoredSymmetric",
    "BeliefQuery",
    "SynergyReport",
    "require_probability",
    "probabilities",
    # rank-one structure and conversions
    "DEFAULT_TOL",
    "SwapClass",
    "outer_product_matrix",
    "noisy_or_matrix",
    "is_cici",
    "factorize",
    "classify_swap",
    "canonicalize",
    "singular_to_noisy_or",
    "noisy_or_to_singular",
    "symmetric_to_noisy_or",
    "noisy_or_to_symmetric",
    "is_degenerate_double_cici",
    "complete_exclusion_matrix",
    "complete_collaboration_matrix",
    # synergy
    "multiplicative_synergy",
    "additive_synergy",
    "synergy_report",
    "scale_axis",
    "bayes_reverse",
    # inference
    "JointPotential",
    "joint_potential",
    "belief_A",
    "belief_B",
    "OracleMarginals",
    "brute_force_oracle",
    "BeliefSurface",
    "belief_surface",
    "EdgeCurve",
    "edge_curve",
    "scaling_invariance_check",
    "surface_csv",
    "edge_csv",
    # bounds and approximations
    "factored_symmetric_matrix",
    "prior_straddle_check",
    "independent_edge",
    "CornerValue",
    "confirmed_corner",
    "ExclusionValue",
    "positive_exclusion",
    "Expansion",
    "reciprocal_expansion",
    "estimate_parameters",
    # verification
    "CheckResult",
    "ALL_CHECKS",
    "run_all",
]

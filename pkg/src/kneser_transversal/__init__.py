"""Exact computation of complete Kneser transversals of finite point sets.

Submodules:

- ``geometry``: Radon partitions, conv/aff intersection, transversal certificates
- ``parity``: parity blocks, OD, the I(d, λ, j) family, z and Z
- ``cyclic``: alternating-matroid model of cyclic polytopes and the ζ search
- ``report``, ``verify``, ``cli``: bound tables, self-checks, command line
"""
from .cyclic import (
    AlternatingCircuit,
    GapComposition,
    ZetaResult,
    am_circuit,
    asymptotic_trend,
    construct_transversal,
    gap_transversal_test,
    geometric_transversal_test,
    sign_transversal_test,
    zeta,
    zeta_trivial,
)
from .geometry import (
    PointConfig,
    SignedPartition,
    TransversalCertificate,
    balanced_hyperplane,
    build_theorem1_transversal,
    conv_aff_intersects,
    is_complete_kneser_transversal,
    is_general_position,
    lemma_partition,
    moment_curve,
    radon_partition,
)
from .parity import (
    UNBOUNDED,
    OptiSolution,
    ParamTriple,
    alpha,
    beta,
    d_formula,
    d_oracle,
    i_sets,
    od,
    opti_oracle,
    opti_solve,
    parity_blocks,
    z_lower,
    z_upper,
)

__version__ = "0.1.0"

"""Dyck path statistics and an involution swapping returns with ``n - ldr``."""

from .involution import (
    BackwardDecomposition,
    ForwardDecomposition,
    InternalDomainViolation,
    PhiCase,
    PhiError,
    PhiErrorReason,
    backward_decompose,
    big_phi,
    big_phi_trace,
    classify_case,
    forward_decompose,
    phi,
    phi_inverse,
    strip_trailing_ne,
)
from .perm321 import (
    ContainsPattern321,
    Permutation,
    PermStats,
    enumerate_avoiders,
    from_dyck,
    is_321_avoiding,
    parse_permutation,
    perm_stats,
    to_dyck,
)
from .verify import (
    JointDistribution,
    VerificationReport,
    check_bijection_laws,
    check_duality,
    check_involution,
    check_phi_laws,
    check_switch_symmetry,
    joint_distribution,
)
from .words import (
    BelowDiagonal,
    DyckError,
    DyckWord,
    IllegalCharacter,
    MarkedFactorization,
    NegativeExcursion,
    StatProfile,
    UnbalancedWord,
    catalan,
    compute_stats,
    enumerate_dyck,
    format_word,
    marked_factorization,
    parse_word,
    prime_components,
    render_ascii,
    reverse_complement,
)

__version__ = "0.1.0"

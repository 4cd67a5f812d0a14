"""Equivariant Schubert classes of Grassmannians as exact polynomials.

Cohomology classes are factorial Schur polynomials, K-theory classes are
factorial Grothendieck polynomials; both are computed from Bott-Samelson
classes by three independent routes and cross-checked by localization.
"""

from .classes import (
    PushforwardResult,
    Route,
    Theory,
    build_P_delta,
    build_P_lambda,
    build_p_delta,
    build_p_lambda,
    check_grassmannian_match,
    check_ktheory_straightening,
    double_grothendieck,
    factorial_grothendieck_det,
    factorial_schur_det,
    falling_product,
    pushforward,
    pushforward_class,
    straighten_pushforward_coh,
)
from .combinat import Composition, Partition, Permutation, straighten_composition
from .errors import (
    DegenerateSpecialization,
    IndexOutOfRange,
    MissingAssignment,
    NegativeExponentSubstitution,
    NotDivisible,
    PartTooLarge,
    SchubertError,
    ZeroAtLaurentPole,
)
from .localize import (
    BSFixedPoint,
    FixedPoint,
    coh_localize,
    coh_weight_ratio,
    k_localize,
    k_weight_ratio,
    verify_localized_pushforward,
)
from .operators import OperatorKind, apply_w, apply_word, jacobi_symmetrize, partial_i, pi_i
from .poly import E, Family, Polynomial, T, VarId, t, x

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "VarId", "Family", "x", "t", "T", "E",
    "Partition", "Composition", "Permutation", "straighten_composition",
    "OperatorKind", "partial_i", "pi_i", "apply_word", "apply_w", "jacobi_symmetrize",
    "Theory", "Route", "PushforwardResult", "build_p_lambda", "build_P_lambda",
    "build_p_delta", "build_P_delta", "falling_product", "factorial_schur_det",
    "factorial_grothendieck_det", "pushforward", "pushforward_class",
    "straighten_pushforward_coh", "check_ktheory_straightening",
    "double_grothendieck", "check_grassmannian_match",
    "FixedPoint", "BSFixedPoint", "coh_localize", "k_localize",
    "coh_weight_ratio", "k_weight_ratio", "verify_localized_pushforward",
    "SchubertError", "NotDivisible", "NegativeExponentSubstitution",
    "MissingAssignment", "ZeroAtLaurentPole", "IndexOutOfRange", "PartTooLarge",
    "DegenerateSpecialization",
]

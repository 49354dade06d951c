"""Exact symbolic kernel for quantum-disc symmetries.

Public surface: the coefficient field (scalars), the quantum disc and
U_q(sl2) normal forms, the action engine with its verifier, classifier
and involution checker, the closed-form oracles with the nonexistence
certificates, and the expression grammar.
"""

from .scalars import (
    ConjugationMode,
    DivisionByZero,
    GaussianRational,
    InvalidSpecialization,
    PoleAtSpecialization,
    Scalar,
    conjugate,
    specialize,
)
from .disc import (
    DiscElem,
    GradedForm,
    NotDivisibleByY,
    YPolynomial,
    from_graded,
    grade_decompose,
    star,
    tau,
    y_elem,
    y_pochhammer_identity,
)
from .uq import (
    InvolutionForm,
    UqElem,
    UqGenerator,
    antipode_gen,
    antipode_star,
    coproduct_gen,
    counit,
    star_elem,
    star_gen,
    uq_mul,
)
from .actions import (
    CheckResult,
    DegenerateParameter,
    NoIntegerJump,
    NotAWeightAction,
    SeriesTag,
    SymmetryAction,
    Unclassifiable,
    VerificationReport,
    ZeroScalar,
    apply_gen,
    apply_uq,
    apply_word,
    are_isomorphic,
    check_involution,
    classify,
    conjugate_by_automorphism,
    construct_series,
    grading_jump,
    verify,
    weight_constant,
)
from .qseries import (
    GJ_NEGATIVE,
    GJ_POSITIVE,
    AnsatzDegrees,
    NonexistenceReport,
    OutOfFormulaRange,
    closed_form_action,
    commutator_highest_coefficient,
    nonexistence_scan,
    q_pochhammer,
)
from .parsing import ParseError, parse_disc_expr, parse_scalar_expr, parse_uq_expr

__all__ = [
    "AnsatzDegrees",
    "CheckResult",
    "ConjugationMode",
    "DegenerateParameter",
    "DiscElem",
    "DivisionByZero",
    "GJ_NEGATIVE",
    "GJ_POSITIVE",
    "GaussianRational",
    "GradedForm",
    "InvalidSpecialization",
    "InvolutionForm",
    "NoIntegerJump",
    "NonexistenceReport",
    "NotAWeightAction",
    "NotDivisibleByY",
    "OutOfFormulaRange",
    "ParseError",
    "PoleAtSpecialization",
    "Scalar",
    "SeriesTag",
    "SymmetryAction",
    "Unclassifiable",
    "UqElem",
    "UqGenerator",
    "VerificationReport",
    "YPolynomial",
    "ZeroScalar",
    "antipode_gen",
    "antipode_star",
    "apply_gen",
    "apply_uq",
    "apply_word",
    "are_isomorphic",
    "check_involution",
    "classify",
    "closed_form_action",
    "commutator_highest_coefficient",
    "conjugate",
    "conjugate_by_automorphism",
    "construct_series",
    "coproduct_gen",
    "counit",
    "from_graded",
    "grade_decompose",
    "grading_jump",
    "nonexistence_scan",
    "parse_disc_expr",
    "parse_scalar_expr",
    "parse_uq_expr",
    "q_pochhammer",
    "specialize",
    "star",
    "star_elem",
    "star_gen",
    "tau",
    "uq_mul",
    "verify",
    "weight_constant",
    "y_elem",
    "y_pochhammer_identity",
]

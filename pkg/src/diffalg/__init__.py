"""Exact differential-polynomial algebra over the rationals.

Sparse differential polynomials with a single derivation, Ritt rank data,
certified division, leader resultants and discriminants, extension
witnesses, and a text surface syntax.
"""

from .errors import (
    ConstantDivisor,
    ConstantPolynomial,
    DiffAlgError,
    DocumentError,
    DomainError,
    ExponentOutOfRange,
    InputError,
    MissingAssignment,
    ParseError,
    RecursiveSubstitution,
    ReducesIntoIdeal,
    UnknownIndeterminate,
    VanishingResultant,
    ZeroArgument,
    ZeroPolynomial,
    ZeroTarget,
)
from .polynomials import Context, DerivVar, DiffPoly, Monomial, exact_div, monomial_key
from .ranking import Comparison, RankProfile, initial, rank_compare, rank_profile, separant
from .reduction import (
    MembershipResult,
    ReductionCertificate,
    ReductionMode,
    VerificationResult,
    ritt_reduce,
    saturation_membership,
    verify_certificate,
)
from .elimination import (
    LeaderPoly,
    as_leader_poly,
    det_bareiss,
    det_cofactor,
    discriminant,
    resultant,
    sylvester_matrix,
)
from .witness import (
    ChevalleyWitness,
    WitnessCase,
    chevalley_witness,
    degree_bound,
    select_coefficient,
)
from .syntax import format_poly, parse_poly, render_var
from .documents import (
    parse_certificate,
    parse_witness,
    serialize_certificate,
    serialize_witness,
)

__all__ = [
    "ChevalleyWitness",
    "Comparison",
    "ConstantDivisor",
    "ConstantPolynomial",
    "Context",
    "DerivVar",
    "DiffAlgError",
    "DiffPoly",
    "DocumentError",
    "DomainError",
    "ExponentOutOfRange",
    "InputError",
    "LeaderPoly",
    "MembershipResult",
    "MissingAssignment",
    "Monomial",
    "ParseError",
    "RankProfile",
    "RecursiveSubstitution",
    "ReducesIntoIdeal",
    "ReductionCertificate",
    "ReductionMode",
    "UnknownIndeterminate",
    "VanishingResultant",
    "VerificationResult",
    "WitnessCase",
    "ZeroArgument",
    "ZeroPolynomial",
    "ZeroTarget",
    "as_leader_poly",
    "chevalley_witness",
    "degree_bound",
    "det_bareiss",
    "det_cofactor",
    "discriminant",
    "exact_div",
    "format_poly",
    "initial",
    "monomial_key",
    "parse_certificate",
    "parse_poly",
    "parse_witness",
    "rank_compare",
    "rank_profile",
    "render_var",
    "resultant",
    "ritt_reduce",
    "saturation_membership",
    "select_coefficient",
    "separant",
    "serialize_certificate",
    "serialize_witness",
    "sylvester_matrix",
    "verify_certificate",
]

__version__ = "0.1.0"

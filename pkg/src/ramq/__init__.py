"""Closed-form residue evaluation and quadrature verification of the
Ramanujan-notebook family of oscillatory integrals."""

from .errors import (
    BaseMismatch,
    BranchCut,
    DegreeGapError,
    DivisionByZeroJet,
    DomainError,
    NonConvergence,
    ParityError,
    PoleOrderMismatch,
    RadiusTooLarge,
    RamqError,
    RealAxisPole,
)
from .identities import (
    IntegralSpec,
    Relation,
    TrigKind,
    bessel_k_half,
    closed_cos_pow,
    closed_x_sin_pow,
    even_kernel,
    odd_kernel,
    relation_S,
    relation_derivative_family,
    relation_eg_odd_closing,
    relation_general_even,
    relation_generalized_log,
    relation_re_im_split,
    relation_sin_family,
    relation_theorem1,
)
from .jets import Jet, jet_exp, jet_from_poly, jet_log, jet_mul, jet_pow_complex
from .parse import ParseError, parse_polynomial, parse_rational
from .polyrat import (
    Parity,
    Pole,
    Polynomial,
    RationalFunction,
    classify_parity,
    degree_gap,
    find_roots,
    poly_eval,
    upper_half_poles,
)
from .quadrature import (
    QuadratureConfig,
    QuadratureResult,
    integrate_phase,
    integrate_spec,
    tail_brute_oracle,
)
from .residues import WeightParams, contour_oracle, residue_at, residue_sum_S
from .verify import RelationCheck, TermCheck, build_suite, verify_relation, verify_relations

__version__ = "0.1.0"

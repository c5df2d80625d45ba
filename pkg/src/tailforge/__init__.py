"""Exact detection of common continued-fraction tails among polynomial roots."""

from .cfengine import (
    AlgebraicReal,
    CFExpansion,
    PeriodicCF,
    RationalTermination,
    cf_expand,
    common_tail_prefix,
    convergents,
    detect_period,
    isolate_real_roots,
    quadratic_equivalent,
    refine,
)
from .cubicfield import (
    ClassificationReport,
    DegenerateRelationError,
    QrElement,
    class_representative,
    classify_cubic,
    element_to_lft,
    elements_equivalent,
    mu_nu,
    solve_root_relation,
)
from .families import (
    CoeffAction,
    PolyFamily,
    coefficient_action,
    enumerate_order3,
    family_from_word,
    rational_eigenspaces,
    simplify_by_conjugation,
    word_to_action,
)
from .highdeg import (
    ObstructionVerdict,
    degree_obstruction,
    numeric_common_tails,
    sextic_constraints,
    sextic_family,
    verify_klein4,
    verify_sextic_action,
)
from .lft import (
    BasicOp,
    CanonicalTriple,
    LFTMatrix,
    StandardLFT,
    ad,
    apply,
    canonical_triple,
    compose,
    compose_word,
    conjugate_by_basic,
    order_in_pgl,
    parse_matrix,
    parse_word,
    standard_form,
)
from .polycore import (
    IntPoly,
    PolynomialSyntaxError,
    cubic_discriminant,
    format_polynomial,
    irreducible_over_rationals,
    negate_argument,
    parse_polynomial,
    reverse_coefficients,
    taylor_shift,
)
from .scan import ScanConfig, ScanRecord, run_scan

__version__ = "0.1.0"

__all__ = [
    "AlgebraicReal",
    "CFExpansion",
    "PeriodicCF",
    "RationalTermination",
    "cf_expand",
    "common_tail_prefix",
    "convergents",
    "detect_period",
    "isolate_real_roots",
    "quadratic_equivalent",
    "refine",
    "ClassificationReport",
    "DegenerateRelationError",
    "QrElement",
    "class_representative",
    "classify_cubic",
    "element_to_lft",
    "elements_equivalent",
    "mu_nu",
    "solve_root_relation",
    "CoeffAction",
    "PolyFamily",
    "coefficient_action",
    "enumerate_order3",
    "family_from_word",
    "rational_eigenspaces",
    "simplify_by_conjugation",
    "word_to_action",
    "ObstructionVerdict",
    "degree_obstruction",
    "numeric_common_tails",
    "sextic_constraints",
    "sextic_family",
    "verify_klein4",
    "verify_sextic_action",
    "BasicOp",
    "CanonicalTriple",
    "LFTMatrix",
    "StandardLFT",
    "ad",
    "apply",
    "canonical_triple",
    "compose",
    "compose_word",
    "conjugate_by_basic",
    "order_in_pgl",
    "parse_matrix",
    "parse_word",
    "standard_form",
    "IntPoly",
    "PolynomialSyntaxError",
    "cubic_discriminant",
    "format_polynomial",
    "irreducible_over_rationals",
    "negate_argument",
    "parse_polynomial",
    "reverse_coefficients",
    "taylor_shift",
    "ScanConfig",
    "ScanRecord",
    "run_scan",
]

"""Exact q-series toolkit: truncated integer power series, theta and
Pochhammer products, an expression language, a registry of verified
identities, and partition-counting oracles."""

from .series import (
    NonUnitConstantTerm,
    TruncatedSeries,
    add,
    dissect,
    invert,
    mul,
    schoolbook_mul,
    shift,
    substitute_power,
)
from .theta import (
    InvalidParameters,
    InvalidThetaArgument,
    NegativeExponent,
    PochhammerFactor,
    SignedMonomial,
    ZeroProduct,
    bsum,
    jtp_product,
    phi,
    pochhammer,
    psi,
    theta_f,
)
from .qexpr import (
    Add,
    BSum,
    Div,
    IntLit,
    InvalidFactor,
    InvalidFamilyParameters,
    Monomial,
    Mul,
    Neg,
    ParseError,
    Phi,
    Poch,
    Pow,
    Psi,
    QExpr,
    Sub,
    ThetaF,
    evaluate,
    evaluate_text,
    family_g,
    family_h,
    parse,
    render,
)
from .identities import (
    Congruence,
    DissectionRelation,
    IdentityRecord,
    SeriesEquality,
    SignPattern,
    VanishingProgression,
    VerificationReport,
    get_record,
    load_records,
    registry,
    verify,
    verify_all,
)
from .combinatorics import (
    InterpretationReport,
    InvalidSpec,
    PartClassSpec,
    SignScan,
    count_partitions,
    counting_series,
    parse_spec,
    scan_signs,
    spec_text,
    verify_interpretation,
)

__version__ = "0.1.0"

__all__ = [
    "NonUnitConstantTerm",
    "TruncatedSeries",
    "add",
    "dissect",
    "invert",
    "mul",
    "schoolbook_mul",
    "shift",
    "substitute_power",
    "InvalidParameters",
    "InvalidThetaArgument",
    "NegativeExponent",
    "PochhammerFactor",
    "SignedMonomial",
    "ZeroProduct",
    "bsum",
    "jtp_product",
    "phi",
    "pochhammer",
    "psi",
    "theta_f",
    "Add",
    "BSum",
    "Div",
    "IntLit",
    "InvalidFactor",
    "InvalidFamilyParameters",
    "Monomial",
    "Mul",
    "Neg",
    "ParseError",
    "Phi",
    "Poch",
    "Pow",
    "Psi",
    "QExpr",
    "Sub",
    "ThetaF",
    "evaluate",
    "evaluate_text",
    "family_g",
    "family_h",
    "parse",
    "render",
    "Congruence",
    "DissectionRelation",
    "IdentityRecord",
    "SeriesEquality",
    "SignPattern",
    "VanishingProgression",
    "VerificationReport",
    "get_record",
    "load_records",
    "registry",
    "verify",
    "verify_all",
    "InterpretationReport",
    "InvalidSpec",
    "PartClassSpec",
    "SignScan",
    "count_partitions",
    "counting_series",
    "parse_spec",
    "scan_signs",
    "spec_text",
    "verify_interpretation",
    "__version__",
]

"""Exact arithmetic for automatic sequences built from periodic backbones
and the algebraic continued fractions they generate over GF(2)."""

from .backbone import (
    BackboneSpec,
    Symbol,
    eps_weighted,
    epsilon_at,
    s_at,
    s_prefix,
    word,
)
from .cf import (
    ConvergentPair,
    SpecialConvergent,
    cf_to_series,
    convergents,
    special_convergents,
)
from .equation import (
    AlgebraicEquation,
    SpecializedEquation,
    alpha_polynomial,
    build_matrix,
    compute_z,
    derive_equation,
    specialize_equation,
)
from .errors import (
    AutocfError,
    ConstantLetterAssignment,
    DegenerateDeterminant,
    DivisionByZeroPoly,
    InvalidIndex,
    InvertZeroSeries,
    LevelTooLarge,
    NegativeExponentError,
    NonSquareMatrix,
    ParseError,
    PrecisionTooLow,
    SymbolUniverseMismatch,
    UnsupportedFieldSize,
    WordTooLarge,
    ZeroDenominator,
    ZeroDenominatorAfterEval,
)
from .fields import BinaryField, gf2s_field
from .polys import (
    NEG_INF,
    RationalFunction,
    UniPoly,
    parse_poly,
    poly_divrem,
    poly_gcd,
    poly_lcm,
)
from .series import (
    CLEAN,
    LaurentSeries,
    series_expand,
    series_residual_valuation,
)
from .sympoly import (
    MultiPoly,
    SymbolicFraction,
    cofactor,
    det,
    frac_eq,
    parse_fraction,
    parse_mpoly,
)
from .verify import (
    RelationCertificate,
    TwoDFA,
    automaton_eval,
    gamma_series,
    kernel_automaton,
    relation_search,
    residual_valuation,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicEquation",
    "AutocfError",
    "BackboneSpec",
    "BinaryField",
    "CLEAN",
    "ConstantLetterAssignment",
    "ConvergentPair",
    "DegenerateDeterminant",
    "DivisionByZeroPoly",
    "InvalidIndex",
    "InvertZeroSeries",
    "LaurentSeries",
    "LevelTooLarge",
    "MultiPoly",
    "NEG_INF",
    "NegativeExponentError",
    "NonSquareMatrix",
    "ParseError",
    "PrecisionTooLow",
    "RationalFunction",
    "RelationCertificate",
    "SpecialConvergent",
    "SpecializedEquation",
    "Symbol",
    "SymbolUniverseMismatch",
    "SymbolicFraction",
    "TwoDFA",
    "UniPoly",
    "UnsupportedFieldSize",
    "WordTooLarge",
    "ZeroDenominator",
    "ZeroDenominatorAfterEval",
    "alpha_polynomial",
    "automaton_eval",
    "build_matrix",
    "cf_to_series",
    "cofactor",
    "compute_z",
    "convergents",
    "derive_equation",
    "det",
    "eps_weighted",
    "epsilon_at",
    "frac_eq",
    "gamma_series",
    "gf2s_field",
    "kernel_automaton",
    "parse_fraction",
    "parse_mpoly",
    "parse_poly",
    "poly_divrem",
    "poly_gcd",
    "poly_lcm",
    "relation_search",
    "residual_valuation",
    "s_at",
    "s_prefix",
    "series_expand",
    "series_residual_valuation",
    "special_convergents",
    "specialize_equation",
    "word",
]

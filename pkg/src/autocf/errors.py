"""Exception types shared across the package."""


class AutocfError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedFieldSize(AutocfError):
    """Requested GF(2^s) with s outside the supported range 1..16."""


class DivisionByZeroPoly(AutocfError):
    """Polynomial division or fraction with a zero denominator."""


class InvertZeroSeries(AutocfError):
    """Inversion of a Laurent series that is zero to its known precision."""


class PrecisionTooLow(AutocfError):
    """An operation needs more known coefficients than are available."""


class SymbolUniverseMismatch(AutocfError):
    """Mixed multivariate operands over different letter universes."""


class ZeroDenominator(AutocfError):
    """Symbolic fraction with a zero denominator."""


class ConstantLetterAssignment(AutocfError):
    """A letter was mapped to a polynomial of degree < 1."""


class ZeroDenominatorAfterEval(AutocfError):
    """A nonzero symbolic denominator specialized to the zero polynomial."""


class NonSquareMatrix(AutocfError):
    """Determinant or cofactor of a matrix that is not square."""


class WordTooLarge(AutocfError):
    """Word materialization beyond the 2^24 - 1 length guard."""


class LevelTooLarge(AutocfError):
    """Special-convergent level beyond the supported cap."""


class InvalidIndex(AutocfError):
    """Index outside the range permitted by the operation."""


class DegenerateDeterminant(AutocfError):
    """The d x d letter matrix has determinant zero (symbolically or after
    specialization), so the linear system cannot be solved."""


class ParseError(AutocfError):
    """Literal text does not match the expected grammar."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NegativeExponentError(ParseError):
    """Negative exponent in a polynomial literal."""

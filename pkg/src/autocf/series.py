"""Truncated Laurent series in 1/t with exact precision tracking.

A series is indexed by the exponent e of t^{-e} (so e = 0 is the constant
term and negative e are positive powers of t).  The stored window covers
exactly [valuation, precision): every coefficient with e < precision is known,
the leading stored coefficient is nonzero, and a series whose known
coefficients all vanish is flagged zero-to-precision (valuation None).

Every operation propagates precision pessimistically:

    add       min(P_a, P_b)
    mul       min(P_a + val_b, P_b + val_a)
    invert    P_a - 2*val_a
    square    2*P_a          (Frobenius: cross terms vanish in char 2)

Asking for a coefficient at or beyond the precision bound is an error, never
a guess.
"""

from __future__ import annotations

from .errors import InvertZeroSeries, PrecisionTooLow
from .fields import BinaryField
from .polys import RationalFunction, UniPoly, _pack, _pmul


class _CleanType:
    """Sentinel: a residual with no nonzero known coefficient."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "CLEAN"


CLEAN = _CleanType()


def _div_window_gf2(num_bits: int, den_bits: int, count: int) -> int:
    # long division of power series in u = 1/t, constant term of den = 1
    out = 0
    rem = num_bits
    for k in range(count):
        if (rem >> k) & 1:
            out |= 1 << k
            rem ^= den_bits << k
    return out


def _div_window(num, den, count, field: BinaryField):
    # generic power-series long division, den[0] != 0
    inv0 = field.inv(den[0])
    rem = list(num[:count]) + [0] * max(0, count - len(num))
    out = [0] * count
    mul = field.mul
    for k in range(count):
        c = rem[k]
        if c:
            c = mul(c, inv0) if inv0 != 1 else c
            out[k] = c
            lim = min(len(den), count - k)
            for j in range(1, lim):
                dj = den[j]
                if dj:
                    rem[k + j] ^= mul(c, dj)
    return out


def _mul_window(a, b, count, field: BinaryField):
    if field.s == 1:
        prod = _pmul(_pack(a), _pack(b))
        return [(prod >> k) & 1 for k in range(count)]
    out = [0] * count
    mul = field.mul
    for i, ai in enumerate(a):
        if ai and i < count:
            lim = min(len(b), count - i)
            for j in range(lim):
                bj = b[j]
                if bj:
                    out[i + j] ^= mul(ai, bj)
    return out


class LaurentSeries:
    """Immutable truncated Laurent series over a :class:`BinaryField`."""

    __slots__ = ("field", "val", "coeffs", "precision")

    def __init__(self, field: BinaryField, val, coeffs, precision: int):
        """Build from a raw window; strips leading zeros and pads/truncates
        so that the stored window is exactly [val, precision)."""
        self.field = field
        self.precision = precision
        if val is None:
            self.val = None
            self.coeffs = ()
            return
        window = list(coeffs[: max(0, precision - val)])
        window += [0] * (precision - val - len(window))
        lead = 0
        while lead < len(window) and window[lead] == 0:
            lead += 1
        if lead == len(window):
            self.val = None
            self.coeffs = ()
        else:
            self.val = val + lead
            self.coeffs = tuple(window[lead:])

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: BinaryField, precision: int) -> "LaurentSeries":
        return cls(field, None, (), precision)

    @classmethod
    def from_terms(cls, field, terms: dict, precision: int) -> "LaurentSeries":
        """terms maps exponent e (of t^-e) to a field element."""
        live = {e: c for e, c in terms.items() if c and e < precision}
        if not live:
            return cls.zero(field, precision)
        val = min(live)
        window = [0] * (precision - val)
        for e, c in live.items():
            window[e - val] = field.validate(c)
        return cls(field, val, window, precision)

    @classmethod
    def from_poly(cls, p: UniPoly, precision: int) -> "LaurentSeries":
        """Exact polynomial p materialized at the given precision bound."""
        if p.is_zero:
            return cls.zero(p.field, precision)
        deg = p.degree
        val = -deg
        window = [0] * max(0, precision - val)
        for i in range(min(len(window), deg + 1)):
            window[i] = p.coeffs[deg - i]
        return cls(p.field, val, window, precision)

    # -- queries -------------------------------------------------------------

    @property
    def is_zero_to_precision(self) -> bool:
        return self.val is None

    @property
    def val_bound(self) -> int:
        """Exact valuation, or the precision bound for a zero-to-precision
        series (any nonzero content must lie at or beyond it)."""
        return self.precision if self.val is None else self.val

    def coeff(self, e: int) -> int:
        if e >= self.precision:
            raise PrecisionTooLow(
                f"coefficient at exponent {e} beyond precision {self.precision}"
            )
        if self.val is None or e < self.val:
            return 0
        return self.coeffs[e - self.val]

    def residual_valuation(self):
        """Least exponent with a nonzero known coefficient, or CLEAN."""
        return CLEAN if self.val is None else self.val

    def truncate(self, precision: int) -> "LaurentSeries":
        if precision > self.precision:
            raise PrecisionTooLow(
                f"cannot extend precision {self.precision} to {precision}"
            )
        return LaurentSeries(self.field, self.val, self.coeffs, precision)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentSeries) or other.field is not self.field:
            raise TypeError("operands must be LaurentSeries over the same field")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        precision = min(self.precision, other.precision)
        if self.val is None and other.val is None:
            return LaurentSeries.zero(self.field, precision)
        if self.val is None:
            return other.truncate(precision)
        if other.val is None:
            return self.truncate(precision)
        val = min(self.val, other.val)
        window = [0] * (precision - val)
        for src in (self, other):
            off = src.val - val
            for i, c in enumerate(src.coeffs):
                if c and off + i < len(window):
                    window[off + i] ^= c
        return LaurentSeries(self.field, val, window, precision)

    __sub__ = __add__

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        precision = min(
            self.precision + other.val_bound, other.precision + self.val_bound
        )
        if self.val is None or other.val is None:
            return LaurentSeries.zero(self.field, precision)
        val = self.val + other.val
        count = precision - val  # == min of the two window lengths
        window = _mul_window(self.coeffs, other.coeffs, count, self.field)
        return LaurentSeries(self.field, val, window, precision)

    def square(self) -> "LaurentSeries":
        precision = 2 * self.precision
        if self.val is None:
            return LaurentSeries.zero(self.field, precision)
        val = 2 * self.val
        window = [0] * (precision - val)
        if self.field.s == 1:
            for i, c in enumerate(self.coeffs):
                if c:
                    window[2 * i] = 1
        else:
            mul = self.field.mul
            for i, c in enumerate(self.coeffs):
                if c:
                    window[2 * i] = mul(c, c)
        return LaurentSeries(self.field, val, window, precision)

    def invert(self) -> "LaurentSeries":
        if self.val is None:
            raise InvertZeroSeries("cannot invert a series that is zero to precision")
        count = len(self.coeffs)
        field = self.field
        if field.s == 1:
            bits = _div_window_gf2(1, _pack(self.coeffs), count)
            window = [(bits >> k) & 1 for k in range(count)]
        else:
            window = _div_window((1,), self.coeffs, count, field)
        return LaurentSeries(field, -self.val, window, self.precision - 2 * self.val)

    def __repr__(self):
        if self.val is None:
            return f"LaurentSeries(0 to precision {self.precision})"
        head = []
        for i, c in enumerate(self.coeffs[:6]):
            if c:
                e = self.val + i
                head.append(f"{c if c != 1 else ''}{'t^' + str(-e) if e else '1'}")
        return (
            f"LaurentSeries({'+'.join(head)}+... val={self.val}"
            f" precision={self.precision})"
        )


def series_expand(r: RationalFunction, precision: int) -> LaurentSeries:
    """Expand a rational function into its Laurent series at t = infinity."""
    if r.num.is_zero:
        return LaurentSeries.zero(r.field, precision)
    num, den = r.num, r.den
    val = den.degree - num.degree
    count = precision - val
    if count <= 0:
        return LaurentSeries.zero(r.field, precision)
    field = r.field
    rev_num = tuple(reversed(num.coeffs))
    rev_den = tuple(reversed(den.coeffs))
    if field.s == 1:
        bits = _div_window_gf2(_pack(rev_num), _pack(rev_den), count)
        window = [(bits >> k) & 1 for k in range(count)]
    else:
        window = _div_window(rev_num, rev_den, count, field)
    return LaurentSeries(field, val, window, precision)


def series_residual_valuation(s: LaurentSeries):
    """CLEAN when every known coefficient vanishes, else the least nonzero
    exponent."""
    return s.residual_valuation()

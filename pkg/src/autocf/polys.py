"""Univariate polynomials and rational functions over GF(2^s).

A polynomial c_0 + c_1 t + ... + c_n t^n is a tuple (c_0, ..., c_n) of field
elements with c_n != 0; the zero polynomial stores the empty tuple and reports
degree NEG_INF (an explicit sentinel, never -1).  Over GF(2) the heavy
operations additionally pack coefficients into a Python int (bit i =
coefficient of t^i) so products and divisions run on machine words.

The literal grammar, shared with the command line, is

    poly := term ('+' term)*        term := '1' | 't' | 't^' uint

with coefficients implicit in GF(2); duplicate terms cancel.
"""

from __future__ import annotations

from .errors import DivisionByZeroPoly, NegativeExponentError, ParseError
from .fields import BinaryField, gf2s_field

NEG_INF = float("-inf")


# -- packed GF(2) helpers (bit i = coefficient of t^i) --------------------

def _pmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DivisionByZeroPoly("polynomial division by zero")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _pack(coeffs) -> int:
    v = 0
    for i, c in enumerate(coeffs):
        if c:
            v |= 1 << i
    return v


def _unpack(v: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(v.bit_length()))


class UniPoly:
    """Immutable univariate polynomial over a :class:`BinaryField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: BinaryField, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        q = field.q
        for c in cs:
            if not isinstance(c, int) or not 0 <= c < q:
                raise ValueError(f"coefficient {c!r} not in GF({q})")
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: BinaryField) -> "UniPoly":
        return cls(field, ())

    @classmethod
    def one(cls, field: BinaryField) -> "UniPoly":
        return cls(field, (1,))

    @classmethod
    def t(cls, field: BinaryField) -> "UniPoly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: BinaryField, deg: int, coeff: int = 1) -> "UniPoly":
        if deg < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls(field, (0,) * deg + (coeff,))

    @classmethod
    def from_packed(cls, field: BinaryField, value: int) -> "UniPoly":
        if field.s != 1:
            raise ValueError("packed representation is GF(2) only")
        return cls(field, _unpack(value))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def packed(self) -> int:
        if self.field.s != 1:
            raise ValueError("packed representation is GF(2) only")
        return _pack(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    # -- arithmetic (characteristic 2: addition is XOR) ---------------------

    def _check(self, other: "UniPoly"):
        if not isinstance(other, UniPoly) or other.field is not self.field:
            raise TypeError("operands must be UniPoly over the same field")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return UniPoly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.field)
        field = self.field
        if field.s == 1:
            return UniPoly.from_packed(field, _pmul(self.packed(), other.packed()))
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        mul = field.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] ^= mul(ai, bj)
        return UniPoly(field, out)

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if other.is_zero:
            raise DivisionByZeroPoly("polynomial division by zero")
        field = self.field
        if field.s == 1:
            q, r = _pdivmod(self.packed(), other.packed())
            return UniPoly.from_packed(field, q), UniPoly.from_packed(field, r)
        rem = list(self.coeffs)
        db = other.degree
        if self.degree < db:
            return UniPoly.zero(field), self
        inv_lead = field.inv(other.lead)
        quot = [0] * (len(rem) - db)
        mul = field.mul
        bcs = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                f = mul(c, inv_lead)
                quot[k - db] = f
                for j, bc in enumerate(bcs):
                    if bc:
                        rem[k - db + j] ^= mul(f, bc)
        return UniPoly(field, quot), UniPoly(field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero:
            return self
        return UniPoly(self.field, (0,) * k + self.coeffs)

    def scale(self, c: int) -> "UniPoly":
        if c == 0:
            return UniPoly.zero(self.field)
        if c == 1:
            return self
        mul = self.field.mul
        return UniPoly(self.field, tuple(mul(c, x) for x in self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lead))

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                base = "1"
            elif k == 1:
                base = "t"
            else:
                base = f"t^{k}"
            if c == 1:
                parts.append(base)
            elif k == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*{base}")
        return "+".join(parts)

    def __repr__(self):
        return f"UniPoly({self.render()!r})"


def poly_divrem(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder with deg r < deg b; raises on zero divisor."""
    return divmod(a, b)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor via Euclid's algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero or b.is_zero:
        return UniPoly.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def parse_poly(text: str, field: BinaryField | None = None) -> UniPoly:
    """Parse a GF(2) polynomial literal: term ('+' term)*, term 1 | t | t^uint."""
    field = field or gf2s_field(1)
    n = len(text)
    if n == 0:
        raise ParseError("empty polynomial literal", 0)
    exps: set[int] = set()
    i = 0
    while True:
        if i >= n:
            raise ParseError("expected a term", i)
        ch = text[i]
        if ch == "1":
            exp = 0
            i += 1
        elif ch == "t":
            i += 1
            if i < n and text[i] == "^":
                i += 1
                if i < n and text[i] == "-":
                    raise NegativeExponentError("negative exponent", i)
                start = i
                while i < n and text[i].isdigit():
                    i += 1
                if start == i:
                    raise ParseError("expected exponent digits", i)
                exp = int(text[start:i])
            else:
                exp = 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
        exps.symmetric_difference_update({exp})  # duplicate terms cancel
        if i == n:
            break
        if text[i] != "+":
            raise ParseError(f"unexpected character {text[i]!r}", i)
        i += 1
    coeffs = [0] * (max(exps) + 1 if exps else 0)
    for e in exps:
        coeffs[e] = 1
    return UniPoly(field, coeffs)


class RationalFunction:
    """Quotient of univariate polynomials in canonical form.

    Canonical means gcd(num, den) = 1 and den monic, so two rational
    functions are equal exactly when their fields match componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        if den.is_zero:
            raise DivisionByZeroPoly("rational function with zero denominator")
        if num.field is not den.field:
            raise TypeError("numerator and denominator over different fields")
        if num.is_zero:
            num, den = num, UniPoly.one(den.field)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            if den.lead != 1:
                c = den.field.inv(den.lead)
                num, den = num.scale(c), den.scale(c)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: UniPoly) -> "RationalFunction":
        return cls(p, UniPoly.one(p.field))

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_poly(self) -> bool:
        return self.den.is_one

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __sub__ = __add__

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.num.is_zero:
            raise DivisionByZeroPoly("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def render(self) -> str:
        if self.is_poly:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self):
        return f"RationalFunction({self.render()!r})"

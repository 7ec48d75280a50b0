"""Sparse multivariate polynomials over GF(2) in the backbone letters.

A polynomial is a set of monomials (GF(2) coefficients are presence/absence),
each monomial an exponent tuple over the letter universe.  Addition is the
symmetric difference of monomial sets and squaring doubles every exponent
tuple, so everything the construction touches stays sparse.

Canonical text rendering orders monomials by total degree, largest exponent
vector first within a degree: ``1+a*b+b^2``, ``a^4*b^2*c``.  Fractions render
as ``(num)/(den)`` unless the denominator is 1.
"""

from __future__ import annotations

import re

from .errors import (
    ConstantLetterAssignment,
    NonSquareMatrix,
    ParseError,
    SymbolUniverseMismatch,
    ZeroDenominator,
    ZeroDenominatorAfterEval,
)
from .fields import BinaryField
from .polys import RationalFunction, UniPoly

_MAX_MATRIX_ORDER = 8

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _render_key(term):
    # ascending total degree, then lexicographically greatest vector first
    return (sum(term), tuple(-e for e in term))


def _division_key(term):
    # graded-lex monomial order used by exact division (largest = lead)
    return (sum(term), term)


class MultiPoly:
    """Immutable sparse polynomial over GF(2) in a fixed letter universe."""

    __slots__ = ("names", "terms")

    def __init__(self, names, terms=()):
        self.names = tuple(names)
        width = len(self.names)
        seen = set()
        for term in terms:
            t = tuple(term)
            if len(t) != width or any(e < 0 for e in t):
                raise ValueError(f"bad exponent tuple {t!r} for universe {self.names}")
            seen.symmetric_difference_update({t})
        self.terms = frozenset(seen)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, names) -> "MultiPoly":
        return cls(names, ())

    @classmethod
    def one(cls, names) -> "MultiPoly":
        return cls(names, ((0,) * len(tuple(names)),))

    @classmethod
    def monomial(cls, names, exps) -> "MultiPoly":
        return cls(names, (tuple(exps),))

    @classmethod
    def symbol(cls, names, index: int) -> "MultiPoly":
        names = tuple(names)
        exps = [0] * len(names)
        exps[index] = 1
        return cls(names, (tuple(exps),))

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.names)}

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self):
        return max((sum(t) for t in self.terms), default=None)

    def sorted_terms(self):
        return sorted(self.terms, key=_render_key)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.names == other.names
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.names, self.terms))

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if not isinstance(other, MultiPoly):
            raise TypeError("operand must be a MultiPoly")
        if other.names != self.names:
            raise SymbolUniverseMismatch(
                f"universes differ: {self.names} vs {other.names}"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        # symmetric difference of monomial sets (characteristic 2)
        self._check(other)
        new = MultiPoly.__new__(MultiPoly)
        new.names = self.names
        new.terms = self.terms.symmetric_difference(other.terms)
        return new

    __sub__ = __add__

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        acc: set = set()
        for ta in self.terms:
            for tb in other.terms:
                prod = tuple(x + y for x, y in zip(ta, tb))
                if prod in acc:
                    acc.discard(prod)
                else:
                    acc.add(prod)
        new = MultiPoly.__new__(MultiPoly)
        new.names = self.names
        new.terms = frozenset(acc)
        return new

    def square(self) -> "MultiPoly":
        """Frobenius square: every exponent doubles, term count unchanged."""
        new = MultiPoly.__new__(MultiPoly)
        new.names = self.names
        new.terms = frozenset(tuple(2 * e for e in t) for t in self.terms)
        return new

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.names)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base.square()
            e >>= 1
        return result

    # -- structure helpers -------------------------------------------------------

    def content(self):
        """Componentwise minimum exponent over all terms (monomial content)."""
        if not self.terms:
            return (0,) * len(self.names)
        its = iter(self.terms)
        acc = list(next(its))
        for t in its:
            for i, e in enumerate(t):
                if e < acc[i]:
                    acc[i] = e
        return tuple(acc)

    def divide_monomial(self, exps) -> "MultiPoly":
        new = MultiPoly.__new__(MultiPoly)
        new.names = self.names
        new.terms = frozenset(
            tuple(e - g for e, g in zip(t, exps)) for t in self.terms
        )
        for t in new.terms:
            if any(e < 0 for e in t):
                raise ValueError("monomial does not divide every term")
        return new

    def exact_div(self, divisor: "MultiPoly"):
        """Exact quotient self/divisor, or None when the division leaves a
        remainder.  Single-divisor division over the graded-lex order."""
        self._check(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return MultiPoly.zero(self.names)
        glead = max(divisor.terms, key=_division_key)
        rem = set(self.terms)
        quot: set = set()
        while rem:
            flead = max(rem, key=_division_key)
            q = tuple(a - b for a, b in zip(flead, glead))
            if any(e < 0 for e in q):
                return None
            quot.symmetric_difference_update({q})
            for gt in divisor.terms:
                prod = tuple(a + b for a, b in zip(q, gt))
                if prod in rem:
                    rem.discard(prod)
                else:
                    rem.add(prod)
        new = MultiPoly.__new__(MultiPoly)
        new.names = self.names
        new.terms = frozenset(quot)
        return new

    def map_symbols(self, new_names, index_map) -> "MultiPoly":
        """Reinterpret over a new universe; index_map sends old symbol index
        to new symbol index (exponents of merged letters add up)."""
        new_names = tuple(new_names)
        width = len(new_names)
        acc: set = set()
        for t in self.terms:
            out = [0] * width
            for i, e in enumerate(t):
                if e:
                    out[index_map[i]] += e
            out = tuple(out)
            if out in acc:
                acc.discard(out)
            else:
                acc.add(out)
        new = MultiPoly.__new__(MultiPoly)
        new.names = new_names
        new.terms = frozenset(acc)
        return new

    def evaluate(self, assignment: dict) -> UniPoly:
        """Ring-homomorphism image under letter -> UniPoly (degree >= 1)."""
        polys = _resolve_assignment(self.names, assignment)
        field = polys[0].field if polys else None
        if field is None:
            raise ValueError("cannot evaluate over an empty universe")
        result = UniPoly.zero(field)
        cache: dict = {}
        for t in self.terms:
            prod = UniPoly.one(field)
            for i, e in enumerate(t):
                if e:
                    key = (i, e)
                    p = cache.get(key)
                    if p is None:
                        p = polys[i] ** e
                        cache[key] = p
                    prod = prod * p
            result = result + prod
        return result

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.sorted_terms():
            factors = []
            for name, e in zip(self.names, t):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors) if factors else "1")
        return "+".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.render()!r})"


def _resolve_assignment(names, assignment) -> list[UniPoly]:
    """Normalize {letter-or-name: UniPoly} into per-index images; every letter
    must be assigned a polynomial of degree >= 1."""
    by_name = {}
    for key, value in assignment.items():
        name = getattr(key, "name", key)
        by_name[name] = value
    polys = []
    for name in names:
        if name not in by_name:
            raise ConstantLetterAssignment(f"letter {name!r} has no assigned image")
        p = by_name[name]
        if not isinstance(p, UniPoly):
            raise TypeError(f"image of {name!r} must be a UniPoly")
        if p.is_zero or p.degree < 1:
            raise ConstantLetterAssignment(
                f"letter {name!r} must map to a polynomial of degree >= 1"
            )
        polys.append(p)
    fields = {id(p.field) for p in polys}
    if len(fields) > 1:
        raise TypeError("letter images lie in different fields")
    return polys


class SymbolicFraction:
    """Quotient of two MultiPoly values.

    Fractions are reduced by common monomial content, plus an exact-division
    pass that clears the denominator whenever it divides the numerator (or
    conversely); full multivariate gcd is deliberately not attempted, and
    equality is decided by cross-multiplication, never by representation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        num._check(den)
        if den.is_zero:
            raise ZeroDenominator("symbolic fraction with zero denominator")
        if num.is_zero:
            num, den = num, MultiPoly.one(num.names)
        else:
            c_num = num.content()
            c_den = den.content()
            common = tuple(min(a, b) for a, b in zip(c_num, c_den))
            if any(common):
                num = num.divide_monomial(common)
                den = den.divide_monomial(common)
            if not den.is_one:
                q = num.exact_div(den)
                if q is not None:
                    num, den = q, MultiPoly.one(num.names)
                else:
                    q = den.exact_div(num)
                    if q is not None:
                        num, den = MultiPoly.one(num.names), q
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "SymbolicFraction":
        return cls(p, MultiPoly.one(p.names))

    @classmethod
    def zero(cls, names) -> "SymbolicFraction":
        return cls(MultiPoly.zero(names), MultiPoly.one(names))

    @classmethod
    def one(cls, names) -> "SymbolicFraction":
        return cls(MultiPoly.one(names), MultiPoly.one(names))

    @property
    def names(self):
        return self.num.names

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "SymbolicFraction") -> "SymbolicFraction":
        return SymbolicFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __sub__ = __add__

    def __mul__(self, other: "SymbolicFraction") -> "SymbolicFraction":
        return SymbolicFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "SymbolicFraction") -> "SymbolicFraction":
        if other.num.is_zero:
            raise ZeroDenominator("division by the zero fraction")
        return SymbolicFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        """Cross-multiplication equality, independent of representation."""
        if not isinstance(other, SymbolicFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def map_symbols(self, new_names, index_map) -> "SymbolicFraction":
        return SymbolicFraction(
            self.num.map_symbols(new_names, index_map),
            self.den.map_symbols(new_names, index_map),
        )

    def evaluate(self, assignment: dict) -> RationalFunction:
        """Specialize every letter to a polynomial of degree >= 1."""
        num = self.num.evaluate(assignment)
        den = self.den.evaluate(assignment)
        if den.is_zero:
            raise ZeroDenominatorAfterEval(
                "denominator specialized to the zero polynomial"
            )
        return RationalFunction(num, den)

    def render(self) -> str:
        if self.den.is_one:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self):
        return f"SymbolicFraction({self.render()!r})"


def frac_eq(f: SymbolicFraction, g: SymbolicFraction) -> bool:
    return f == g


def det(matrix):
    """Determinant by cofactor expansion; entries are MultiPoly or
    SymbolicFraction (any ring with + and *).  Signs vanish in char 2."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NonSquareMatrix(f"matrix is not square: {n} rows")
    if n > _MAX_MATRIX_ORDER:
        raise ValueError(f"matrix order {n} above supported cap {_MAX_MATRIX_ORDER}")
    return _det(matrix)


def _det(matrix):
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    acc = None
    for i in range(n):
        term = matrix[i][0] * _det(_minor(matrix, i, 0))
        acc = term if acc is None else acc + term
    return acc


def _minor(matrix, i, j):
    return [
        [row[c] for c in range(len(row)) if c != j]
        for r, row in enumerate(matrix)
        if r != i
    ]


def cofactor(matrix, i, j):
    """Minor determinant at (i, j); equal to the cofactor in char 2."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NonSquareMatrix(f"matrix is not square: {n} rows")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("cofactor index outside the matrix")
    if n == 1:
        raise ValueError("cofactor of a 1x1 matrix is not defined here")
    return _det(_minor(matrix, i, j))


# -- parsing of the canonical rendering ------------------------------------

def parse_mpoly(text: str, names) -> MultiPoly:
    """Parse the canonical MultiPoly rendering over the given universe."""
    names = tuple(names)
    if text == "0":
        return MultiPoly.zero(names)
    index = {name: i for i, name in enumerate(names)}
    width = len(names)
    terms = []
    pos = 0
    for chunk in text.split("+"):
        if not chunk:
            raise ParseError("empty monomial", pos)
        exps = [0] * width
        if chunk != "1":
            fpos = pos
            for factor in chunk.split("*"):
                m = _NAME_RE.match(factor)
                if not m:
                    raise ParseError(f"bad factor {factor!r}", fpos)
                name = m.group(0)
                if name not in index:
                    raise ParseError(f"unknown letter {name!r}", fpos)
                rest = factor[m.end():]
                if rest:
                    if not rest.startswith("^") or not rest[1:].isdigit():
                        raise ParseError(f"bad exponent in {factor!r}", fpos)
                    exps[index[name]] += int(rest[1:])
                else:
                    exps[index[name]] += 1
                fpos += len(factor) + 1
        terms.append(tuple(exps))
        pos += len(chunk) + 1
    return MultiPoly(names, terms)


_FRACTION_RE = re.compile(r"^\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)$")


def parse_fraction(text: str, names) -> SymbolicFraction:
    """Parse the canonical fraction rendering ``(num)/(den)`` or a bare
    polynomial."""
    m = _FRACTION_RE.match(text)
    if m:
        num = parse_mpoly(m.group("num"), names)
        den = parse_mpoly(m.group("den"), names)
        return SymbolicFraction(num, den)
    return SymbolicFraction.from_poly(parse_mpoly(text, names))

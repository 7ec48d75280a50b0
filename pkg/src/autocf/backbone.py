"""Ultimately periodic backbone sequences and the words they generate.

A backbone of type (l, d) is a sequence of letters with a prefix of length l
followed by a period of length d.  The generated word sequence starts from the
empty word W_0 and doubles by W_{n+1} = W_n, e_n, W_n, so |W_n| = 2^n - 1 and
every W_n is a palindrome whose center is e_{n-1}.  The limit word s has the
closed form s_n = e_{v(n+1)} where v is the 2-adic valuation, which the tests
check against the doubling recursion position by position.

Letters may repeat; the symbol universe consists of the distinct letter names
in order of first appearance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidIndex, WordTooLarge
from .sympoly import MultiPoly

_WORD_CAP = 24

_LETTER_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True, order=True)
class Symbol:
    """A letter of the universe: position in the universe plus display name."""

    index: int
    name: str


@dataclass(frozen=True)
class BackboneSpec:
    """Type-(l, d) backbone: l >= 0 prefix letters, then a period of d >= 1.

    ``names`` lists the letter name at each of the l + d positions; repeats
    are allowed (collapsing letters is meaningful, see the letter-collapse
    tests).  Equation derivation additionally requires d >= 2.
    """

    l: int
    d: int
    names: tuple[str, ...]

    def __post_init__(self):
        if self.l < 0 or self.d < 1:
            raise ValueError(f"need l >= 0 and d >= 1, got ({self.l}, {self.d})")
        if len(self.names) != self.l + self.d:
            raise ValueError(
                f"expected {self.l + self.d} letters, got {len(self.names)}"
            )
        for name in self.names:
            if not _LETTER_RE.match(name):
                raise ValueError(f"bad letter token {name!r}")

    @classmethod
    def from_words(cls, prefix, period) -> "BackboneSpec":
        prefix = tuple(prefix)
        period = tuple(period)
        return cls(len(prefix), len(period), prefix + period)

    @property
    def universe(self) -> tuple[str, ...]:
        seen = []
        for name in self.names:
            if name not in seen:
                seen.append(name)
        return tuple(seen)

    @property
    def universe_symbols(self) -> tuple[Symbol, ...]:
        return tuple(Symbol(i, name) for i, name in enumerate(self.universe))

    @property
    def letters(self) -> tuple[Symbol, ...]:
        """Per-position symbols (universe symbols, possibly repeated)."""
        universe = self.universe
        index = {name: i for i, name in enumerate(universe)}
        return tuple(Symbol(index[name], name) for name in self.names)

    def symbol_poly(self, sym: Symbol) -> MultiPoly:
        return MultiPoly.symbol(self.universe, sym.index)


def epsilon_at(spec: BackboneSpec, n: int) -> Symbol:
    """Letter e_n: prefix letters verbatim, then periodic repetition."""
    if n < 0:
        raise InvalidIndex(f"letter index must be >= 0, got {n}")
    letters = spec.letters
    if n < spec.l:
        return letters[n]
    return letters[spec.l + (n - spec.l) % spec.d]


def word(spec: BackboneSpec, n: int) -> list[Symbol]:
    """W_n via the doubling recursion; length 2^n - 1, n <= 24."""
    if n < 0:
        raise InvalidIndex(f"word index must be >= 0, got {n}")
    if n > _WORD_CAP:
        raise WordTooLarge(f"word index {n} above cap {_WORD_CAP}")
    w: list[Symbol] = []
    for k in range(n):
        w = w + [epsilon_at(spec, k)] + w
    return w


def s_at(spec: BackboneSpec, n: int) -> Symbol:
    """Random access into the limit word: s_n = e_{v(n+1)}, v = 2-adic
    valuation (the number of trailing one bits of n)."""
    if n < 0:
        raise InvalidIndex(f"position must be >= 0, got {n}")
    m = n + 1
    return epsilon_at(spec, (m & -m).bit_length() - 1)


def s_prefix(spec: BackboneSpec, count: int) -> list[Symbol]:
    """First ``count`` letters of the limit word, materialized by doubling."""
    if count < 0:
        raise InvalidIndex(f"count must be >= 0, got {count}")
    w: list[Symbol] = []
    k = 0
    while len(w) < count:
        w = w + [epsilon_at(spec, k)] + w
        k += 1
    return w[:count]


def eps_weighted(spec: BackboneSpec, n: int, i: int) -> MultiPoly:
    """Weighted letter e(n, i): e(n, 0) = 1 and e(n, i+1) = e(n, i)^2 e_{n+i}.

    Closed form: the product over m < i of e_{n+m} raised to 2^(i-1-m).
    Returned as a single monomial over the universe.
    """
    if not 0 <= i <= spec.d:
        raise InvalidIndex(f"weight index must be in 0..{spec.d}, got {i}")
    universe = spec.universe
    exps = [0] * len(universe)
    for m in range(i):
        exps[epsilon_at(spec, n + m).index] += 1 << (i - 1 - m)
    return MultiPoly.monomial(universe, exps)

"""Finite fields GF(2^s) with elements represented as small integers.

An element x_0 + x_1*w + ... + x_{s-1}*w^{s-1} is encoded as the integer
x_0 + 2*x_1 + ... + 2^{s-1}*x_{s-1} (little-endian in the modulus basis).
Addition is XOR.  Multiplication uses exp/log tables built from powers of w,
which requires the modulus to be primitive; the fixed table below lists one
primitive polynomial per degree so that fields are identical across runs.
"""

from __future__ import annotations

import functools

from .errors import UnsupportedFieldSize

#: Primitive polynomials over GF(2), bit i = coefficient of w^i.
MODULI = {
    1: 0b11,                 # w + 1
    2: 0b111,                # w^2 + w + 1
    3: 0b1011,               # w^3 + w + 1
    4: 0b10011,              # w^4 + w + 1
    5: 0b100101,             # w^5 + w^2 + 1
    6: 0b1000011,            # w^6 + w + 1
    7: 0b10001001,           # w^7 + w^3 + 1
    8: 0b100011101,          # w^8 + w^4 + w^3 + w^2 + 1
    9: 0b1000010001,         # w^9 + w^4 + 1
    10: 0b10000001001,       # w^10 + w^3 + 1
    11: 0b100000000101,      # w^11 + w^2 + 1
    12: 0b1000001010011,     # w^12 + w^6 + w^4 + w + 1
    13: 0b10000000011011,    # w^13 + w^4 + w^3 + w + 1
    14: 0b100010001000011,   # w^14 + w^10 + w^6 + w + 1
    15: 0b1000000000000011,  # w^15 + w + 1
    16: 0b10001000000001011, # w^16 + w^12 + w^3 + w + 1
}


class BinaryField:
    """Descriptor for GF(2^s), 1 <= s <= 16.

    Use :func:`gf2s_field` to obtain instances; fields are cached per s so
    identity comparison is enough to detect mixed-field arithmetic.
    """

    __slots__ = ("s", "q", "modulus", "_exp", "_log")

    def __init__(self, s: int):
        if not isinstance(s, int) or not 1 <= s <= 16:
            raise UnsupportedFieldSize(f"extension degree must be in 1..16, got {s!r}")
        self.s = s
        self.q = 1 << s
        self.modulus = MODULI[s]
        if s == 1:
            self._exp = None
            self._log = None
        else:
            # exp[k] = w^k; traversal must cover all q-1 nonzero elements,
            # which holds because the modulus is primitive.
            q = self.q
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            v = 1
            for k in range(q - 1):
                exp[k] = v
                exp[k + q - 1] = v
                log[v] = k
                v <<= 1
                if v & q:
                    v ^= self.modulus
            if v != 1 or len(set(exp[: q - 1])) != q - 1:
                raise AssertionError(f"modulus for s={s} is not primitive")
            self._exp = exp
            self._log = log

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.s == 1:
            return 1
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.s == 1:
            return 1
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self.s == 1:
            return 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def validate(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return a

    def __repr__(self):
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def gf2s_field(s: int) -> BinaryField:
    """Return the cached descriptor for GF(2^s) with the fixed modulus table."""
    return BinaryField(s)

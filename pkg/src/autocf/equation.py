"""Derivation of the explicit degree-2^d relation for beta = 1/alpha.

Writing beta as the sum over n >= 1 of 1/u_n and repeatedly squaring gives,
for each 0 <= i <= d, an identity

    beta^(2^i) = z_i + sum_j e(d+l+j-i, i) * beta_j

where beta_j collects the terms 1/u_n with n = m*d + l + j (m >= 1) and z_i
is an explicit finite sum in the letters.  The first d identities form a
linear system M(d) * (beta_0, ..., beta_{d-1}) = C with monomial matrix
entries m[i][j] = e(d+l+j-i, i); Cramer elimination of the beta_j from the
i = d identity yields

    beta^(2^d) = A + sum_k B_k beta^(2^k)

with A and the B_k in the fraction field of the letters.  The beta_j
themselves are never materialized; only their elimination matters.

The closed form used for z_i (pinned here because it determines the result):
z_0 sums 1/u_k over 1 <= k <= l+d-1, and for 1 <= i <= d, z_i sums
e(n, i)/u_{n+i} over n >= 1 with n+i <= l+d-1, plus the single boundary term
e(0, d)/u_d (= 1) exactly when l = 0 and i = d: the reindexed periodic sums
start at n = 0 in that one case while the squared identity starts at n = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .backbone import BackboneSpec, epsilon_at, eps_weighted
from .cf import _letter_images
from .errors import DegenerateDeterminant, InvalidIndex
from .polys import RationalFunction, UniPoly
from .sympoly import MultiPoly, SymbolicFraction, cofactor, det


@dataclass(frozen=True)
class AlgebraicEquation:
    """Coefficients of beta^(2^d) = A + sum_k B_k beta^(2^k) over the letter
    fraction field, together with the backbone they came from."""

    spec: BackboneSpec
    d: int
    A: SymbolicFraction
    B: tuple[SymbolicFraction, ...]

    def to_json_dict(self) -> dict:
        return {
            "l": self.spec.l,
            "d": self.d,
            "letters": list(self.spec.names),
            "A": self.A.render(),
            "B": [b.render() for b in self.B],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


@dataclass(frozen=True)
class SpecializedEquation:
    """The same relation after replacing letters by polynomials in t."""

    d: int
    A: RationalFunction
    B: tuple[RationalFunction, ...]
    assignment: dict
    spec: BackboneSpec


def _u_monomial(spec: BackboneSpec, n: int) -> MultiPoly:
    """u_n as a monomial: the product over m < n of e_m^(2^(n-1-m))."""
    universe = spec.universe
    exps = [0] * len(universe)
    for m in range(n):
        exps[epsilon_at(spec, m).index] += 1 << (n - 1 - m)
    return MultiPoly.monomial(universe, exps)


def compute_z(spec: BackboneSpec, i: int) -> SymbolicFraction:
    """The finite correction term z_i of the i-th squared identity."""
    if spec.d < 2:
        raise ValueError("z terms are defined for d >= 2")
    if not 0 <= i <= spec.d:
        raise InvalidIndex(f"z index must be in 0..{spec.d}, got {i}")
    universe = spec.universe
    total = SymbolicFraction.zero(universe)
    if i == 0:
        for k in range(1, spec.l + spec.d):
            total = total + SymbolicFraction(
                MultiPoly.one(universe), _u_monomial(spec, k)
            )
        return total
    for n in range(1, spec.l + spec.d - i):
        total = total + SymbolicFraction(
            eps_weighted(spec, n, i), _u_monomial(spec, n + i)
        )
    if spec.l == 0 and i == spec.d:
        total = total + SymbolicFraction(
            eps_weighted(spec, 0, spec.d), _u_monomial(spec, spec.d)
        )
    return total


def build_matrix(spec: BackboneSpec) -> list[list[MultiPoly]]:
    """The d x d monomial matrix with entry (i, j) = e(d+l+j-i, i); row 0 is
    all ones."""
    if spec.d < 2:
        raise ValueError("the letter matrix is defined for d >= 2")
    d, l = spec.d, spec.l
    return [
        [eps_weighted(spec, d + l + j - i, i) for j in range(d)]
        for i in range(d)
    ]


def derive_equation(spec: BackboneSpec) -> AlgebraicEquation:
    """Eliminate the periodic partial series by Cramer's rule and return the
    degree-2^d relation's coefficients."""
    if spec.d < 2:
        raise ValueError("equation derivation requires d >= 2")
    d, l = spec.d, spec.l
    universe = spec.universe
    matrix = build_matrix(spec)
    delta = det(matrix)
    if delta.is_zero:
        raise DegenerateDeterminant("letter matrix has determinant zero")
    delta_frac = SymbolicFraction.from_poly(delta)
    z = [compute_z(spec, i) for i in range(d + 1)]
    cof = [[cofactor(matrix, i, j) for j in range(d)] for i in range(d)]
    weights = [eps_weighted(spec, l + j, d) for j in range(d)]

    B = []
    for k in range(d):
        num = MultiPoly.zero(universe)
        for j in range(d):
            num = num + weights[j] * cof[k][j]
        B.append(SymbolicFraction(num, delta))

    acc = SymbolicFraction.zero(universe)
    for j in range(d):
        c_j = SymbolicFraction.zero(universe)
        for i in range(d):
            c_j = c_j + SymbolicFraction.from_poly(cof[i][j]) * z[i]
        acc = acc + SymbolicFraction.from_poly(weights[j]) * c_j
    A = z[d] + acc / delta_frac
    return AlgebraicEquation(spec=spec, d=d, A=A, B=tuple(B))


def specialize_equation(eq: AlgebraicEquation, assignment) -> SpecializedEquation:
    """Evaluate every coefficient under letter -> polynomial of degree >= 1.

    Refused when the letter matrix determinant specializes to zero, since the
    elimination behind the coefficients is then invalid.
    """
    images = _letter_images(eq.spec, assignment)
    universe = eq.spec.universe
    named = dict(zip(universe, images))
    delta_spec = det(build_matrix(eq.spec)).evaluate(named)
    if delta_spec.is_zero:
        raise DegenerateDeterminant(
            "letter matrix determinant specializes to zero under this assignment"
        )
    A = eq.A.evaluate(named)
    B = tuple(b.evaluate(named) for b in eq.B)
    return SpecializedEquation(d=eq.d, A=A, B=B, assignment=named, spec=eq.spec)


def alpha_polynomial(eq: AlgebraicEquation):
    """The relation rewritten for alpha = 1/beta: a degree-2^d polynomial

        P(x) = A x^(2^d) + sum_k B_k x^(2^d - 2^k) + 1

    returned as (exponent, coefficient) pairs in descending exponent order;
    exactly d + 2 entries are potentially nonzero.
    """
    universe = eq.spec.universe
    top = 1 << eq.d
    entries = [(top, eq.A)]
    entries.extend((top - (1 << k), eq.B[k]) for k in range(eq.d))
    entries.append((0, SymbolicFraction.one(universe)))
    entries.sort(key=lambda pair: -pair[0])
    return entries

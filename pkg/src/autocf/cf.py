"""Convergents of the continued fraction generated by a backbone word.

Two routes to the same object are implemented and cross-checked:

* generic convergents x_n/y_n = [s_0, ..., s_{n-1}] by the three-term
  recurrence seeded x_1 = s_0, y_1 = 1;
* the special subsequence u_n/v_n = [s_0, ..., s_{2^n - 2}] aligned with the
  doubling words, satisfying u_{n+1} = e_n u_n^2, v_{n+1} = e_n u_n v_n + 1
  with (u_1, v_1) = (e_0, 1).

In the symbolic mode partial quotients are letters (MultiPoly); specialized
mode replaces each letter by a polynomial of degree >= 1 and also evaluates
the continued fraction and its reciprocal as Laurent series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .backbone import BackboneSpec, epsilon_at, s_at
from .errors import LevelTooLarge, PrecisionTooLow
from .polys import RationalFunction, UniPoly
from .series import CLEAN, LaurentSeries, series_expand
from .sympoly import MultiPoly, _resolve_assignment

_LEVEL_CAP = 64
_CONVERGENT_CAP = 200_000


@dataclass(frozen=True)
class ConvergentPair:
    """Numerator/denominator of [s_0, ..., s_{n-1}]; x_n y_{n-1} +
    x_{n-1} y_n = 1 in characteristic 2."""

    x: object
    y: object
    n: int


@dataclass(frozen=True)
class SpecialConvergent:
    """The convergent aligned with W_n; u_n is a single monomial in symbolic
    mode."""

    u: object
    v: object
    n: int


def _one_like(elem):
    if isinstance(elem, UniPoly):
        return UniPoly.one(elem.field)
    if isinstance(elem, MultiPoly):
        return MultiPoly.one(elem.names)
    raise TypeError(f"unsupported partial quotient type {type(elem)!r}")


def _zero_like(elem):
    if isinstance(elem, UniPoly):
        return UniPoly.zero(elem.field)
    return MultiPoly.zero(elem.names)


def convergents(pqs) -> list[ConvergentPair]:
    """All convergents of the finite continued fraction [pqs[0], pqs[1], ...]."""
    pqs = list(pqs)
    if not pqs:
        raise ValueError("need at least one partial quotient")
    one = _one_like(pqs[0])
    zero = _zero_like(pqs[0])
    x_prev, y_prev = one, zero
    x, y = pqs[0], one
    out = [ConvergentPair(x, y, 1)]
    for k, s in enumerate(pqs[1:], start=2):
        x, x_prev = s * x + x_prev, x
        y, y_prev = s * y + y_prev, y
        out.append(ConvergentPair(x, y, k))
    return out


def _letter_images(spec: BackboneSpec, assignment) -> list[UniPoly]:
    return _resolve_assignment(spec.universe, assignment)


def special_convergents(spec: BackboneSpec, n_max: int, assignment=None):
    """Levels 1..n_max of the doubling recurrence.

    With no assignment the result is symbolic: u_n a monomial, v_n a sparse
    polynomial in the letters.  Exponents grow like 2^n, hence the level cap.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > _LEVEL_CAP:
        raise LevelTooLarge(f"level {n_max} above cap {_LEVEL_CAP}")
    if assignment is None:
        universe = spec.universe
        eps = lambda n: spec.symbol_poly(epsilon_at(spec, n))
        one = MultiPoly.one(universe)
    else:
        images = _letter_images(spec, assignment)
        eps = lambda n: images[epsilon_at(spec, n).index]
        one = UniPoly.one(images[0].field)
    u, v = eps(0), one
    out = [SpecialConvergent(u, v, 1)]
    for n in range(1, n_max):
        e = eps(n)
        u, v = e * u * u, e * u * v + one
        out.append(SpecialConvergent(u, v, n + 1))
    return out


def _u_polys_up_to_degree(spec, images, deg_cap):
    """Specialized u_1, u_2, ... until deg u_n exceeds deg_cap (that last
    polynomial is included so callers know the next valuation)."""
    u = images[epsilon_at(spec, 0).index]
    out = [u]
    n = 0
    while out[-1].degree <= deg_cap:
        e = images[epsilon_at(spec, n + 1).index]
        out.append(e * out[-1] * out[-1])
        n += 1
    return out


def cf_to_series(spec: BackboneSpec, assignment, precision: int):
    """Evaluate the continued fraction alpha and its reciprocal beta.

    alpha comes from a generic convergent x_m/y_m with m chosen so that
    deg y_m + deg y_{m+1} exceeds the requested precision (the approximation
    error valuation is exactly that sum); beta = 1/alpha.  As a permanent
    cross-check beta is recomputed from the partial sums of 1/u_n and both
    routes must agree on their overlap.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    images = _letter_images(spec, assignment)
    field = images[0].field

    # generic convergent route
    x_prev, y_prev = UniPoly.one(field), UniPoly.zero(field)
    s0 = images[s_at(spec, 0).index]
    x, y = s0, UniPoly.one(field)
    k = 1
    while True:
        s = images[s_at(spec, k).index]
        x_next, y_next = s * x + x_prev, s * y + y_prev
        if y.degree + y_next.degree > precision:
            x, y = x_next, y_next
            break
        x_prev, y_prev, x, y = x, y, x_next, y_next
        k += 1
        if k > _CONVERGENT_CAP:
            raise PrecisionTooLow(
                f"precision {precision} needs more than {_CONVERGENT_CAP} convergents"
            )
    alpha = series_expand(RationalFunction(x, y), precision)
    beta = alpha.invert()

    # partial sums of 1/u_n: error valuation is deg of the first omitted u
    u_polys = _u_polys_up_to_degree(spec, images, precision)
    partial = LaurentSeries.zero(field, precision)
    one = UniPoly.one(field)
    for u in u_polys[:-1]:
        partial = partial + series_expand(RationalFunction(one, u), precision)
    check = (beta.truncate(precision) + partial).residual_valuation()
    if check is not CLEAN:
        raise AssertionError(
            f"convergent and partial-sum routes to beta disagree at valuation {check}"
        )
    return alpha, beta

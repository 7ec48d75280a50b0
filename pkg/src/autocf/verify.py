"""Numerical certification, power-series relation search, and the 2-kernel.

The derived relation is an exact identity, so its denominator-cleared
residual must vanish to every checked precision; any surviving coefficient
pinpoints a bug (or an injected corruption).  The relation search is a
Hermite-Pade style kernel computation over GF(2^s): unknown polynomial
coefficients, one linear constraint per series exponent, deterministic
Gaussian elimination, and every found relation is re-verified at doubled
precision before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .backbone import BackboneSpec, epsilon_at, s_at
from .cf import cf_to_series
from .equation import SpecializedEquation
from .errors import PrecisionTooLow
from .fields import BinaryField
from .polys import UniPoly, poly_lcm
from .series import CLEAN, LaurentSeries

_MIN_RESIDUAL_PRECISION = 64


def residual_valuation(
    eq: SpecializedEquation, spec: BackboneSpec, assignment, precision: int
):
    """CLEAN when the denominator-cleared residual of the relation vanishes
    to at least the requested precision, else the first bad exponent.

    The residual is D*beta^(2^d) + D*A + sum_k (D*B_k) beta^(2^k) with D the
    least common denominator, evaluated with enough slack that the propagated
    precision still reaches the requested bound.
    """
    if precision < _MIN_RESIDUAL_PRECISION:
        raise PrecisionTooLow(
            f"residual checks need precision >= {_MIN_RESIDUAL_PRECISION}"
        )
    den = eq.A.den
    for b in eq.B:
        den = poly_lcm(den, b.den)
    cleared_a = eq.A.num * (den // eq.A.den)
    cleared_b = [b.num * (den // b.den) for b in eq.B]
    degs = [den.degree, ]
    degs.append(cleared_a.degree if not cleared_a.is_zero else 0)
    degs.extend(p.degree if not p.is_zero else 0 for p in cleared_b)
    slack = int(max(degs)) + 1
    beta_precision = precision + slack
    _, beta = cf_to_series(spec, assignment, beta_precision)

    power = beta
    powers = [beta]  # powers[k] = beta^(2^k), k = 0..d
    for _ in range(eq.d):
        power = power.square()
        powers.append(power)

    exact_bound = beta_precision
    residual = LaurentSeries.from_poly(den, exact_bound) * powers[eq.d]
    residual = residual + LaurentSeries.from_poly(cleared_a, exact_bound)
    for k, p in enumerate(cleared_b):
        if not p.is_zero:
            residual = residual + LaurentSeries.from_poly(p, exact_bound) * powers[k]
    if residual.precision < precision:
        raise PrecisionTooLow(
            f"achieved residual precision {residual.precision} < {precision}"
        )
    return residual.residual_valuation()


def gamma_series(
    spec: BackboneSpec,
    field: BinaryField,
    letter_values: dict,
    precision: int,
) -> LaurentSeries:
    """The power series whose t^-n coefficient is the field image of s_n.

    The field only needs room for the distinct letters; the assignment itself
    is not required to be injective (collapsing letters is allowed).
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    universe = spec.universe
    if field.q < len(universe):
        raise ValueError(
            f"GF({field.q}) cannot hold {len(universe)} distinct letters"
        )
    by_name = {}
    for key, value in letter_values.items():
        by_name[getattr(key, "name", key)] = field.validate(value)
    values = []
    for name in universe:
        if name not in by_name:
            raise ValueError(f"letter {name!r} has no field value")
        values.append(by_name[name])
    window = [values[s_at(spec, n).index] for n in range(precision)]
    return LaurentSeries(field, 0, window, precision)


@dataclass(frozen=True)
class RelationCertificate:
    """A verified relation sum_e P_e(t) gamma^e = 0 to the stated precision.

    Normalized so the lowest-index nonzero P_e is monic; certification
    requires verified_precision >= 2*(deg_x + 1)*(deg_t + 1).
    """

    q: int
    deg_x: int
    deg_t: int
    coeffs: tuple[UniPoly, ...]
    verified_precision: int

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "deg_x": self.deg_x,
            "deg_t": self.deg_t,
            "coeffs": {f"P{e}": p.render() for e, p in enumerate(self.coeffs)},
            "verified_precision": self.verified_precision,
        }


def _kernel_vector(rows, ncols, field: BinaryField):
    """One nonzero kernel vector of the row system, or None.

    Deterministic: pivot is the first row with a nonzero entry in the current
    column; the first free column is set to 1.  Characteristic 2 makes
    back-substitution sign-free.
    """
    mat = [list(row) for row in rows if any(row)]
    mul = field.mul
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][col])
        if inv != 1:
            mat[r] = [mul(inv, x) for x in mat[r]]
        pivot_row = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x ^ mul(f, y) for x, y in zip(mat[i], pivot_row)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    if not free:
        return None
    f0 = free[0]
    vec = [0] * ncols
    vec[f0] = 1
    for row_idx, col in enumerate(pivots):
        vec[col] = mat[row_idx][f0]
    return vec


def relation_search(
    gamma: LaurentSeries, max_deg_x: int, max_deg_t: int, precision: int
):
    """Search for polynomials P_e (deg <= max_deg_t, 0 <= e <= max_deg_x, not
    all zero) with sum_e P_e gamma^e vanishing through the given exponent.

    The x-degree is minimized by searching e <= 1, 2, ... in turn; the first
    nonzero kernel wins, and because lower levels had trivial kernels the
    found degree is exactly minimal within the envelope.  Returns a
    re-verified certificate or None.
    """
    if max_deg_x < 1 or max_deg_t < 0:
        raise ValueError("need max_deg_x >= 1 and max_deg_t >= 0")
    if precision < 2 * (max_deg_x + 1) * (max_deg_t + 1):
        raise PrecisionTooLow(
            f"search precision {precision} below the certification bound "
            f"{2 * (max_deg_x + 1) * (max_deg_t + 1)}"
        )
    field = gamma.field
    need = 2 * precision + max_deg_t + 1 + max_deg_x * max(0, gamma.val_bound)
    if gamma.precision < need:
        raise PrecisionTooLow(
            f"gamma precision {gamma.precision} too low; re-verification at "
            f"doubled precision needs >= {need}"
        )
    powers = [LaurentSeries.from_poly(UniPoly.one(field), gamma.precision)]
    for _ in range(max_deg_x):
        powers.append(powers[-1] * gamma)

    B = max_deg_t
    for deg_x in range(1, max_deg_x + 1):
        cols = [(e, b) for e in range(deg_x + 1) for b in range(B + 1)]
        rows = []
        for n in range(-B, precision + 1):
            rows.append([powers[e].coeff(n + b) for (e, b) in cols])
        vec = _kernel_vector(rows, len(cols), field)
        if vec is None:
            continue
        coeffs = []
        for e in range(deg_x + 1):
            cs = vec[e * (B + 1): (e + 1) * (B + 1)]
            coeffs.append(UniPoly(field, cs))
        # normalize: make the lowest-index nonzero coefficient monic
        lowest = next(p for p in coeffs if not p.is_zero)
        scale = field.inv(lowest.lead)
        if scale != 1:
            coeffs = [p.scale(scale) for p in coeffs]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        found_deg_x = len(coeffs) - 1
        deg_t = int(max(p.degree for p in coeffs if not p.is_zero))

        residual = LaurentSeries.zero(field, powers[0].precision)
        for e, p in enumerate(coeffs):
            if not p.is_zero:
                residual = residual + LaurentSeries.from_poly(
                    p, powers[e].precision + max_deg_t
                ) * powers[e]
        if residual.precision < 2 * precision:
            raise PrecisionTooLow(
                f"re-verification reached precision {residual.precision} "
                f"< {2 * precision}"
            )
        if residual.residual_valuation() is not CLEAN:
            raise AssertionError(
                "kernel vector failed re-verification at doubled precision"
            )
        return RelationCertificate(
            q=field.q,
            deg_x=found_deg_x,
            deg_t=deg_t,
            coeffs=tuple(coeffs),
            verified_precision=residual.precision,
        )
    return None


@dataclass(frozen=True)
class TwoDFA:
    """Shift-state machine computing the limit word by trailing-ones count.

    State S_c remembers how many trailing one bits have been consumed,
    with c >= l reduced mod d (so there are at most l + d states).  Reading an
    odd n steps S_c -> S_{canon(c+1)} on (n-1)/2; an even n outputs e_c.
    """

    spec: BackboneSpec

    def canon(self, c: int) -> int:
        if c < self.spec.l:
            return c
        return self.spec.l + (c - self.spec.l) % self.spec.d

    @property
    def states(self) -> tuple[int, ...]:
        return tuple(range(self.spec.l + self.spec.d))

    @property
    def transitions(self) -> dict[int, int]:
        return {c: self.canon(c + 1) for c in self.states}

    @property
    def outputs(self) -> dict[int, str]:
        return {c: epsilon_at(self.spec, c).name for c in self.states}


def kernel_automaton(spec: BackboneSpec) -> TwoDFA:
    """The finite machine behind 2-automaticity: shift descriptors reduce
    mod d beyond the prefix, so the kernel closure is finite."""
    return TwoDFA(spec)


def automaton_eval(dfa: TwoDFA, n: int):
    """Run the machine on n; must agree with the closed form everywhere."""
    if n < 0:
        raise ValueError("position must be >= 0")
    c = 0
    while n & 1:
        n >>= 1
        c = dfa.canon(c + 1)
    return epsilon_at(dfa.spec, c)

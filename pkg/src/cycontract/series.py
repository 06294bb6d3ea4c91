"""Exact univariate Hilbert-series arithmetic.

A series is kept as an integer numerator polynomial over a factored
denominator prod_i (1 - t^{a_i}).  Expansion to power-series coefficients is
done by exact integer convolution; equality is decided by cross-multiplied
polynomial identity.  No floating point anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


# -- integer polynomials, coefficients ascending, no trailing zeros ---------


def poly_trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(a) for a in c)


def poly_add(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def one_minus_power(a: int) -> tuple[int, ...]:
    """Coefficients of 1 - t^a."""
    c = [0] * (a + 1)
    c[0], c[a] = 1, -1
    return tuple(c)


def poly_eval_one(a) -> int:
    return sum(a)


def _denominator_poly(exponents) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for a in exponents:
        out = poly_mul(out, one_minus_power(a))
    return out


@dataclass(frozen=True)
class RationalSeries:
    """numerator(t) / prod_i (1 - t^{a_i}), held exactly.

    Equality of instances is representational; use :func:`series_equal` for
    equality as rational functions.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", poly_trim(self.numerator))
        den = tuple(sorted(int(a) for a in self.denominator))
        if any(a < 1 for a in den):
            raise ValueError("denominator exponents must be positive")
        object.__setattr__(self, "denominator", den)

    def __str__(self) -> str:
        num = " ".join(str(c) for c in self.numerator) if self.numerator else "0"
        if not self.denominator:
            return num
        return num + " || " + ",".join(str(a) for a in self.denominator)


@dataclass(frozen=True)
class HilbertData:
    """Weights of the ambient weighted projective space and degrees of the
    defining equations of a complete intersection."""

    weights: tuple[int, ...]
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        d = tuple(int(a) for a in self.degrees)
        if not w or any(a < 1 for a in w):
            raise ValueError("weights must be a nonempty tuple of positive integers")
        if any(a < 1 for a in d):
            raise ValueError("degrees must be positive")
        if len(d) >= len(w):
            raise ValueError("need fewer equations than variables")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "degrees", d)

    @property
    def dimension(self) -> int:
        """Projective dimension of the complete intersection."""
        return len(self.weights) - len(self.degrees) - 1

    def sum_weights(self) -> int:
        return sum(self.weights)

    def sum_degrees(self) -> int:
        return sum(self.degrees)


def ci_hilbert_series(h: HilbertData) -> RationalSeries:
    """Hilbert series prod_j (1 - t^{d_j}) / prod_i (1 - t^{w_i})."""
    num: tuple[int, ...] = (1,)
    for d in h.degrees:
        num = poly_mul(num, one_minus_power(d))
    return RationalSeries(num, h.weights)


def series_coefficients(s: RationalSeries, n: int) -> list[int]:
    """Exact Taylor coefficients c_0..c_n at t = 0."""
    if n < 0:
        raise ValueError("need n >= 0")
    c = list(s.numerator[: n + 1]) + [0] * max(0, n + 1 - len(s.numerator))
    for a in s.denominator:
        # divide by (1 - t^a): prefix sums with lag a
        for k in range(a, n + 1):
            c[k] += c[k - a]
    return c


def series_equal(a: RationalSeries, b: RationalSeries) -> bool:
    """Equality as rational functions, by cross multiplication."""
    lhs = poly_mul(a.numerator, _denominator_poly(b.denominator))
    rhs = poly_mul(b.numerator, _denominator_poly(a.denominator))
    return lhs == rhs


class NotPolynomialError(ValueError):
    """The requested clearing does not leave a polynomial; carries the lowest
    degree of the nonvanishing remainder."""

    def __init__(self, degree: int):
        super().__init__(f"remainder is nonzero starting at degree {degree}")
        self.degree = degree


def numerator_over_standard(s: RationalSeries, k: int) -> tuple[int, ...]:
    """The polynomial s(t) * (1 - t)^k, when it is one."""
    num = s.numerator
    for _ in range(k):
        num = poly_mul(num, (1, -1))
    den = _denominator_poly(s.denominator)
    # ascending exact division; den has constant term 1
    rem = list(num)
    q: list[int] = []
    top = len(num) - len(den) + 1
    for i in range(max(0, top)):
        coef = rem[i]
        q.append(coef)
        if coef:
            for j, d in enumerate(den):
                rem[i + j] -= coef * d
    for i, r in enumerate(rem):
        if r:
            raise NotPolynomialError(i)
    return poly_trim(q)


def image_degree(s: RationalSeries, dim: int) -> int:
    """Degree of a dim-dimensional projective scheme with Hilbert series s."""
    return poly_eval_one(numerator_over_standard(s, dim + 1))


def embedding_dimension(s: RationalSeries) -> int:
    """Dimension of the projective space spanned by the degree-one piece."""
    c = series_coefficients(s, 1)
    if min(c) < 0:
        raise ValueError("series has a negative coefficient")
    return c[1] - 1


def series_from_coefficients(coeffs: list[int], dim: int) -> RationalSeries:
    """Recover numerator/(1-t)^{dim+1} from enough coefficients.

    The Hilbert function of a (dim)-dimensional graded ring is eventually a
    polynomial of degree dim, so numerator * 1/(1-t)^{dim+1} terminates; the
    tail of ``coeffs`` must contain a window of zeros after clearing, which we
    verify.
    """
    k = dim + 1
    num = list(coeffs)
    for _ in range(k):
        num = [num[0]] + [num[i] - num[i - 1] for i in range(1, len(num))]
    tail = max(1, len(num) // 3)
    if any(num[-tail:]):
        raise ValueError("not enough coefficients to pin the numerator down")
    return RationalSeries(poly_trim(num), (1,) * k)


# ---------------------------------------------------------------------------
# Section-count formulas for the double-cover constructions


def riemann_roch_fano(r: int, n: int) -> int:
    """chi(O_F(nH)) = r*n(n+1)(n+2)/6 + n + 1 on an index-2 Fano with H^3 = r.

    The right-hand side is a cubic polynomial in n and is evaluated as such,
    so negative twists are allowed (used by the recursion checks).
    """
    if not 1 <= r <= 5:
        raise ValueError("index-2 Fano threefolds have 1 <= H^3 <= 5")
    val = Fraction(r * n * (n + 1) * (n + 2), 6) + n + 1
    assert val.denominator == 1
    return int(val)


def cover_section_dim(r: int, n: int) -> int:
    """h^0 of the n-th multiple of the contracting class on the double cover
    of an index-2 Fano with H^3 = r: (r/2) n^3 + (r/2 + 3) n for n >= 1."""
    if not 1 <= r <= 5:
        raise ValueError("need 1 <= r <= 5")
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        return 1
    val = Fraction(r, 2) * (n**3 + n) + 3 * n
    assert val.denominator == 1, "r*(n^3+n) is always even"
    return int(val)


def defect_quintic(node_ideal_hf5: int, mu: int) -> int:
    """Defect of a nodal quintic threefold from the degree-5 Hilbert-function
    value of its node scheme: delta = h^0(I(5)) - h^0(O(5)) + mu = mu - HF(5).
    """
    if not 0 <= node_ideal_hf5 <= 126:
        raise ValueError("HF(5) must lie in [0, 126] since h^0(O_P4(5)) = 126")
    delta = mu - node_ideal_hf5
    if delta < 0:
        raise ValueError(f"negative defect {delta}: inconsistent inputs")
    return delta


def defect_from_ideal_dim(ideal_dim: int, ambient_sections: int, mu: int) -> int:
    """delta = h^0(I(d)) - h^0(O(d)) + mu with h^0(I(d)) supplied directly."""
    delta = ideal_dim - ambient_sections + mu
    if delta < 0:
        raise ValueError(f"negative defect {delta}: inconsistent inputs")
    return delta


# ---------------------------------------------------------------------------
# Series catalogue for the contraction images


def general_cover_numerator(r: int) -> tuple[int, ...]:
    """Numerator t^4 + (r-1) t^3 + r t^2 + (r-1) t + 1 over (1-t)^4."""
    return (1, r - 1, r, r - 1, 1)


def fano_cover_image_series(r: int) -> RationalSeries:
    """Product-form series of the contraction image for the index-2 double
    covers: sextic in P(1,1,1,1,2), (3,4) in P(1,1,1,1,1,2), (3,3) in P^5,
    (2,2,3) in P^6, and the cubic section of a G(2,5) linear section."""
    if r == 1:
        return ci_hilbert_series(HilbertData((1, 1, 1, 1, 2), (6,)))
    if r == 2:
        return ci_hilbert_series(HilbertData((1, 1, 1, 1, 1, 2), (3, 4)))
    if r == 3:
        return ci_hilbert_series(HilbertData((1,) * 6, (3, 3)))
    if r == 4:
        return ci_hilbert_series(HilbertData((1,) * 7, (2, 2, 3)))
    if r == 5:
        num = poly_mul((1, 0, -5, 5, 0, -1), one_minus_power(3))
        return RationalSeries(num, (1,) * 8)
    raise ValueError("need 1 <= r <= 5")


def general_cover_series(r: int) -> RationalSeries:
    if not 1 <= r <= 5:
        raise ValueError("need 1 <= r <= 5")
    return RationalSeries(general_cover_numerator(r), (1, 1, 1, 1))


def p3_cover_image_series(i: int) -> RationalSeries:
    """Series of the contraction images for the double covers of P^3 branched
    over a degree-i surface plus a degree-(8-i) surface, i = 1, 2, 3."""
    if i == 1:
        return RationalSeries((1, 17, 27, 17, 1), (1, 1, 1, 1))
    if i == 2:
        return RationalSeries(poly_mul(one_minus_power(3), (1, 6, 1)), (1,) * 5)
    if i == 3:
        return ci_hilbert_series(HilbertData((1,) * 5, (5,)))
    raise ValueError("need i in {1, 2, 3}")


def veronese_square_series(s: RationalSeries, dim: int = 3, terms: int = 40) -> RationalSeries:
    """Series of the same ring re-graded by even degrees (double Veronese)."""
    c = series_coefficients(s, 2 * terms)
    return series_from_coefficients(c[::2], dim)


def series_json(s: RationalSeries, n_coeffs: int = 10) -> str:
    return json.dumps(
        {
            "numerator": list(s.numerator),
            "denominator": list(s.denominator),
            "coefficients": series_coefficients(s, n_coeffs),
        }
    )

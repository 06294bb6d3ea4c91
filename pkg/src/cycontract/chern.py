"""Exact Euler characteristics from characteristic classes.

Complete intersections in (weighted) projective space are handled by a
truncated formal power series in one variable h with rational coefficients;
general ambients are handled through a table of mixed Chern numbers.  Surfaces
and curves on Fano threefolds get closed forms from adjunction.  Every result
is asserted integral before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .series import HilbertData

_TRUNC = 4  # keep h^0 .. h^3


def _mul_trunc(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * _TRUNC
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if i + j < _TRUNC:
                    out[i + j] += x * y
    return out


def _inv_one_plus(d: int) -> list[Fraction]:
    """1 / (1 + d*h) truncated."""
    return [Fraction((-d) ** k) for k in range(_TRUNC)]


def is_calabi_yau(h: HilbertData) -> bool:
    return h.sum_degrees() == h.sum_weights()


def ci_euler_weighted(h: HilbertData) -> int:
    """Topological Euler characteristic of a generic threefold complete
    intersection of the given degrees in weighted projective space.

    chi = [h^3] (prod (1 + w_i h) / prod (1 + d_j h)) * prod d_j / prod w_i.
    Quasi-smoothness of the generic member and avoidance of the singular
    strata of the ambient are assumed, not checked; a non-integral result
    signals an ambient where this naive normalization is invalid.
    """
    if h.dimension != 3:
        raise ValueError(
            f"complete intersection has dimension {h.dimension}, need a threefold"
        )
    series = [Fraction(1)] + [Fraction(0)] * (_TRUNC - 1)
    for w in h.weights:
        series = _mul_trunc(series, [Fraction(1), Fraction(w), Fraction(0), Fraction(0)])
    for d in h.degrees:
        series = _mul_trunc(series, _inv_one_plus(d))
    norm = Fraction(1)
    for d in h.degrees:
        norm *= d
    for w in h.weights:
        norm /= w
    chi = series[3] * norm
    if chi.denominator != 1:
        raise ValueError(f"non-integral chi {chi}: invalid weighted ambient for this formula")
    return int(chi)


# ---------------------------------------------------------------------------
# General ambients with supplied Chern numbers

MultiIndex = tuple[tuple[int, ...], int]  # (exponents of c_1..c_dim, power of H)


@dataclass(frozen=True)
class AmbientChernData:
    """Mixed Chern numbers of an ambient: integrals of monomials in the
    tangent Chern classes times powers of the hyperplane class."""

    dimension: int
    numbers: dict[MultiIndex, int] = field(default_factory=dict)

    def __post_init__(self):
        key = ((0,) * self.dimension, self.dimension)
        if self.numbers.get(key, 0) <= 0:
            raise ValueError("H^dimension must be present and positive")

    def value(self, c_exps: tuple[int, ...], h: int) -> int:
        key = (tuple(c_exps), h)
        if key not in self.numbers:
            raise KeyError(f"missing Chern number for multi-index {key}")
        return self.numbers[key]

    def single(self, j: int, h: int) -> int:
        """Integral of c_j(T) * H^h (c_0 = 1)."""
        exps = [0] * self.dimension
        if j:
            exps[j - 1] = 1
        return self.value(tuple(exps), h)


def ci_euler_ambient(a: AmbientChernData, degrees: list[int]) -> int:
    """chi of a threefold complete intersection cut out of the ambient by
    hypersurface classes d_j * H, via c(T_X) = c(T_A)|_X / prod(1 + d_j H)."""
    k = len(degrees)
    if a.dimension - k != 3:
        raise ValueError(f"need ambient dimension minus {k} equations to equal 3")
    # elementary symmetric functions of the degrees
    q = [1, 0, 0, 0]
    for d in degrees:
        for i in range(3, 0, -1):
            q[i] += q[i - 1] * d
    inv = [1, -q[1], q[1] ** 2 - q[2], -q[1] ** 3 + 2 * q[1] * q[2] - q[3]]
    prod_d = 1
    for d in degrees:
        prod_d *= d
    total = sum(inv[m] * a.single(3 - m, k + m) for m in range(4))
    return prod_d * total


def projective_chern_data(n: int) -> AmbientChernData:
    """Chern numbers of P^n: c(T) = (1+H)^{n+1}, so c_i = C(n+1, i) H^i."""
    from math import comb

    numbers: dict[MultiIndex, int] = {}

    def rec(i: int, left: int, exps: tuple[int, ...], coef: int):
        if i == n:
            numbers[(exps, left)] = coef
            return
        e = 0
        while e * (i + 1) <= left:
            rec(i + 1, left - e * (i + 1), exps + (e,), coef * comb(n + 1, i + 1) ** e)
            e += 1

    rec(0, n, (), 1)
    return AmbientChernData(n, numbers)


def load_chern_data(path_or_text: str, from_text: bool = False) -> AmbientChernData:
    """Read an ambient Chern table: lines ``e1 .. e_dim h : value``."""
    text = path_or_text if from_text else open(path_or_text, encoding="utf-8").read()
    dimension = None
    numbers: dict[MultiIndex, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dimension:"):
            dimension = int(line.split(":")[1])
            continue
        try:
            lhs, rhs = line.split(":")
            parts = [int(x) for x in lhs.split()]
            value = int(rhs)
        except ValueError as exc:
            raise ValueError(f"bad Chern data line {lineno}: {raw!r}") from exc
        numbers[(tuple(parts[:-1]), parts[-1])] = value
    if dimension is None:
        raise ValueError("Chern data file must declare 'dimension: n'")
    return AmbientChernData(dimension, numbers)


def grassmannian_g25_data() -> AmbientChernData:
    """Shipped mixed Chern numbers of G(2,5) (re-derived in the test suite)."""
    text = resources.files("cycontract.data").joinpath("g25_chern.txt").read_text()
    return load_chern_data(text, from_text=True)


# ---------------------------------------------------------------------------
# Fano threefolds and divisors on them


@dataclass(frozen=True)
class FanoModel:
    """Numerical shadow of a Fano threefold: index g (so c1 = g*H), the
    degree H^3, the number H.c2 and the topological Euler characteristic."""

    g: int
    H3: int
    Hc2: int
    chi_top: int

    def __post_init__(self):
        if self.g < 1 or self.H3 < 1:
            raise ValueError("index and degree must be positive")
        if self.g * self.Hc2 != 24:
            raise ValueError(f"g * H.c2 = {self.g * self.Hc2}, must be 24 since chi(O) = 1")


# chi(F) column for the five index-2 families, by H^3 = 1..5
INDEX2_CHI = {1: -38, 2: -16, 3: -6, 4: 0, 5: 4}

INDEX2_FANO = {r: FanoModel(g=2, H3=r, Hc2=12, chi_top=INDEX2_CHI[r]) for r in range(1, 6)}
P3_MODEL = FanoModel(g=4, H3=1, Hc2=6, chi_top=4)
QUADRIC_MODEL = FanoModel(g=3, H3=2, Hc2=8, chi_top=4)


def surface_euler_fano(f: FanoModel, m: int) -> int:
    """chi of a smooth member of |mH|:  m*H.c2 + m^2 (m - g) H^3."""
    if m < 1:
        raise ValueError("need m >= 1")
    return m * f.Hc2 + m * m * (m - f.g) * f.H3


def curve_euler_ci_fano(f: FanoModel, a: int, b: int) -> int:
    """chi of the curve |aH| cap |bH|:  -(a + b - g) a b H^3 by adjunction."""
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    return -(a + b - f.g) * a * b * f.H3


def delpezzo_euler(r: int) -> int:
    """chi of a smooth del Pezzo surface of degree r (r = 8 is modeled as
    P^1 x P^1, the case arising in the double-cover constructions)."""
    if not 1 <= r <= 9:
        raise ValueError("del Pezzo degree must be 1..9")
    return 12 - r

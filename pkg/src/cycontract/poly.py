"""Sparse multivariate polynomials with exact coefficients.

Coefficients live either in Q (stored as ``fractions.Fraction``, always
reduced with positive denominator) or in a prime field GF(p) with p < 2**31
(stored as ints in [0, p)).  Monomials are exponent tuples of length
``ring.nvars``; a polynomial is a dict from exponent tuple to a nonzero
coefficient, which makes the canonical form unique.

Every value is immutable after construction and every operation is a pure
function, so concurrent use on shared or distinct values is safe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping


class RingMismatchError(ValueError):
    """Operands belong to different polynomial rings."""


class ParseError(ValueError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonHomogeneousError(ValueError):
    """Polynomial is not homogeneous; carries two offending terms."""

    def __init__(self, message: str, terms):
        super().__init__(message)
        self.terms = terms


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PolyRing:
    """Ring descriptor: variable count, coefficient domain, grading.

    ``prime is None`` means the rationals; otherwise GF(prime).  ``weights``
    is the weight of each variable (all ones for the standard grading).
    """

    nvars: int
    prime: int | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("ring needs at least one variable")
        if self.prime is not None:
            if self.prime >= 1 << 31 or not _is_prime(self.prime):
                raise ValueError(f"modulus {self.prime} is not a prime below 2**31")
        if self.weights is not None:
            w = tuple(int(a) for a in self.weights)
            if len(w) != self.nvars or any(a < 1 for a in w):
                raise ValueError("weights must be positive, one per variable")
            object.__setattr__(self, "weights", w)

    @property
    def grading(self) -> tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * self.nvars

    def coerce(self, c):
        """Normalize a coefficient into the ring's domain."""
        if self.prime is None:
            return c if isinstance(c, Fraction) else Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % self.prime == 0:
                raise ValueError(f"denominator not invertible mod {self.prime}")
            return c.numerator * pow(c.denominator, -1, self.prime) % self.prime
        return int(c) % self.prime

    def zero_exp(self) -> tuple[int, ...]:
        return (0,) * self.nvars


def _grevlex_key(exp: tuple[int, ...]):
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MultiPoly:
    """Immutable sparse polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], object]):
        canon = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != ring.nvars:
                raise ValueError(f"monomial {exp} has wrong arity for {ring.nvars} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = ring.coerce(c)
            if c:
                canon[exp] = canon.get(exp, 0)
                canon[exp] = c if canon[exp] == 0 else ring.coerce(canon[exp] + c)
                if not canon[exp]:
                    del canon[exp]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", canon)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(ring: PolyRing) -> "MultiPoly":
        return MultiPoly(ring, {})

    @staticmethod
    def constant(ring: PolyRing, c) -> "MultiPoly":
        return MultiPoly(ring, {ring.zero_exp(): c})

    @staticmethod
    def variable(ring: PolyRing, i: int) -> "MultiPoly":
        if not 0 <= i < ring.nvars:
            raise ValueError(f"variable index {i} out of range")
        exp = [0] * ring.nvars
        exp[i] = 1
        return MultiPoly(ring, {tuple(exp): 1})

    @staticmethod
    def from_terms(ring: PolyRing, items: Iterable[tuple[tuple[int, ...], object]]) -> "MultiPoly":
        acc: dict[tuple[int, ...], object] = {}
        for exp, c in items:
            exp = tuple(exp)
            acc[exp] = acc.get(exp, 0) + c
        return MultiPoly(ring, acc)

    # -- inspection --------------------------------------------------------
    def terms(self) -> Iterator[tuple[tuple[int, ...], object]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in descending graded reverse lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grevlex_key(t[0]), reverse=True)

    def coefficient(self, exp: tuple[int, ...]):
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ring, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({poly_print(self)!r})"

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp)
            s = c if s is None else self.ring.coerce(s + c)
            if s:
                out[exp] = s
            else:
                del out[exp]
        return MultiPoly(self.ring, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        ring = self.ring
        p = ring.prime
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(exp)
                s = c if s is None else s + c
                if p is not None:
                    s %= p
                if s:
                    out[exp] = s
                elif exp in out:
                    del out[exp]
        return MultiPoly(ring, out)

    def scale(self, c) -> "MultiPoly":
        c = self.ring.coerce(c)
        if not c:
            return MultiPoly.zero(self.ring)
        return MultiPoly(self.ring, {e: self.ring.coerce(v * c) for e, v in self._terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus and substitution ----------------------------------------
    def derivative(self, i: int) -> "MultiPoly":
        out = {}
        for exp, c in self._terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = self.ring.coerce(c * exp[i])
        return MultiPoly(self.ring, out)

    def substitute_one(self, i: int) -> "MultiPoly":
        """Set x_i = 1 and drop the variable (ring shrinks by one)."""
        ring = PolyRing(self.ring.nvars - 1, self.ring.prime)
        out: dict[tuple[int, ...], object] = {}
        for exp, c in self._terms.items():
            e = exp[:i] + exp[i + 1 :]
            s = out.get(e)
            s = c if s is None else self.ring.coerce(s + c)
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly(ring, out)

    def substitute_zero(self, i: int) -> "MultiPoly":
        """Set x_i = 0 and drop the variable (ring shrinks by one)."""
        ring = PolyRing(self.ring.nvars - 1, self.ring.prime)
        out = {
            exp[:i] + exp[i + 1 :]: c for exp, c in self._terms.items() if exp[i] == 0
        }
        return MultiPoly(ring, out)


# ---------------------------------------------------------------------------
# Degrees


def weighted_degree(f: MultiPoly, weights: tuple[int, ...] | None = None) -> int:
    """Common weighted degree of all terms of a nonzero homogeneous ``f``.

    Raises for the zero polynomial, and reports two offending terms when the
    polynomial is not homogeneous for the given weights.
    """
    if f.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    w = weights if weights is not None else f.ring.grading
    if len(w) != f.ring.nvars:
        raise ValueError("weight vector has wrong length")
    degs = {}
    for exp, _ in f.terms():
        d = sum(e * a for e, a in zip(exp, w))
        degs.setdefault(d, exp)
        if len(degs) > 1:
            (d1, e1), (d2, e2) = sorted(degs.items())[:2]
            raise NonHomogeneousError(
                f"not homogeneous: term {e1} has degree {d1} but term {e2} has degree {d2}",
                (e1, e2),
            )
    return next(iter(degs))


def total_degree(f: MultiPoly) -> int:
    if f.is_zero():
        raise ValueError("degree of the zero polynomial is undefined")
    return max(sum(exp) for exp, _ in f.terms())


def is_homogeneous(f: MultiPoly, weights: tuple[int, ...] | None = None) -> bool:
    if f.is_zero():
        return True
    try:
        weighted_degree(f, weights)
        return True
    except NonHomogeneousError:
        return False


# ---------------------------------------------------------------------------
# Parsing and printing
#
# Grammar (whitespace insignificant):
#   poly   := ['+'|'-'] term (('+'|'-') term)*
#   term   := coeff ['*' factors] | factors
#   factors:= factor ('*' factor)*
#   factor := var ['^' uint]
#   var    := 'x' uint
#   coeff  := uint ['/' uint]
# A leading sign is accepted so that printed polynomials round-trip.


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])


def poly_parse(text: str, ring: PolyRing) -> MultiPoly:
    """Parse polynomial text into canonical form."""
    sc = _Scanner(text)
    terms: dict[tuple[int, ...], object] = {}
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    while True:
        exp, coeff = _parse_term(sc, ring)
        coeff = coeff * sign if sign < 0 else coeff
        c = ring.coerce(coeff)
        prev = terms.get(exp)
        s = c if prev is None else ring.coerce(prev + c)
        if s:
            terms[exp] = s
        elif exp in terms:
            del terms[exp]
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "+-":
            raise ParseError(f"unexpected character {ch!r}", sc.pos)
        sign = -1 if sc.take() == "-" else 1
    return MultiPoly(ring, terms)


def _parse_term(sc: _Scanner, ring: PolyRing):
    exp = [0] * ring.nvars
    coeff: object = 1
    ch = sc.peek()
    if ch.isdigit():
        num = sc.uint()
        coeff = num
        if sc.peek() == "/":
            sc.take()
            den = sc.uint()
            if den == 0:
                raise ParseError("zero denominator", sc.pos)
            coeff = Fraction(num, den)
        if sc.peek() == "*":
            sc.take()
            _parse_factors(sc, ring, exp)
        elif sc.peek() == "x":
            _parse_factors(sc, ring, exp)  # implicit product, e.g. "2x0"
    elif ch == "x":
        _parse_factors(sc, ring, exp)
    else:
        raise ParseError("expected a coefficient or a variable" if ch else "unexpected end of input", sc.pos)
    return tuple(exp), coeff


def _parse_factors(sc: _Scanner, ring: PolyRing, exp: list[int]):
    while True:
        pos = sc.pos
        if sc.peek() != "x":
            raise ParseError("expected a variable like x0", sc.pos)
        sc.take()
        idx = sc.uint()
        if idx >= ring.nvars:
            raise ParseError(f"variable index {idx} out of range for {ring.nvars} variables", pos)
        power = 1
        if sc.peek() == "^":
            sc.take()
            power = sc.uint()
        exp[idx] += power
        if sc.peek() == "*":
            save = sc.pos
            sc.take()
            if sc.peek() == "x":
                continue
            sc.pos = save  # the '*' belongs to an outer context
        break


def _format_coeff(c) -> str:
    return str(c)


def poly_print(f: MultiPoly) -> str:
    """Canonical text: graded reverse lexicographic, descending."""
    if f.is_zero():
        return "0"
    parts = []
    for exp, c in f.sorted_terms():
        if isinstance(c, Fraction):
            negative = c < 0
            mag = -c if negative else c
        else:
            negative, mag = False, c
        factors = []
        for i, e in enumerate(exp):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# Seeded generic polynomials


def monomials_of_degree(ring: PolyRing, d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of weighted degree ``d``, lexicographically sorted."""
    w = ring.grading
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, prefix: tuple[int, ...]):
        if i == ring.nvars - 1:
            if left % w[i] == 0:
                out.append(prefix + (left // w[i],))
            return
        for e in range(left // w[i], -1, -1):
            rec(i + 1, left - e * w[i], prefix + (e,))

    rec(0, d, ())
    out.sort()
    return out


def random_homogeneous(d: int, ring: PolyRing, seed: int) -> MultiPoly:
    """Seeded-random homogeneous polynomial of weighted degree ``d`` over GF(p).

    The coefficient on every monomial of weighted degree ``d`` is uniform in
    the field; the result is a deterministic function of (d, ring, seed).
    """
    if ring.prime is None:
        raise ValueError("random generic polynomials are only supported over a prime field")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    rng = random.Random(f"cycontract:{ring.prime}:{ring.nvars}:{ring.grading}:{d}:{seed}")
    terms = {}
    for exp in monomials_of_degree(ring, d):
        c = rng.randrange(ring.prime)
        if c:
            terms[exp] = c
    return MultiPoly(ring, terms)


# ---------------------------------------------------------------------------
# Singular-locus generators


def _minor_det(rows: list[list[MultiPoly]], ring: PolyRing) -> MultiPoly:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    out = MultiPoly.zero(ring)
    for j in range(k):
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _minor_det(sub, ring)
        out = out + (term if j % 2 == 0 else -term)
    return out


def jacobian_generators(fs: list[MultiPoly]) -> list[MultiPoly]:
    """Generators of the singular-locus ideal of the complete intersection V(fs).

    Returns the input polynomials together with all maximal minors of their
    Jacobian matrix (for a single f these are just its partial derivatives).
    """
    if not fs:
        raise ValueError("need at least one polynomial")
    ring = fs[0].ring
    for f in fs[1:]:
        if f.ring != ring:
            raise RingMismatchError("polynomials live in different rings")
    k, n = len(fs), ring.nvars
    jac = [[f.derivative(i) for i in range(n)] for f in fs]
    size = min(k, n)
    minors = []
    for rows in combinations(range(k), size):
        for cols in combinations(range(n), size):
            m = _minor_det([[jac[r][c] for c in cols] for r in rows], ring)
            if not m.is_zero():
                minors.append(m)
    return list(fs) + minors

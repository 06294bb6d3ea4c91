"""Pfaffians and sub-Pfaffians of skew-symmetric polynomial matrices.

Storage keeps only the upper-triangular entries, so skew-symmetry holds by
construction.  The sign convention is fixed once and for all by
pf([[0, a], [-a, 0]]) = a together with first-row expansion
pf(S) = sum_{j>0} (-1)^(j-1) * S[0][j] * pf(S with rows/cols 0, j deleted).
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import MultiPoly, PolyRing, RingMismatchError, poly_parse, poly_print


class SkewMatrix:
    """Skew-symmetric matrix of polynomials; entry (j, i) is -entry(i, j) and
    the diagonal is zero.  Immutable after construction."""

    __slots__ = ("ring", "size", "_upper")

    def __init__(self, ring: PolyRing, size: int, upper: dict[tuple[int, int], MultiPoly]):
        if size < 1:
            raise ValueError("matrix size must be positive")
        entries = {}
        for (i, j), p in upper.items():
            if not 0 <= i < j < size:
                raise ValueError(f"({i}, {j}) is not an upper-triangular position")
            if p.ring != ring:
                raise RingMismatchError("entry ring differs from matrix ring")
            if not p.is_zero():
                entries[(i, j)] = p
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "_upper", entries)

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("SkewMatrix is immutable")

    def entry(self, i: int, j: int) -> MultiPoly:
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError((i, j))
        if i == j:
            return MultiPoly.zero(self.ring)
        if i < j:
            return self._upper.get((i, j), MultiPoly.zero(self.ring))
        return -self._upper.get((j, i), MultiPoly.zero(self.ring))

    def upper_items(self):
        return sorted(self._upper.items())

    def principal_minor(self, keep: tuple[int, ...]) -> "SkewMatrix":
        """Submatrix on the given (sorted) row/column indices."""
        idx = {k: t for t, k in enumerate(keep)}
        upper = {
            (idx[i], idx[j]): p
            for (i, j), p in self._upper.items()
            if i in idx and j in idx
        }
        return SkewMatrix(self.ring, len(keep), upper)

    def delete(self, i: int) -> "SkewMatrix":
        return self.principal_minor(tuple(k for k in range(self.size) if k != i))

    def scale_index(self, i: int, c) -> "SkewMatrix":
        """Scale row i and column i by a constant (for the multilinearity law)."""
        upper = {}
        for (a, b), p in self._upper.items():
            upper[(a, b)] = p.scale(c) if i in (a, b) else p
        return SkewMatrix(self.ring, self.size, upper)

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {poly_print(p)}" for (i, j), p in self.upper_items())
        return f"SkewMatrix(n={self.size}, {{{body}}})"


def skew_from_text(text: str, ring: PolyRing, size: int) -> SkewMatrix:
    """Parse a matrix given as lines ``i j : poly`` (0-based, upper triangle)."""
    upper = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            lhs, rhs = line.split(":", 1)
            i, j = (int(v) for v in lhs.split())
        except ValueError as exc:
            raise ValueError(f"bad matrix line {lineno}: {raw!r}") from exc
        upper[(i, j)] = poly_parse(rhs, ring)
    return SkewMatrix(ring, size, upper)


def _pf_rec(s: SkewMatrix, keep: tuple[int, ...], memo: dict) -> MultiPoly:
    if not keep:
        return MultiPoly.constant(s.ring, 1)
    got = memo.get(keep)
    if got is not None:
        return got
    first = keep[0]
    rest = keep[1:]
    out = MultiPoly.zero(s.ring)
    for pos, j in enumerate(rest):
        e = s.entry(first, j)
        if e.is_zero():
            continue
        sub = tuple(k for k in rest if k != j)
        term = e * _pf_rec(s, sub, memo)
        out = out + (term if pos % 2 == 0 else -term)
    memo[keep] = out
    return out


def pfaffian(s: SkewMatrix) -> MultiPoly:
    """Pfaffian by recursive first-row expansion (even size required)."""
    if s.size % 2:
        raise ValueError(f"Pfaffian needs even size, got {s.size}")
    return _pf_rec(s, tuple(range(s.size)), {})


def pfaffian_expand_along(s: SkewMatrix, row: int) -> MultiPoly:
    """Pfaffian computed by expanding along an arbitrary row; agrees with
    :func:`pfaffian` (used as a property check)."""
    if s.size % 2:
        raise ValueError(f"Pfaffian needs even size, got {s.size}")
    if not 0 <= row < s.size:
        raise IndexError(row)
    memo: dict = {}
    out = MultiPoly.zero(s.ring)
    others = [k for k in range(s.size) if k != row]
    for pos, j in enumerate(others):
        e = s.entry(row, j)
        if e.is_zero():
            continue
        sub = tuple(k for k in others if k != j)
        term = e * _pf_rec(s, sub, memo)
        out = out + (term if pos % 2 == 0 else -term)
    # moving the chosen row to the front costs `row` adjacent swaps
    return out if row % 2 == 0 else -out


def maximal_sub_pfaffians(s: SkewMatrix) -> list[MultiPoly]:
    """For odd size n, the n Pfaffians of the principal (n-1) x (n-1) minors;
    entry i is the Pfaffian after deleting row and column i."""
    if s.size % 2 == 0:
        raise ValueError(f"sub-Pfaffians need odd size, got {s.size}")
    memo: dict = {}
    out = []
    for i in range(s.size):
        keep = tuple(k for k in range(s.size) if k != i)
        out.append(_pf_rec(s, keep, memo))
    return out


def build_bordered(
    m: SkewMatrix,
    lforms: list[MultiPoly],
    tforms: list[MultiPoly],
    corner: MultiPoly | None = None,
) -> SkewMatrix:
    """The 7x7 bordered matrix with first row (0, corner, t_1..t_5), second
    row (-corner, 0, l_1..l_5) and the given 5x5 block in the corner.

    All entries except the free corner must be linear forms; the corner
    defaults to zero (it never enters the two distinguished sub-Pfaffians).
    """
    if m.size != 5:
        raise ValueError("inner block must be 5x5")
    if len(lforms) != 5 or len(tforms) != 5:
        raise ValueError("need five l-forms and five t-forms")
    ring = m.ring

    def check_linear(p: MultiPoly, what: str):
        if p.is_zero():
            return
        from .poly import weighted_degree

        if weighted_degree(p, (1,) * ring.nvars) != 1:
            raise ValueError(f"{what} must be a linear form")

    for (i, j), p in m.upper_items():
        check_linear(p, f"matrix entry ({i},{j})")
    for k, p in enumerate(lforms):
        check_linear(p, f"l[{k}]")
    for k, p in enumerate(tforms):
        check_linear(p, f"t[{k}]")
    upper: dict[tuple[int, int], MultiPoly] = {}
    if corner is not None:
        upper[(0, 1)] = corner
    for k in range(5):
        upper[(0, k + 2)] = tforms[k]
        upper[(1, k + 2)] = lforms[k]
    for (i, j), p in m.upper_items():
        upper[(i + 2, j + 2)] = p
    return SkewMatrix(ring, 7, upper)


@dataclass(frozen=True)
class ExpansionReport:
    holds: bool
    signs: tuple[int, ...]
    assignment: str  # which border row pairs with which distinguished sub-Pfaffian

    def __bool__(self):
        return self.holds


def _signed_combination(forms: list[MultiPoly], ps: list[MultiPoly]) -> MultiPoly:
    out = MultiPoly.zero(forms[0].ring)
    for k in range(5):
        term = forms[k] * ps[k]
        out = out + (term if k % 2 == 0 else -term)
    return out


def expansion_identity_report(
    n: SkewMatrix,
    lforms: list[MultiPoly] | None = None,
    tforms: list[MultiPoly] | None = None,
) -> ExpansionReport:
    """Check the border expansion of a 7x7 bordered matrix: the sub-Pfaffians
    P_1, P_2 (deleting the first or second row) must equal the alternating
    combinations of the inner 5x5 sub-Pfaffians against the border rows.

    The border forms default to the ones stored in the matrix; passing the
    forms used at construction time turns this into a falsification check
    against later tampering.
    """
    if n.size != 7:
        raise ValueError("expansion check needs a 7x7 matrix")
    if tforms is None:
        tforms = [n.entry(0, k + 2) for k in range(5)]
    if lforms is None:
        lforms = [n.entry(1, k + 2) for k in range(5)]
    inner = n.principal_minor((2, 3, 4, 5, 6))
    ps = maximal_sub_pfaffians(inner)
    p1 = pfaffian(n.delete(0))
    p2 = pfaffian(n.delete(1))
    signs = (1, -1, 1, -1, 1)
    if p1 == _signed_combination(lforms, ps) and p2 == _signed_combination(tforms, ps):
        return ExpansionReport(True, signs, "P1 = sum(+-l_i p_i), P2 = sum(+-t_i p_i)")
    if p1 == _signed_combination(tforms, ps) and p2 == _signed_combination(lforms, ps):
        return ExpansionReport(True, signs, "P1 = sum(+-t_i p_i), P2 = sum(+-l_i p_i)")
    return ExpansionReport(False, signs, "no signed combination matches")


def expansion_identity_check(
    n: SkewMatrix,
    lforms: list[MultiPoly] | None = None,
    tforms: list[MultiPoly] | None = None,
) -> bool:
    return expansion_identity_report(n, lforms, tforms).holds

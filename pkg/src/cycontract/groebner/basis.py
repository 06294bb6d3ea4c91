"""Buchberger's algorithm over prime fields and the ideal queries built on it.

Pair selection follows the normal strategy (minimal lcm in the order, which
for graded orders means minimal lcm degree first) with Gebauer-Moeller
elimination of redundant pairs.  The output basis is reduced: monic, no
leading monomial divides another, and every tail is fully reduced, so it is
the canonical basis of the ideal for the chosen order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from ..poly import MultiPoly, PolyRing, RingMismatchError, is_homogeneous, monomials_of_degree, weighted_degree
from .kernel import Engine
from .orders import GREVLEX, BudgetExceededError, DegreeCapError, MonomialOrder, TermOrder

DEFAULT_BUDGET = 10_000_000


def _pack_poly(f: MultiPoly, to: TermOrder) -> tuple[list[int], list[int]]:
    terms = to.sort_terms((to.pack(exp), int(c)) for exp, c in f.terms())
    return [k for k, _ in terms], [c for _, c in terms]


def _unpack_poly(keys: list[int], coeffs: list[int], to: TermOrder, ring: PolyRing) -> MultiPoly:
    return MultiPoly(ring, {to.unpack(k): c for k, c in zip(keys, coeffs)})


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis over a prime field."""

    ring: PolyRing
    order: MonomialOrder
    generators: tuple[MultiPoly, ...]
    reduced: bool = True

    def __post_init__(self):
        to = TermOrder(self.ring.nvars, self.order)
        object.__setattr__(self, "_torder", to)
        engine = Engine(self.ring.prime, to, DEFAULT_BUDGET)
        leads = []
        for g in self.generators:
            keys, coeffs = _pack_poly(g, to)
            engine.add(keys, coeffs)
            leads.append(to.unpack(keys[0]))
        object.__setattr__(self, "_engine", engine)
        object.__setattr__(self, "lead_exponents", tuple(leads))

    def __len__(self):
        return len(self.generators)

    def contains(self, f: MultiPoly) -> bool:
        return normal_form(f, self).is_zero()


def _interreduce(engine, alive: list[int], to: TermOrder, p: int):
    """Minimal, tail-reduced, monic generators from the raw basis indices."""
    # minimization: drop any element whose lead is divisible by another lead
    alive_sorted = sorted(alive, key=lambda i: engine.lead_keys[i])
    minimal: list[int] = []
    for i in alive_sorted:
        ei = engine.lead_exps[i]
        if any(to.divides_exp(engine.lead_exps[j], ei) for j in minimal):
            continue
        minimal.append(i)
    out = []
    final = Engine(p, to, engine.budget)
    for i in minimal:
        keys, coeffs = engine.poly(i)
        final.add(keys, coeffs)
    for pos, i in enumerate(minimal):
        keys, coeffs = final.poly(pos)
        tail_k, tail_c = final.nf(keys[1:], coeffs[1:])
        out.append(([keys[0]] + tail_k, [coeffs[0]] + tail_c))
    out.sort(key=lambda t: t[0][0], reverse=True)
    return out


def buchberger(
    gens: list[MultiPoly],
    order: MonomialOrder = GREVLEX,
    budget: int = DEFAULT_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    if ring.prime is None:
        raise ValueError("Groebner bases are only supported over a prime field")
    for g in gens[1:]:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    to = TermOrder(ring.nvars, order)
    packed = [_pack_poly(g, to) for g in gens if not g.is_zero()]
    if not packed:
        return GroebnerBasis(ring, order, ())
    packed.sort(key=lambda t: (t[0][0], t[0]))
    engine = Engine(ring.prime, to, budget)

    lead_exps: list[tuple[int, ...]] = []
    pairs: list[tuple[int, int, int]] = []  # (lcm_key, i, j) heap
    pair_alive: set[tuple[int, int]] = set()
    pair_lcm: dict[tuple[int, int], tuple[int, ...]] = {}

    def add_element(keys, coeffs):
        idx = engine.add(keys, coeffs)
        exp = engine.lead_exps[idx]
        _update_pairs(idx, exp)
        lead_exps.append(exp)

    def _update_pairs(h: int, th: tuple[int, ...]):
        # candidate pairs with the new element, Gebauer-Moeller pruned
        cands = []
        for g in range(h):
            lcm = to.lcm_exp(lead_exps[g], th)
            cands.append((sum(lcm), lcm, g))
        cands.sort(key=lambda t: (t[0], t[1]))
        kept: list[tuple[tuple[int, ...], int]] = []
        seen_lcms: dict[tuple[int, ...], int] = {}
        for deg, lcm, g in cands:
            if lcm in seen_lcms:
                continue  # F criterion: one pair per lcm is enough
            if any(to.divides_exp(k, lcm) and k != lcm for k, _ in kept):
                continue  # M criterion: a proper divisor lcm is already kept
            kept.append((lcm, g))
            seen_lcms[lcm] = g
        # product criterion: coprime leading monomials reduce to zero.  When
        # several candidates shared a coprime lcm, the whole group goes.
        coprime_lcms = set()
        for g in range(h):
            prod = tuple(a + b for a, b in zip(lead_exps[g], th))
            if to.lcm_exp(lead_exps[g], th) == prod:
                coprime_lcms.add(prod)
        for lcm, g in kept:
            if lcm in coprime_lcms:
                continue
            try:
                lcm_key = to.pack(lcm)
            except DegreeCapError:
                raise BudgetExceededError(
                    "pair lcm exceeds the packed degree cap; the computation is degenerating"
                )
            pair = (g, h)
            pair_alive.add(pair)
            pair_lcm[pair] = lcm
            heapq.heappush(pairs, (lcm_key, g, h))
        # B criterion: the new lead may supersede old pairs
        for (i, j) in list(pair_alive):
            if j == h:
                continue
            lcm_ij = pair_lcm[(i, j)]
            if (
                to.divides_exp(th, lcm_ij)
                and to.lcm_exp(lead_exps[i], th) != lcm_ij
                and to.lcm_exp(lead_exps[j], th) != lcm_ij
            ):
                pair_alive.discard((i, j))

    for keys, coeffs in packed:
        add_element(keys, coeffs)

    while pairs:
        lcm_key, i, j = heapq.heappop(pairs)
        if (i, j) not in pair_alive:
            continue
        pair_alive.discard((i, j))
        keys, coeffs = engine.spoly_nf(i, j, lcm_key)
        if keys:
            add_element(keys, coeffs)

    reduced = _interreduce(engine, list(range(len(engine))), to, ring.prime)
    gens_out = tuple(_unpack_poly(k, c, to, ring) for k, c in reduced)
    return GroebnerBasis(ring, order, gens_out)


def normal_form(f: MultiPoly, g: GroebnerBasis) -> MultiPoly:
    """Unique remainder of f modulo the basis; zero iff f is in the ideal."""
    if f.ring != g.ring:
        raise RingMismatchError("polynomial ring differs from the basis ring")
    if f.is_zero():
        return f
    to = g._torder
    keys, coeffs = _pack_poly(f, to)
    rk, rc = g._engine.nf(keys, coeffs)
    return _unpack_poly(rk, rc, to, g.ring)


def is_zero_dimensional(g: GroebnerBasis) -> bool:
    """True iff every variable carries a pure-power leading monomial."""
    if not g.generators:
        return False
    for i in range(g.ring.nvars):
        if not any(
            all(e == 0 for k, e in enumerate(exp) if k != i) for exp in g.lead_exponents
        ):
            return False
    return True


def standard_monomials(g: GroebnerBasis) -> list[tuple[int, ...]]:
    """Monomials not divisible by any leading monomial (finite iff the ideal
    is zero-dimensional)."""
    if not is_zero_dimensional(g):
        raise ValueError("quotient is infinite-dimensional")
    n = g.ring.nvars
    leads = list(g.lead_exponents)
    bounds = []
    for i in range(n):
        pure = [exp[i] for exp in leads if all(e == 0 for k, e in enumerate(exp) if k != i)]
        bounds.append(min(pure))
    out: list[tuple[int, ...]] = []

    def divisible(exp):
        for le in leads:
            if all(a <= b for a, b in zip(le, exp)):
                return True
        return False

    def rec(i, prefix):
        if i == n:
            if not divisible(prefix):
                out.append(prefix)
            return
        for e in range(bounds[i]):
            rec(i + 1, prefix + (e,))

    rec(0, ())
    return out


def quotient_degree(g: GroebnerBasis) -> int:
    """Count of standard monomials, i.e. the length of the quotient."""
    return len(standard_monomials(g))


# ---------------------------------------------------------------------------
# Linear algebra over GF(p)


def rank_mod_p(rows: np.ndarray, p: int) -> int:
    """Rank of an integer matrix modulo p (row echelon, vectorized)."""
    m = np.array(rows, dtype=np.int64) % p
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if m[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = m[r] * inv % p
        col = m[r + 1 :, c]
        nz = col != 0
        if nz.any():
            m[r + 1 :][nz] = (m[r + 1 :][nz] - np.outer(col[nz], m[r])) % p
        r += 1
        if r == nrows:
            break
    return r


def graded_piece_dim(gens: list[MultiPoly], d: int) -> int:
    """Dimension of the degree-d piece of the homogeneous ideal <gens>.

    Row-reduces the coefficient vectors of m * g over the degree-d monomial
    basis, for every generator g and every monomial m of degree d - deg g.
    """
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    if ring.prime is None:
        raise ValueError("graded pieces are computed over a prime field")
    if d < 0:
        raise ValueError("need d >= 0")
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
        if not g.is_zero() and not is_homogeneous(g, (1,) * ring.nvars):
            raise ValueError(f"non-homogeneous generator: {g!r}")
    basis = monomials_of_degree(PolyRing(ring.nvars), d)
    col = {exp: k for k, exp in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        dg = weighted_degree(g, (1,) * ring.nvars)
        if dg > d:
            continue
        for m in monomials_of_degree(PolyRing(ring.nvars), d - dg):
            vec = [0] * len(basis)
            for exp, c in g.terms():
                vec[col[tuple(a + b for a, b in zip(exp, m))]] = int(c)
            rows.append(vec)
    if not rows:
        return 0
    return rank_mod_p(np.array(rows, dtype=np.int64), ring.prime)


# ---------------------------------------------------------------------------
# Separability certificate


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Euclidean gcd of univariate polynomials over GF(p), coefficients
    ascending."""

    def trim(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(list(a)), trim(list(b))
    while b:
        # a mod b
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            f = a[-1] * inv % p
            off = len(a) - len(b)
            for t in range(len(b)):
                a[off + t] = (a[off + t] - f * b[t]) % p
            trim(a)
        a, b = b, a
    return a


def minimal_polynomial(g: GroebnerBasis, form: MultiPoly) -> list[int]:
    """Minimal polynomial of a ring element acting on the finite quotient,
    coefficients ascending and monic."""
    basis = standard_monomials(g)
    dim = len(basis)
    p = g.ring.prime
    if dim == 0:
        return [1]
    col = {exp: k for k, exp in enumerate(basis)}

    def coords(f: MultiPoly) -> np.ndarray:
        v = np.zeros(dim, dtype=np.int64)
        for exp, c in f.terms():
            v[col[exp]] = int(c)
        return v

    # incremental echelon with power bookkeeping to spot the first dependency
    ech: list[tuple[int, np.ndarray, np.ndarray]] = []  # (pivot, vector, combo)
    power = MultiPoly.constant(g.ring, 1)
    for k in range(dim + 1):
        if k > 0:
            power = normal_form(power * form, g)
        vec = coords(power)
        combo = np.zeros(dim + 2, dtype=np.int64)
        combo[k] = 1
        for piv, row, rcombo in ech:
            if vec[piv]:
                f = vec[piv] * pow(int(row[piv]), -1, p) % p
                vec = (vec - f * row) % p
                combo = (combo - f * rcombo) % p
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            return [int(c) for c in combo[: k + 1]]
        ech.append((int(nz[0]), vec, combo))
    raise AssertionError("no dependency found below the quotient dimension")


def separability_check(g: GroebnerBasis, seed: int) -> bool:
    """Certify that the zero-dimensional quotient is a product of distinct
    points: the minimal polynomial of a seeded-random linear form must be
    squarefree of degree equal to the quotient degree."""
    basis = standard_monomials(g)
    dim = len(basis)
    if dim == 0:
        return True
    import random

    p = g.ring.prime
    rng = random.Random(f"cycontract:sep:{p}:{g.ring.nvars}:{seed}")
    while True:
        cs = [rng.randrange(p) for _ in range(g.ring.nvars)]
        if any(cs):
            break
    form = MultiPoly(
        g.ring,
        {
            tuple(1 if k == i else 0 for k in range(g.ring.nvars)): c
            for i, c in enumerate(cs)
            if c
        },
    )
    m = minimal_polynomial(g, form)
    if len(m) - 1 != dim:
        return False
    deriv = [c * k % p for k, c in enumerate(m)][1:]
    gcd = _gf_gcd(m, deriv, p)
    return len(gcd) <= 1

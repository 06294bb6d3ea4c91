"""Pure-Python reduction engine for Buchberger's algorithm over GF(p).

Polynomials are parallel lists (keys, coeffs) with packed monomial keys
sorted descending; stored basis elements are monic.  A normal form keeps the
working polynomial in a dict keyed by packed monomial plus a lazy max-heap of
pending keys, so each monomial is visited once in descending order.

The compiled extension in ``_core`` implements the same interface; this
module is the fallback selected at import time when the extension is absent.
"""

from __future__ import annotations

import heapq

from .orders import BudgetExceededError, TermOrder


class Engine:
    """Stateful reduction kernel: holds a growing monic basis over GF(p)."""

    backend = "python"

    def __init__(self, p: int, torder: TermOrder, budget: int):
        self.p = p
        self.torder = torder
        self.budget = budget
        self.steps = 0
        self.keys: list[list[int]] = []
        self.coeffs: list[list[int]] = []
        self.lead_exps: list[tuple[int, ...]] = []
        self.lead_degs: list[int] = []
        self.lead_keys: list[int] = []
        self._memo: dict[int, int] = {}  # monomial key -> reducer index or -1

    def __len__(self) -> int:
        return len(self.keys)

    def add(self, keys: list[int], coeffs: list[int]) -> int:
        """Store a nonzero polynomial (made monic); returns its index."""
        p = self.p
        inv = pow(coeffs[0], -1, p)
        self.keys.append(list(keys))
        self.coeffs.append([c * inv % p for c in coeffs])
        self.lead_keys.append(keys[0])
        exp = self.torder.unpack(keys[0])
        self.lead_exps.append(exp)
        self.lead_degs.append(sum(exp))
        # previously irreducible monomials may now be reducible
        self._memo = {k: v for k, v in self._memo.items() if v >= 0}
        return len(self.keys) - 1

    def poly(self, i: int) -> tuple[list[int], list[int]]:
        return self.keys[i], self.coeffs[i]

    def _find_reducer(self, key: int) -> int:
        got = self._memo.get(key)
        if got is not None:
            return got
        exp = self.torder.unpack(key)
        deg = sum(exp)
        found = -1
        for idx in range(len(self.lead_exps)):
            if self.lead_degs[idx] > deg:
                continue
            le = self.lead_exps[idx]
            ok = True
            for a, b in zip(le, exp):
                if a > b:
                    ok = False
                    break
            if ok:
                found = idx
                break
        self._memo[key] = found
        return found

    def _nf_work(self, work: dict[int, int]) -> tuple[list[int], list[int]]:
        p = self.p
        one = self.torder.one
        heap = [-k for k in work]
        heapq.heapify(heap)
        out_k: list[int] = []
        out_c: list[int] = []
        budget = self.budget
        while heap:
            k = -heapq.heappop(heap)
            c = work.pop(k, 0)
            if not c:
                continue  # cancelled or duplicate heap entry
            idx = self._find_reducer(k)
            if idx < 0:
                out_k.append(k)
                out_c.append(c)
                continue
            gk = self.keys[idx]
            gc = self.coeffs[idx]
            self.steps += len(gk)
            if self.steps > budget:
                raise BudgetExceededError(
                    f"exceeded {budget} monomial reductions; raise the budget to continue"
                )
            shift = k - gk[0]  # multiplier key minus `one`, pre-folded
            for t in range(1, len(gk)):
                nk = gk[t] + shift
                prev = work.get(nk)
                if prev is None:
                    nc = -c * gc[t] % p
                    if nc:
                        work[nk] = nc
                        heapq.heappush(heap, -nk)
                else:
                    nc = (prev - c * gc[t]) % p
                    if nc:
                        work[nk] = nc
                    else:
                        del work[nk]
        return out_k, out_c

    def nf(self, keys: list[int], coeffs: list[int]) -> tuple[list[int], list[int]]:
        """Full normal form of an external polynomial against the basis."""
        work = dict(zip(keys, coeffs))
        return self._nf_work(work)

    def spoly_nf(self, i: int, j: int, lcm_key: int) -> tuple[list[int], list[int]]:
        """Normal form of the S-polynomial of stored elements i and j."""
        p = self.p
        work: dict[int, int] = {}
        for idx, sign in ((i, 1), (j, -1)):
            gk = self.keys[idx]
            gc = self.coeffs[idx]
            shift = lcm_key - gk[0]
            for t in range(len(gk)):
                nk = gk[t] + shift
                nc = (work.get(nk, 0) + sign * gc[t]) % p
                if nc:
                    work[nk] = nc
                elif nk in work:
                    del work[nk]
        return self._nf_work(work)

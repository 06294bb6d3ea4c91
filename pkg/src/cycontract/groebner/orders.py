"""Monomial orders and the packed-key encoding shared by both reduction
kernels.

A monomial is packed into a single machine-word integer whose natural
ordering agrees with the chosen monomial order, so the kernels compare and
multiply monomials with plain integer arithmetic:

    graded orders:  key = deg << (W*n) | field_{n-1} ... field_0
    grevlex fields: field_s = CAP - e_s   (complemented, high slot = last var)
    grlex/lex:      field_s = e_{n-1-s}   (high slot = first variable)

Multiplication of monomials is key addition re-based at the key of the
monomial 1, division the reverse.  Exponent overflow is impossible as long as
total degrees stay at most CAP = 2^W - 1, which the kernels enforce.
"""

from __future__ import annotations

from dataclasses import dataclass


class BudgetExceededError(RuntimeError):
    """The reduction-step budget was exhausted."""


class DegreeCapError(RuntimeError):
    """A monomial exceeded the packed-representation degree cap."""


ORDER_KINDS = ("grevlex", "grlex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order {self.kind!r}; pick one of {ORDER_KINDS}")
        if self.permutation is not None:
            perm = tuple(self.permutation)
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{perm} is not a permutation")
            object.__setattr__(self, "permutation", perm)

    @property
    def graded(self) -> bool:
        return self.kind in ("grevlex", "grlex")


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class TermOrder:
    """Packs exponent vectors of a fixed ring into order-respecting keys."""

    def __init__(self, nvars: int, order: MonomialOrder = GREVLEX):
        if nvars < 1:
            raise ValueError("need at least one variable")
        perm = order.permutation
        if perm is not None and len(perm) != nvars:
            raise ValueError("permutation length differs from variable count")
        self.nvars = nvars
        self.order = order
        self.perm = perm if perm is not None else tuple(range(nvars))
        slots = nvars + 1 if order.graded else nvars
        self.width = min(16, 62 // slots)
        if self.width < 2:
            raise ValueError(f"too many variables ({nvars}) for packed monomials")
        self.mask = (1 << self.width) - 1
        self.cap = self.mask
        self.graded = order.graded
        self.complemented = order.kind == "grevlex"
        self.deg_shift = self.width * nvars if order.graded else 0
        if self.complemented:
            one = 0
            for s in range(nvars):
                one |= self.mask << (self.width * s)
            self.one = one
        else:
            self.one = 0

    # -- packing ------------------------------------------------------------
    def pack(self, exp) -> int:
        n, w, cap = self.nvars, self.width, self.cap
        tilde = [exp[self.perm[k]] for k in range(n)]
        deg = sum(tilde)
        if deg > cap:
            raise DegreeCapError(f"total degree {deg} exceeds the packed cap {cap}")
        if min(tilde) < 0:
            raise ValueError("negative exponent")
        key = 0
        if self.complemented:
            for s in range(n):
                key |= (cap - tilde[s]) << (w * s)
            key |= deg << self.deg_shift
        elif self.graded:
            for s in range(n):
                key |= tilde[n - 1 - s] << (w * s)
            key |= deg << self.deg_shift
        else:
            for s in range(n):
                key |= tilde[n - 1 - s] << (w * s)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        n, w, m = self.nvars, self.width, self.mask
        tilde = [0] * n
        if self.complemented:
            for s in range(n):
                tilde[s] = self.cap - ((key >> (w * s)) & m)
        else:
            for s in range(n):
                tilde[n - 1 - s] = (key >> (w * s)) & m
        exp = [0] * n
        for k in range(n):
            exp[self.perm[k]] = tilde[k]
        return tuple(exp)

    def degree(self, key: int) -> int:
        if self.graded:
            return key >> self.deg_shift
        return sum(self.unpack(key))

    # -- monomial arithmetic on keys -----------------------------------------
    def mul_keys(self, a: int, b: int) -> int:
        if self.graded and self.degree(a) + self.degree(b) > self.cap:
            raise DegreeCapError("monomial product exceeds the packed degree cap")
        if not self.graded:
            ea, eb = self.unpack(a), self.unpack(b)
            if any(x + y > self.cap for x, y in zip(ea, eb)):
                raise DegreeCapError("monomial product exceeds the packed exponent cap")
        return a + b - self.one

    def div_keys(self, a: int, b: int) -> int:
        """Key of a / b; caller guarantees divisibility."""
        return a - b + self.one

    def divides_exp(self, small: tuple[int, ...], big: tuple[int, ...]) -> bool:
        return all(x <= y for x, y in zip(small, big))

    def lcm_exp(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(max(x, y) for x, y in zip(a, b))

    def sort_terms(self, terms) -> list[tuple[int, int]]:
        """(key, coeff) pairs sorted descending in the order."""
        return sorted(terms, key=lambda t: t[0], reverse=True)

    def kernel_params(self) -> dict:
        """Parameters a reduction kernel needs to decode keys."""
        return {
            "nvars": self.nvars,
            "width": self.width,
            "mask": self.mask,
            "cap": self.cap,
            "one": self.one,
            "graded": self.graded,
            "complemented": self.complemented,
            "deg_shift": self.deg_shift,
        }

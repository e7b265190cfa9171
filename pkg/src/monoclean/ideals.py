"""Monomial ideals with exact arithmetic through minimal generating sets.

A :class:`MonomialIdeal` always stores the unique minimal generating set,
lexicographically sorted, so equal ideals compare equal and iterate in a
deterministic order.  The zero ideal has no generators; the unit ideal is
generated by the unit monomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .ring import Monomial, MonomialPrime, RingMismatchError


def minimal_generators(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal elements of a finite monomial set, lex-sorted.

    A divisor is lexicographically no larger than its multiples, so one
    ascending scan suffices.
    """
    out: list[Monomial] = []
    for m in sorted(set(monomials)):
        if not any(g.divides(m) for g in out):
            out.append(m)
    return tuple(out)


def exponent_box(bound: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All exponent vectors below ``bound`` componentwise, ascending lex."""
    return itertools.product(*(range(b + 1) for b in bound))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of K[x1..xn], canonically represented by G(I)."""

    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.gens)
        for g in gens:
            if g.nvars != self.nvars:
                raise RingMismatchError(
                    f"generator over {g.nvars} variables in a {self.nvars}-variable ideal"
                )
        object.__setattr__(self, "gens", minimal_generators(gens))

    @staticmethod
    def zero(nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, ())

    @staticmethod
    def unit(nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, (Monomial.unit(nvars),))

    @staticmethod
    def from_prime(p: MonomialPrime) -> "MonomialIdeal":
        if not p.variables:
            return MonomialIdeal.zero(p.nvars)
        return MonomialIdeal(p.nvars, tuple(Monomial.variable(p.nvars, i) for i in p.variables))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, m: Monomial) -> bool:
        if m.nvars != self.nvars:
            raise RingMismatchError(f"monomial over {m.nvars} variables, ideal over {self.nvars}")
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def _check(self, other: "MonomialIdeal") -> None:
        if other.nvars != self.nvars:
            raise RingMismatchError(f"ideals over {self.nvars} and {other.nvars} variables")

    def __add__(self, other: "MonomialIdeal | Monomial") -> "MonomialIdeal":
        if isinstance(other, Monomial):
            other = MonomialIdeal(self.nvars, (other,))
        self._check(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Exact intersection via pairwise lcms of the generating sets."""
        self._check(other)
        return MonomialIdeal(
            self.nvars, tuple(g.lcm(h) for g in self.gens for h in other.gens)
        )

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.intersect(other)

    def colon(self, f: Monomial) -> "MonomialIdeal":
        """The colon ideal I : f = (g / gcd(g, f) : g in G(I))."""
        if f.nvars != self.nvars:
            raise RingMismatchError(f"monomial over {f.nvars} variables, ideal over {self.nvars}")
        return MonomialIdeal(self.nvars, tuple(g.colon(f) for g in self.gens))

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """I : J, the intersection of I : h over the generators h of J."""
        self._check(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        result = self.colon(other.gens[0])
        for h in other.gens[1:]:
            result = result.intersect(self.colon(h))
        return result

    def saturate(self) -> "MonomialIdeal":
        """The saturation I : m^infinity with respect to (x1,..,xn)."""
        if self.is_unit():
            raise ValueError("saturation needs a proper ideal")
        if self.is_zero():
            return self
        m = MonomialIdeal.from_prime(MonomialPrime.maximal(self.nvars))
        current = self
        while True:
            nxt = current.colon_ideal(m)
            if nxt == current:
                return current
            current = nxt

    def lcm_exponents(self) -> tuple[int, ...]:
        """Componentwise exponents of lcm(G(I)); all zero for the zero ideal."""
        out = [0] * self.nvars
        for g in self.gens:
            for i, e in enumerate(g.exponents):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g.exponents)

    def is_prime(self) -> bool:
        """True iff generated by distinct variables (the zero ideal counts as
        the zero prime)."""
        return all(g.degree() == 1 for g in self.gens)

    def as_prime(self) -> MonomialPrime | None:
        if not self.is_prime():
            return None
        return MonomialPrime(self.nvars, tuple(g.support()[0] for g in self.gens))

    def standard_exponents(self, bound: tuple[int, ...]) -> list[tuple[int, ...]]:
        """Exponent vectors in [0, bound] whose monomials avoid the ideal."""
        return [a for a in exponent_box(bound) if not self.contains(Monomial(a))]

    def as_dict(self) -> dict:
        return {"nvars": self.nvars, "gens": [list(g.exponents) for g in self.gens]}

    @staticmethod
    def from_dict(data: dict) -> "MonomialIdeal":
        return MonomialIdeal(data["nvars"], tuple(Monomial(tuple(e)) for e in data["gens"]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ", ".join(str(g) for g in self.gens)

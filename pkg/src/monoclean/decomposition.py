"""Irredundant irreducible decomposition, associated and minimal primes.

An irreducible monomial ideal is generated by pure variable powers; every
monomial ideal is a finite intersection of such ideals, and the irredundant
intersection is unique.  Associated primes of S/I are read off as the
radicals of the irredundant components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import MonomialIdeal
from .ring import Monomial, MonomialPrime


@dataclass(frozen=True)
class IrreducibleComponent:
    """A pure-power ideal (x_{i_1}^{a_1}, .., x_{i_t}^{a_t}).

    ``powers`` maps 0-based variable indices to positive exponents, stored as
    a sorted tuple of pairs.  The radical is the monomial prime on the same
    variables.
    """

    nvars: int
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        powers = tuple(sorted((int(v), int(e)) for v, e in self.powers))
        object.__setattr__(self, "powers", powers)
        if not powers:
            raise ValueError("an irreducible component needs at least one variable")
        if any(e < 1 for _, e in powers):
            raise ValueError(f"pure-power exponents must be positive: {powers}")
        vs = [v for v, _ in powers]
        if len(set(vs)) != len(vs) or vs[0] < 0 or vs[-1] >= self.nvars:
            raise ValueError(f"bad variable indices in {powers}")

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.nvars, tuple(v for v, _ in self.powers))

    @property
    def height(self) -> int:
        return len(self.powers)

    def exponent_vector(self) -> tuple[int, ...]:
        out = [0] * self.nvars
        for v, e in self.powers:
            out[v] = e
        return tuple(out)

    def contains(self, m: Monomial) -> bool:
        return any(m.exponents[v] >= e for v, e in self.powers)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            self.nvars, tuple(Monomial.variable(self.nvars, v, e) for v, e in self.powers)
        )

    def as_dict(self) -> dict:
        return {
            "powers": {str(v + 1): e for v, e in self.powers},
            "radical": [v + 1 for v, _ in self.powers],
            "height": self.height,
        }

    @staticmethod
    def from_dict(data: dict, nvars: int) -> "IrreducibleComponent":
        return IrreducibleComponent(
            nvars, tuple((int(v) - 1, int(e)) for v, e in data["powers"].items())
        )

    def __str__(self) -> str:
        return str(self.to_ideal())


def _component_key(c: IrreducibleComponent) -> tuple:
    return (c.radical().variables, c.exponent_vector())


@dataclass(frozen=True)
class Decomposition:
    """An ordered intersection of irreducible components of an ideal."""

    ideal: MonomialIdeal
    components: tuple[IrreducibleComponent, ...]

    def intersection(self) -> MonomialIdeal:
        result = MonomialIdeal.unit(self.ideal.nvars)
        for c in self.components:
            result = result.intersect(c.to_ideal())
        return result

    def as_dict(self) -> dict:
        return {
            "ideal": self.ideal.as_dict(),
            "components": [c.as_dict() for c in self.components],
        }

    @staticmethod
    def from_dict(data: dict) -> "Decomposition":
        ideal = MonomialIdeal.from_dict(data["ideal"])
        comps = tuple(IrreducibleComponent.from_dict(c, ideal.nvars) for c in data["components"])
        return Decomposition(ideal, comps)


def _pure_power_component(ideal: MonomialIdeal) -> IrreducibleComponent:
    # After minimalization an all-pure-power ideal has one generator per variable.
    powers = []
    for g in ideal.gens:
        (v,) = g.support()
        powers.append((v, g.exponents[v]))
    return IrreducibleComponent(ideal.nvars, tuple(powers))


def irreducible_decomposition(ideal: MonomialIdeal) -> Decomposition:
    """The unique irredundant decomposition into irreducible monomial ideals.

    Splits any generator with two or more support variables into coprime
    parts (I = (I + (v)) cap (I + (w)) for g = v*w with gcd(v, w) = 1) and
    recurses; redundant components are then removed.  Components are sorted
    by radical, then by exponent vector.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("irreducible decomposition needs a proper nonzero ideal")
    found: set[IrreducibleComponent] = set()
    stack = [ideal]
    while stack:
        current = stack.pop()
        split = None
        for g in current.gens:
            supp = g.support()
            if len(supp) >= 2:
                v = Monomial.variable(current.nvars, supp[0], g.exponents[supp[0]])
                w = g.colon(v)
                split = (v, w)
                break
        if split is None:
            found.add(_pure_power_component(current))
        else:
            stack.append(current + split[0])
            stack.append(current + split[1])

    components = sorted(found, key=_component_key)
    # Drop components containing the intersection of the others, until stable.
    changed = True
    while changed:
        changed = False
        for i, c in enumerate(components):
            if len(components) == 1:
                break
            rest = MonomialIdeal.unit(ideal.nvars)
            for j, d in enumerate(components):
                if j != i:
                    rest = rest.intersect(d.to_ideal())
            if all(c.contains(g) for g in rest.gens):
                components.pop(i)
                changed = True
                break
    return Decomposition(ideal, tuple(components))


def associated_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Ass(S/I): the radicals of the irredundant irreducible components.

    Conventions beyond proper nonzero ideals: the zero ideal has the zero
    prime as its only associated prime; the unit ideal (zero module) has
    none.
    """
    if ideal.is_unit():
        return frozenset()
    if ideal.is_zero():
        return frozenset({MonomialPrime(ideal.nvars, ())})
    decomp = irreducible_decomposition(ideal)
    return frozenset(c.radical() for c in decomp.components)


def minimal_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Min(S/I): the inclusion-minimal associated primes."""
    ass = associated_primes(ideal)
    return frozenset(p for p in ass if not any(q.is_strict_subset(p) for q in ass))


def has_maximal_in_ass(ideal: MonomialIdeal) -> bool:
    """Whether the maximal ideal is associated to S/I, via saturation."""
    if ideal.is_unit():
        raise ValueError("S/I must be nonzero")
    return ideal.saturate() != ideal


def check_regular_quotient_primes(ideal: MonomialIdeal, u: Monomial) -> bool:
    """Verify the prime structure of S/(I, u) for a regular monomial u.

    For u regular on S/I the associated (resp. minimal) primes of S/(I, u)
    must be exactly the primes (p, x_k) with p associated (resp. minimal)
    for S/I and x_k dividing u, each of height one more than p.  Returns
    True when all three statements hold.
    """
    if u.is_unit():
        raise ValueError("u must be a non-unit monomial")
    ass = associated_primes(ideal)
    ass_vars = set().union(*(set(p.variables) for p in ass)) if ass else set()
    if set(u.support()) & ass_vars:
        raise ValueError(f"{u} is a zero divisor on the quotient")

    def extend(primes: frozenset[MonomialPrime]) -> frozenset[MonomialPrime]:
        return frozenset(p.with_variable(k) for p in primes for k in u.support())

    quotient = ideal + u
    expected_ass = extend(ass)
    expected_min = extend(minimal_primes(ideal))
    if associated_primes(quotient) != expected_ass:
        return False
    if minimal_primes(quotient) != expected_min:
        return False
    return all(
        p.with_variable(k).height == p.height + 1 for p in ass for k in u.support()
    )

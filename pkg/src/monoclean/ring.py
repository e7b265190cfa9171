"""Core objects: the ambient ring description, monomials, and monomial primes.

Every value here is immutable and hashable, and every operation is a pure
function of its inputs, so values can be shared freely between threads.
Exponents are plain Python integers, so there is no overflow to guard
against.
"""

from __future__ import annotations

from dataclasses import dataclass


class RingMismatchError(ValueError):
    """Operands belong to polynomial rings with different variable counts."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed one of the configured hard caps."""


@dataclass(frozen=True)
class RingContext:
    """The ambient polynomial ring K[x1..xn].

    ``names`` are display-only; they default to ``x1..xn``.  The
    ``characteristic`` tags the coefficient field and only influences
    homology ranks, never ideal arithmetic.
    """

    nvars: int
    names: tuple[str, ...] = ()
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        names = self.names or tuple(f"x{i}" for i in range(1, self.nvars + 1))
        object.__setattr__(self, "names", tuple(names))
        if len(self.names) != self.nvars:
            raise ValueError(f"{self.nvars} variables but {len(self.names)} names")
        if len(set(self.names)) != self.nvars:
            raise ValueError("variable names must be pairwise distinct")
        if self.characteristic < 0 or self.characteristic == 1:
            raise ValueError("field characteristic must be 0 or a prime")


def _same_ring(a: "Monomial", b: "Monomial") -> None:
    if len(a.exponents) != len(b.exponents):
        raise RingMismatchError(
            f"monomials over {len(a.exponents)} and {len(b.exponents)} variables"
        )


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x^a stored as its exponent vector a.

    The dataclass order (lexicographic on exponent vectors) is the canonical
    tie-break order used by every deterministic search in this package.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @staticmethod
    def unit(nvars: int) -> "Monomial":
        return Monomial((0,) * nvars)

    @staticmethod
    def variable(nvars: int, index: int, power: int = 1) -> "Monomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        if power < 1:
            raise ValueError("variable power must be positive")
        return Monomial(tuple(power if i == index else 0 for i in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def divides(self, other: "Monomial") -> bool:
        _same_ring(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: "Monomial") -> "Monomial":
        """The monomial quotient self : other, i.e. self / gcd(self, other)."""
        _same_ring(self, other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        if self.is_unit():
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """A monomial prime ideal (x_i : i in variables), with 0-based indices.

    The empty variable set stands for the zero prime of the domain S; it has
    height 0 and contains no monomial.
    """

    nvars: int
    variables: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(sorted(set(int(v) for v in self.variables)))
        object.__setattr__(self, "variables", vs)
        if vs and (vs[0] < 0 or vs[-1] >= self.nvars):
            raise ValueError(f"variable index out of range in {vs}")

    @staticmethod
    def maximal(nvars: int) -> "MonomialPrime":
        return MonomialPrime(nvars, tuple(range(nvars)))

    @property
    def height(self) -> int:
        return len(self.variables)

    @property
    def dim(self) -> int:
        """Krull dimension of S modulo this prime."""
        return self.nvars - len(self.variables)

    def is_maximal(self) -> bool:
        return len(self.variables) == self.nvars

    def contains(self, m: Monomial) -> bool:
        if m.nvars != self.nvars:
            raise RingMismatchError(f"monomial over {m.nvars} variables, prime over {self.nvars}")
        return any(m.exponents[i] for i in self.variables)

    def issubset(self, other: "MonomialPrime") -> bool:
        return set(self.variables) <= set(other.variables)

    def is_strict_subset(self, other: "MonomialPrime") -> bool:
        return set(self.variables) < set(other.variables)

    def with_variable(self, index: int) -> "MonomialPrime":
        return MonomialPrime(self.nvars, self.variables + (index,))

    def __str__(self) -> str:
        if not self.variables:
            return "(0)"
        return "(" + ",".join(f"x{i + 1}" for i in self.variables) + ")"

"""Stanley decompositions via interval partitions of the characteristic poset.

The poset consists of the exponent vectors below lcm(G(I)) whose monomials
avoid I.  An interval partition realizes a vector-space decomposition of
S/I into pieces x^a K[Z], where Z collects the variables whose coordinate
is capped at the top of the interval; the Stanley depth of the partition is
the smallest |Z|.  Since ideal membership is upward closed, an interval
[a, b] consists of standard monomials exactly when its top does, so
candidate intervals are just pairs of comparable poset points.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .homology import depth, regularity
from .ideals import MonomialIdeal, exponent_box
from .ring import Monomial, ResourceLimitError

DEFAULT_MAX_POSET = 5000


def poset_cap() -> int:
    """Hard cap on poset size; override with MONOCLEAN_MAX_POSET."""
    value = os.environ.get("MONOCLEAN_MAX_POSET")
    return int(value) if value else DEFAULT_MAX_POSET


@dataclass(frozen=True)
class CharacteristicPoset:
    """The finite grid of standard exponent vectors below the lcm cap."""

    nvars: int
    cap: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_ideal(ideal: MonomialIdeal) -> "CharacteristicPoset":
        if ideal.is_unit():
            raise ValueError("the zero module has no characteristic poset")
        cap = ideal.lcm_exponents()
        size = 1
        for c in cap:
            size *= c + 1
        limit = poset_cap()
        if size > limit:
            raise ResourceLimitError(f"characteristic poset would have {size} > {limit} points")
        points = tuple(a for a in exponent_box(cap) if not ideal.contains(Monomial(a)))
        return CharacteristicPoset(ideal.nvars, cap, points)


@dataclass(frozen=True)
class StanleyPartition:
    """An interval partition of the characteristic poset.

    Each interval (bottom, top) contributes the piece x^bottom K[Z] with
    Z = {x_j : top_j = cap_j}; sdepth is the minimum |Z| over intervals.
    """

    nvars: int
    cap: tuple[int, ...]
    intervals: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def capped_counts(self) -> list[int]:
        return [
            sum(1 for t, c in zip(top, self.cap) if t == c) for _, top in self.intervals
        ]

    @property
    def sdepth(self) -> int:
        return min(self.capped_counts())

    @property
    def max_bottom_degree(self) -> int:
        return max(sum(bottom) for bottom, _ in self.intervals)

    def pieces(self) -> list[tuple[Monomial, tuple[int, ...]]]:
        """The (generator, free-variable set) pairs of the decomposition."""
        return [
            (
                Monomial(bottom),
                tuple(j for j, (t, c) in enumerate(zip(top, self.cap)) if t == c),
            )
            for bottom, top in self.intervals
        ]

    def covers(self, poset: CharacteristicPoset) -> bool:
        """Exactness check: every poset point in exactly one interval."""
        seen: set[tuple[int, ...]] = set()
        count = 0
        for bottom, top in self.intervals:
            if any(b > t for b, t in zip(bottom, top)):
                return False
            members = [
                p
                for p in poset.points
                if all(x <= y <= z for x, y, z in zip(bottom, p, top))
            ]
            count += len(members)
            seen.update(members)
        return count == len(poset.points) and seen == set(poset.points)

    def as_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "cap": list(self.cap),
            "intervals": [[list(a), list(b)] for a, b in self.intervals],
        }

    @staticmethod
    def from_dict(data: dict) -> "StanleyPartition":
        return StanleyPartition(
            data["nvars"],
            tuple(data["cap"]),
            tuple((tuple(a), tuple(b)) for a, b in data["intervals"]),
        )


def _interval_partition(
    poset: CharacteristicPoset,
    min_capped: int = 0,
    max_bottom_degree: int | None = None,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]] | None:
    """First interval partition (lex order by bottom then top) such that
    every interval has at least ``min_capped`` capped coordinates at its top
    and every bottom has total degree at most ``max_bottom_degree``.

    Exact cover search: the lex-least uncovered point must be the bottom of
    its interval, so branching enumerates tops only.  Failed cover states
    are memoized as bitmasks.
    """
    points = poset.points
    n = len(points)
    if n == 0:
        return []
    index = {p: i for i, p in enumerate(points)}
    cap = poset.cap

    def capped(top: tuple[int, ...]) -> int:
        return sum(1 for t, c in zip(top, cap) if t == c)

    # Valid tops above each bottom, with the bitmask of covered points.
    tops_for: list[list[tuple[tuple[int, ...], int]]] = []
    for i, bottom in enumerate(points):
        options = []
        for top in points[i:]:
            if all(b <= t for b, t in zip(bottom, top)):
                if capped(top) < min_capped:
                    continue
                mask = 0
                for q in points[i:]:
                    if all(b <= x <= t for b, x, t in zip(bottom, q, top)):
                        mask |= 1 << index[q]
                options.append((top, mask))
        tops_for.append(options)

    full = (1 << n) - 1
    dead: set[int] = set()
    chosen: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def dfs(covered: int) -> bool:
        if covered == full:
            return True
        if covered in dead:
            return False
        # lowest uncovered index; points are lex sorted, so this is the
        # lex-least uncovered point
        low = ((covered + 1) & ~covered).bit_length() - 1
        bottom = points[low]
        if max_bottom_degree is not None and sum(bottom) > max_bottom_degree:
            dead.add(covered)
            return False
        for top, mask in tops_for[low]:
            if mask & covered:
                continue
            chosen.append((bottom, top))
            if dfs(covered | mask):
                return True
            chosen.pop()
        dead.add(covered)
        return False

    if dfs(0):
        return chosen
    return None


def sdepth(ideal: MonomialIdeal) -> tuple[int, StanleyPartition]:
    """Exact Stanley depth of S/I with an optimal witness partition.

    Tries target values downward from an upper bound (the smallest over
    points p of the best capped count among tops above p); the first
    feasible target is optimal, and its first partition in lex order is the
    witness.
    """
    if ideal.is_unit():
        raise ValueError("the zero module has no Stanley depth")
    poset = CharacteristicPoset.from_ideal(ideal)
    cap = poset.cap

    def capped(top: tuple[int, ...]) -> int:
        return sum(1 for t, c in zip(top, cap) if t == c)

    upper = ideal.nvars
    for p in poset.points:
        best = max(
            capped(q)
            for q in poset.points
            if all(x <= y for x, y in zip(p, q))
        )
        upper = min(upper, best)
    for target in range(upper, -1, -1):
        intervals = _interval_partition(poset, min_capped=target)
        if intervals is not None:
            return target, StanleyPartition(ideal.nvars, cap, tuple(intervals))
    raise AssertionError("singleton partition is always feasible")


def min_cover_bottom_degree(ideal: MonomialIdeal) -> tuple[int, StanleyPartition]:
    """Smallest achievable maximum generator degree over interval partitions,
    with a witness."""
    if ideal.is_unit():
        raise ValueError("the zero module has no Stanley decomposition")
    poset = CharacteristicPoset.from_ideal(ideal)
    top_degree = max((sum(p) for p in poset.points), default=0)
    for target in range(0, top_degree + 1):
        intervals = _interval_partition(poset, max_bottom_degree=target)
        if intervals is not None:
            return target, StanleyPartition(ideal.nvars, poset.cap, tuple(intervals))
    raise AssertionError("singleton partition is always feasible")


def stanley_conjecture_check(ideal: MonomialIdeal, characteristic: int = 0) -> bool:
    """Whether depth S/I <= sdepth S/I."""
    if ideal.is_unit():
        raise ValueError("S/I must be nonzero")
    if ideal.is_zero():
        return True
    return depth(ideal, characteristic) <= sdepth(ideal)[0]


def h_regularity_check(ideal: MonomialIdeal, characteristic: int = 0) -> bool:
    """Whether some Stanley decomposition has all generator degrees at most
    the regularity of S/I."""
    if ideal.is_unit():
        raise ValueError("S/I must be nonzero")
    if ideal.is_zero():
        return True
    best, _ = min_cover_bottom_degree(ideal)
    return best <= regularity(ideal, characteristic)

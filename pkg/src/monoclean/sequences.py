"""Regular, filter-regular, and d-sequence tests, plus generator-set
structure tests (gcd condition, forest type).

A monomial is regular on S/I iff it avoids every associated prime, and
filter-regular iff it avoids every associated prime except possibly the
maximal ideal; both tests reduce to support checks against Ass(S/I).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .decomposition import associated_primes
from .ideals import MonomialIdeal
from .ring import Monomial, ResourceLimitError

#: Largest generating set is_forest_type will scan (2^count subsets).
MAX_FOREST_GENERATORS = 15

#: Largest sequence length for the exists-order permutation variants.
MAX_PERMUTATION_LENGTH = 8


def _require_non_unit(us: Iterable[Monomial]) -> None:
    for u in us:
        if u.is_unit():
            raise ValueError("sequences must consist of non-unit monomials")


def is_regular_element(ideal: MonomialIdeal, u: Monomial) -> bool:
    """Whether u is a non zero-divisor on S/I.

    The zero divisors on S/I are the union of the associated primes, so this
    is a support check.  On the zero module (unit ideal) everything is
    regular.
    """
    _require_non_unit([u])
    return all(not p.contains(u) for p in associated_primes(ideal))


def is_regular_sequence(ideal: MonomialIdeal, us: Sequence[Monomial]) -> bool:
    _require_non_unit(us)
    if not us:
        raise ValueError("empty sequence")
    current = ideal
    for u in us:
        if not current.is_proper() or not is_regular_element(current, u):
            return False
        current = current + u
    return True


def is_filter_regular_element(ideal: MonomialIdeal, u: Monomial) -> bool:
    """Whether u avoids every associated prime of S/I except possibly the
    maximal ideal."""
    _require_non_unit([u])
    return all(
        not p.contains(u) for p in associated_primes(ideal) if not p.is_maximal()
    )


def is_filter_regular_sequence(ideal: MonomialIdeal, us: Sequence[Monomial]) -> bool:
    _require_non_unit(us)
    if not us:
        raise ValueError("empty sequence")
    current = ideal
    for u in us:
        if not current.is_proper() or not is_filter_regular_element(current, u):
            return False
        current = current + u
    return True


def filter_regular_saturation_check(ideal: MonomialIdeal, u: Monomial) -> bool:
    """Filter-regularity on S/I must agree with regularity on the saturated
    quotient; returns True when the two verdicts match (expected always)."""
    return is_filter_regular_element(ideal, u) == is_regular_element(ideal.saturate(), u)


def monomials_by_degree(
    nvars: int, max_degree: int, include_unit: bool = False
) -> list[Monomial]:
    """All monomials of total degree <= max_degree, sorted by degree then lex."""
    out = [
        Monomial(e)
        for e in itertools.product(range(max_degree + 1), repeat=nvars)
        if sum(e) <= max_degree
    ]
    if not include_unit:
        out = [m for m in out if not m.is_unit()]
    out.sort(key=lambda m: (m.degree(), m.exponents))
    return out


def regular_monomials(ideal: MonomialIdeal, max_degree: int = 3) -> list[Monomial]:
    return [m for m in monomials_by_degree(ideal.nvars, max_degree) if is_regular_element(ideal, m)]


def filter_regular_monomials(ideal: MonomialIdeal, max_degree: int = 3) -> list[Monomial]:
    return [
        m for m in monomials_by_degree(ideal.nvars, max_degree) if is_filter_regular_element(ideal, m)
    ]


def find_filter_regular_sequence(
    ideal: MonomialIdeal, length: int, max_degree: int = 3
) -> tuple[Monomial, ...] | None:
    """First filter-regular sequence of the requested length, in
    degree-then-lex candidate order, or None if the cap exhausts."""
    if length < 1:
        raise ValueError("sequence length must be positive")
    candidates = monomials_by_degree(ideal.nvars, max_degree)
    picked: list[Monomial] = []

    def extend(current: MonomialIdeal) -> bool:
        if len(picked) == length:
            return True
        for u in candidates:
            if is_filter_regular_element(current, u):
                picked.append(u)
                if extend(current + u):
                    return True
                picked.pop()
        return False

    if extend(ideal):
        return tuple(picked)
    return None


def is_d_sequence_on(ideal: MonomialIdeal, us: Sequence[Monomial]) -> bool:
    """d-sequence test for monomials u_1..u_t on S/I.

    Requires (a) the u_i minimally generate (u_1..u_t), which for monomials
    means no u_i divides another, and (b) the colon equalities
    (I + (u_1..u_i)) : u_{i+1} u_k = (I + (u_1..u_i)) : u_k for all
    0 <= i < t and k >= i+1.
    """
    _require_non_unit(us)
    if not us:
        raise ValueError("empty sequence")
    if not ideal.is_proper():
        raise ValueError("d-sequences are tested on proper ideals")
    for a, b in itertools.permutations(range(len(us)), 2):
        if us[a].divides(us[b]):
            return False
    for i in range(len(us)):
        base = ideal
        for u in us[:i]:
            base = base + u
        for k in range(i, len(us)):
            if base.colon(us[i] * us[k]) != base.colon(us[k]):
                return False
    return True


def exists_d_sequence_order(
    ideal: MonomialIdeal, monomials: Sequence[Monomial]
) -> tuple[Monomial, ...] | None:
    """First permutation (in canonical order) that is a d-sequence on S/I."""
    if len(monomials) > MAX_PERMUTATION_LENGTH:
        raise ResourceLimitError(
            f"permutation scan capped at {MAX_PERMUTATION_LENGTH} monomials"
        )
    for perm in itertools.permutations(sorted(monomials)):
        if is_d_sequence_on(ideal, perm):
            return perm
    return None


def gcd_condition(us: Sequence[Monomial]) -> bool:
    """Order-sensitive gcd domination test on a monomial sequence.

    Requires no divisibility between distinct entries, and
    gcd(u_i, u_j) | u_k for all i < j < k.
    """
    if not us:
        raise ValueError("empty sequence")
    for a, b in itertools.permutations(range(len(us)), 2):
        if us[a].divides(us[b]):
            return False
    for i, j, k in itertools.combinations(range(len(us)), 3):
        if not us[i].gcd(us[j]).divides(us[k]):
            return False
    return True


def exists_gcd_order(us: Sequence[Monomial]) -> tuple[Monomial, ...] | None:
    """First ordering of the monomials satisfying the gcd condition."""
    if len(us) > MAX_PERMUTATION_LENGTH:
        raise ResourceLimitError(
            f"permutation scan capped at {MAX_PERMUTATION_LENGTH} monomials"
        )
    # Divisibility-freeness is order-independent; test it once.
    items = sorted(us)
    for a, b in itertools.permutations(range(len(items)), 2):
        if items[a].divides(items[b]):
            return None
    for perm in itertools.permutations(items):
        if all(
            perm[i].gcd(perm[j]).divides(perm[k])
            for i, j, k in itertools.combinations(range(len(perm)), 3)
        ):
            return perm
    return None


def is_forest_type(ideal: MonomialIdeal) -> bool:
    """Whether every non-empty subset of G(I) has a leaf.

    A leaf of a subset A is an element u_t that is alone in A or has a
    branch u_j in A with gcd(u_t, u_i) | gcd(u_t, u_j) for every other
    u_i in A.  The scan is exponential in |G(I)| and hard-capped.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("forest type needs a proper nonzero ideal")
    gens = ideal.gens
    count = len(gens)
    if count > MAX_FOREST_GENERATORS:
        raise ResourceLimitError(
            f"forest-type scan capped at {MAX_FOREST_GENERATORS} generators"
        )
    pair_gcd = [[gens[s].gcd(gens[t]) for t in range(count)] for s in range(count)]
    for size in range(2, count + 1):
        for subset in itertools.combinations(range(count), size):
            if not _has_leaf(subset, pair_gcd):
                return False
    return True


def _has_leaf(subset: tuple[int, ...], pair_gcd) -> bool:
    for t in subset:
        row = pair_gcd[t]
        for j in subset:
            if j == t:
                continue
            branch = row[j]
            if all(row[i].divides(branch) for i in subset if i != t):
                return True
    return False

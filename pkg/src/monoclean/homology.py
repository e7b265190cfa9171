"""Multigraded Betti numbers, depth, projective dimension, and regularity.

Betti numbers of S/I are computed degreewise: for a multidegree a in the
lcm lattice of G(I), the simplicial complex of squarefree vectors s with
x^a / x_s in I has reduced homology whose ranks give b_{i,a}.  Ranks are
exact: rational elimination in characteristic 0, modular elimination in
prime characteristic.  Depth is n minus projective dimension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .ideals import MonomialIdeal
from .ring import Monomial, ResourceLimitError

MAX_GENERATORS = 15
MAX_MULTIDEGREES = 20000


def matrix_rank(rows: list[list[int]], characteristic: int = 0) -> int:
    """Rank of an integer matrix over Q (characteristic 0) or GF(p)."""
    if not rows or not rows[0]:
        return 0
    if characteristic == 0:
        m = [[Fraction(x) for x in row] for row in rows]
    else:
        p = characteristic
        m = [[x % p for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = (
            1 / m[rank][col]
            if characteristic == 0
            else pow(int(m[rank][col]), -1, characteristic)
        )
        for r in range(rank + 1, nrows):
            if not m[r][col]:
                continue
            factor = m[r][col] * inv
            if characteristic == 0:
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
            else:
                m[r] = [(a - factor * b) % characteristic for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def reduced_homology_dims(faces: set[tuple[int, ...]], characteristic: int = 0) -> dict[int, int]:
    """Dimensions of the reduced simplicial homology of a complex.

    ``faces`` must be closed under subsets and contain the empty face when
    non-void.  Keys of the result are homological degrees i >= -1 with
    nonzero homology.
    """
    if not faces:
        return {}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        rows = []
        lower = index.get(d - 1, {})
        for f in by_dim.get(d, []):
            row = [0] * len(lower)
            for k in range(len(f)):
                sub = f[:k] + f[k + 1 :]
                row[lower[sub]] = (-1) ** k
            rows.append(row)
        ranks[d] = matrix_rank(rows, characteristic)
    out = {}
    for d in range(-1, top + 1):
        dim = len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if dim:
            out[d] = dim
    return out


def lcm_lattice(ideal: MonomialIdeal) -> set[tuple[int, ...]]:
    """Exponent vectors of lcms of non-empty generator subsets."""
    acc: set[tuple[int, ...]] = set()
    frontier = {Monomial.unit(ideal.nvars)}
    for g in ideal.gens:
        frontier = frontier | {m.lcm(g) for m in frontier}
        if len(frontier) > MAX_MULTIDEGREES:
            raise ResourceLimitError(f"lcm lattice exceeds {MAX_MULTIDEGREES} multidegrees")
    acc = {m.exponents for m in frontier if not m.is_unit()}
    return acc


def koszul_faces(ideal: MonomialIdeal, degree: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Faces s of the upper Koszul complex at a multidegree: subsets of the
    support whose removal from x^degree stays inside the ideal."""
    supp = [i for i, e in enumerate(degree) if e]
    faces = set()
    for size in range(len(supp) + 1):
        for s in itertools.combinations(supp, size):
            reduced = list(degree)
            for i in s:
                reduced[i] -= 1
            if ideal.contains(Monomial(tuple(reduced))):
                faces.add(s)
    return faces


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers b_{i,a} of a quotient S/I."""

    nvars: int
    characteristic: int
    entries: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def betti(self, i: int, degree: tuple[int, ...]) -> int:
        return self.entries.get((i, tuple(degree)), 0)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def regularity(self) -> int:
        return max(sum(a) - i for i, a in self.entries)

    def by_total_degree(self) -> dict[tuple[int, int], int]:
        """Aggregated table (homological index, total degree) -> rank."""
        out: dict[tuple[int, int], int] = {}
        for (i, a), b in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + b
        return out

    def as_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "characteristic": self.characteristic,
            "entries": [
                {"i": i, "degree": list(a), "betti": b}
                for (i, a), b in sorted(self.entries.items())
            ],
        }

    @staticmethod
    def from_dict(data: dict) -> "BettiTable":
        entries = {
            (e["i"], tuple(e["degree"])): e["betti"] for e in data["entries"]
        }
        return BettiTable(data["nvars"], data["characteristic"], entries)


def betti_table(ideal: MonomialIdeal, characteristic: int = 0) -> BettiTable:
    """All nonzero b_{i,a}(S/I) over the configured coefficient field."""
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("Betti tables are computed for proper nonzero ideals")
    if len(ideal.gens) > MAX_GENERATORS:
        raise ResourceLimitError(f"Betti computation capped at {MAX_GENERATORS} generators")
    entries: dict[tuple[int, tuple[int, ...]], int] = {
        (0, Monomial.unit(ideal.nvars).exponents): 1
    }
    for degree in lcm_lattice(ideal):
        homology = reduced_homology_dims(koszul_faces(ideal, degree), characteristic)
        for hdeg, dim in homology.items():
            entries[(hdeg + 2, degree)] = dim
    return BettiTable(ideal.nvars, characteristic, entries)


def projective_dimension(ideal: MonomialIdeal, characteristic: int = 0) -> int:
    if ideal.is_zero():
        return 0
    return betti_table(ideal, characteristic).projective_dimension()


def depth(ideal: MonomialIdeal, characteristic: int = 0) -> int:
    """depth of S/I, as nvars minus the projective dimension."""
    if ideal.is_unit():
        raise ValueError("the zero module has no depth")
    return ideal.nvars - projective_dimension(ideal, characteristic)


def regularity(ideal: MonomialIdeal, characteristic: int = 0) -> int:
    if ideal.is_zero():
        return 0
    return betti_table(ideal, characteristic).regularity()


def hilbert_value_from_betti(table: BettiTable, degree: tuple[int, ...]) -> int:
    """Multigraded Hilbert function of S/I at a degree, via the alternating
    Betti sum over entries dividing the degree."""
    total = 0
    for (i, a), b in table.entries.items():
        if all(x <= y for x, y in zip(a, degree)):
            total += (-1) ** i * b
    return total


def hilbert_value_direct(ideal: MonomialIdeal, degree: tuple[int, ...]) -> int:
    """Multigraded Hilbert function of S/I at a degree, by membership."""
    return 0 if ideal.contains(Monomial(tuple(degree))) else 1

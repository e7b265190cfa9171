"""Deterministic corpus generation for the verification harnesses.

Streams are driven by PCG64 with per-trial substreams seeded from
(seed, trial index) through numpy's SeedSequence, so trials can run in any
order or in parallel without perturbing each other.  The generator family
is pinned: changing it silently would invalidate recorded reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .ideals import MonomialIdeal
from .ring import Monomial


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters of a reproducible ideal stream."""

    seed: int
    nvars: int
    max_deg: int
    gen_count: int
    trials: int
    squarefree: bool = False

    def __post_init__(self) -> None:
        if self.nvars < 1 or self.max_deg < 1 or self.gen_count < 1 or self.trials < 0:
            raise ValueError("corpus spec fields must be positive (trials may be 0)")
        if self.squarefree and self.gen_count > 2**self.nvars - 1:
            raise ValueError(
                f"cannot draw {self.gen_count} distinct squarefree generators on {self.nvars} variables"
            )

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "nvars": self.nvars,
            "max_deg": self.max_deg,
            "gen_count": self.gen_count,
            "trials": self.trials,
            "squarefree": self.squarefree,
        }

    @staticmethod
    def from_dict(data: dict) -> "CorpusSpec":
        return CorpusSpec(
            seed=data["seed"],
            nvars=data["nvars"],
            max_deg=data["max_deg"],
            gen_count=data["gen_count"],
            trials=data["trials"],
            squarefree=data.get("squarefree", False),
        )


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """The pinned per-trial substream: PCG64(SeedSequence((seed, trial)))."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, trial))))


def draw_monomial(
    rng: np.random.Generator, nvars: int, max_deg: int, squarefree: bool = False
) -> Monomial:
    """A uniformly random non-unit monomial with per-variable exponents
    bounded by max_deg (or 1 when squarefree)."""
    high = 2 if squarefree else max_deg + 1
    while True:
        exps = rng.integers(0, high, size=nvars)
        if exps.any():
            return Monomial(tuple(int(e) for e in exps))


def draw_sequence(
    rng: np.random.Generator, nvars: int, max_deg: int, length: int, squarefree: bool = False
) -> tuple[Monomial, ...]:
    return tuple(draw_monomial(rng, nvars, max_deg, squarefree) for _ in range(length))


def draw_ideal(rng: np.random.Generator, spec: CorpusSpec) -> MonomialIdeal:
    gens = draw_sequence(rng, spec.nvars, spec.max_deg, spec.gen_count, spec.squarefree)
    return MonomialIdeal(spec.nvars, gens)


def gen_ideals(spec: CorpusSpec) -> Iterator[MonomialIdeal]:
    """The deterministic ideal stream of a corpus spec.

    Emitted ideals are proper (generators are non-units), nonzero, and
    minimalized; the same spec always yields the same stream.
    """
    for trial in range(spec.trials):
        yield draw_ideal(trial_rng(spec.seed, trial), spec)


def all_ideals_two_vars(max_exp: int) -> list[MonomialIdeal]:
    """Every monomial ideal of K[x1,x2] with generator exponents <= max_exp.

    Ideals correspond to divisibility antichains in the (max_exp+1)^2 grid;
    the list includes the zero ideal (empty antichain) and the unit ideal.
    """
    grid = list(itertools.product(range(max_exp + 1), repeat=2))
    ideals = []
    for size in range(0, max_exp + 2):
        for subset in itertools.combinations(grid, size):
            ms = [Monomial(e) for e in subset]
            if all(
                not a.divides(b) for a, b in itertools.permutations(ms, 2)
            ):
                ideals.append(MonomialIdeal(2, tuple(ms)))
    return ideals

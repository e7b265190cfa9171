"""Batch verification harnesses: named equivalence and implication checks
over generated corpora, with replayable counterexample reports.

Each check id names one falsifiable statement about monomial quotients:

* ``thm26``  — clean / pretty clean / almost clean verdicts are unchanged by
  quotienting with a regular monomial (both directions), and the quotient's
  associated/minimal primes follow the (p, x_k) extension formulas.
* ``thm33``  — the pretty-clean verdict is unchanged by quotienting with a
  filter-regular sequence (both directions), and maximal-ideal membership
  in Ass is preserved forward.
* ``lem35``  — the forward Ass-preservation statement alone.
* ``thm36``  — the depth <= sdepth verdict is unchanged by quotienting with
  a filter-regular monomial.
* ``lem43``  — gcd condition implies forest type implies pretty clean.
* ``prop44`` — a d-sequence generating set forces pretty cleanness.
* ``cor27``  — quotients by regular monomial sequences are clean.
* ``cor34``  — quotients by filter-regular monomial sequences are pretty clean.
* ``cor47``  — ideals generated by d-sequences or filter-regular sequences
  have depth = sdepth = min dimension over associated primes.
* ``oracle-agreement`` — the ordering-criterion decider and the filtration
  search return the same verdict in every mode.

Every trial draws its inputs from the per-trial substream, skips (rather
than fails) when no witness exists under the degree cap, and records full
counterexample rows so any failure replays from the report alone.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .cleanness import CleannessMode, decide, find_filtration, validate_filtration
from .corpus import CorpusSpec, all_ideals_two_vars, draw_ideal, draw_sequence, trial_rng
from .decomposition import associated_primes, check_regular_quotient_primes
from .homology import depth
from .ideals import MonomialIdeal
from .parsing import format_ideal, format_sequence
from .ring import Monomial, MonomialPrime
from .sequences import (
    exists_d_sequence_order,
    filter_regular_monomials,
    gcd_condition,
    is_d_sequence_on,
    is_filter_regular_sequence,
    is_forest_type,
    is_regular_sequence,
    regular_monomials,
)
from .stanley import sdepth, stanley_conjecture_check

REPORT_SCHEMA = 1

#: Default total-degree cap when searching for regular / filter-regular witnesses.
WITNESS_DEGREE_CAP = 3


@dataclass
class VerificationReport:
    """Outcome of one harness run; counterexamples carry replayable inputs."""

    theorem: str
    spec: CorpusSpec
    trials: int = 0
    passes: int = 0
    failures: int = 0
    skips: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "theorem": self.theorem,
            "spec": self.spec.as_dict(),
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "skips": self.skips,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    @staticmethod
    def from_dict(data: dict) -> "VerificationReport":
        return VerificationReport(
            theorem=data["theorem"],
            spec=CorpusSpec.from_dict(data["spec"]),
            trials=data["trials"],
            passes=data["passes"],
            failures=data["failures"],
            skips=data["skips"],
            counterexamples=list(data["counterexamples"]),
            wall_time=data["wall_time"],
        )

    @staticmethod
    def from_json(text: str) -> "VerificationReport":
        return VerificationReport.from_dict(json.loads(text))


def _pick(rng, items):
    return items[int(rng.integers(0, len(items)))]


def _draw_filter_regular_sequence(rng, ideal, length, max_degree=WITNESS_DEGREE_CAP):
    """A random filter-regular sequence built stepwise, or None if some step
    has no candidate under the degree cap."""
    picked = []
    current = ideal
    for _ in range(length):
        candidates = filter_regular_monomials(current, max_degree)
        if not candidates:
            return None
        u = _pick(rng, candidates)
        picked.append(u)
        current = current + u
    return tuple(picked)


def _check_regular_quotient(trial: int, rng, spec: CorpusSpec):
    ideal = draw_ideal(rng, spec)
    candidates = regular_monomials(ideal, WITNESS_DEGREE_CAP)
    if not candidates:
        return "skip", None
    u = _pick(rng, candidates)
    quotient = ideal + u
    verdicts = {}
    agree = True
    for mode in CleannessMode:
        before = decide(ideal, mode)[0]
        after = decide(quotient, mode)[0]
        verdicts[mode.value] = [before, after]
        agree = agree and before == after
    primes_ok = check_regular_quotient_primes(ideal, u)
    if agree and primes_ok:
        return "pass", None
    return "fail", {
        "ideal": format_ideal(ideal),
        "witness": str(u),
        "verdicts": verdicts,
        "prime_formulas": primes_ok,
    }


def _check_filter_regular_quotient(trial: int, rng, spec: CorpusSpec):
    ideal = draw_ideal(rng, spec)
    length = 1 + trial % 2
    us = _draw_filter_regular_sequence(rng, ideal, length)
    if us is None:
        return "skip", None
    quotient = ideal
    for u in us:
        quotient = quotient + u
    before = decide(ideal, CleannessMode.PRETTY_CLEAN)[0]
    after = decide(quotient, CleannessMode.PRETTY_CLEAN)[0]
    m = MonomialPrime.maximal(spec.nvars)
    m_before = m in associated_primes(ideal)
    m_after = m in associated_primes(quotient)
    ass_ok = (not m_before) or m_after
    if before == after and ass_ok:
        return "pass", None
    return "fail", {
        "ideal": format_ideal(ideal),
        "witness": format_sequence(us),
        "pretty": [before, after],
        "maximal_in_ass": [m_before, m_after],
    }


def _check_maximal_ass_preserved(trial: int, rng, spec: CorpusSpec):
    ideal = draw_ideal(rng, spec)
    length = 1 + trial % 2
    us = _draw_filter_regular_sequence(rng, ideal, length)
    if us is None:
        return "skip", None
    m = MonomialPrime.maximal(spec.nvars)
    if m not in associated_primes(ideal):
        return "skip", None
    quotient = ideal
    for u in us:
        quotient = quotient + u
    if m in associated_primes(quotient):
        return "pass", None
    return "fail", {"ideal": format_ideal(ideal), "witness": format_sequence(us)}


def _check_stanley_transfer(trial: int, rng, spec: CorpusSpec):
    ideal = draw_ideal(rng, spec)
    us = _draw_filter_regular_sequence(rng, ideal, 1)
    if us is None:
        return "skip", None
    before = stanley_conjecture_check(ideal)
    after = stanley_conjecture_check(ideal + us[0])
    if before == after:
        return "pass", None
    return "fail", {
        "ideal": format_ideal(ideal),
        "witness": str(us[0]),
        "stanley": [before, after],
    }


def _check_gcd_forest_pretty(trial: int, rng, spec: CorpusSpec):
    us = draw_sequence(rng, spec.nvars, spec.max_deg, spec.gen_count, spec.squarefree)
    ideal = MonomialIdeal(spec.nvars, us)
    gcd_ok = gcd_condition(us)
    forest = is_forest_type(ideal)
    pretty = decide(ideal, CleannessMode.PRETTY_CLEAN)[0]
    if (gcd_ok and not forest) or (forest and not pretty):
        return "fail", {
            "sequence": format_sequence(us),
            "gcd_condition": gcd_ok,
            "forest_type": forest,
            "pretty": pretty,
        }
    return "pass", None


def _check_d_sequence_pretty(trial: int, rng, spec: CorpusSpec):
    ideal = draw_ideal(rng, spec)
    given = is_d_sequence_on(MonomialIdeal.zero(spec.nvars), ideal.gens)
    ordered = exists_d_sequence_order(MonomialIdeal.zero(spec.nvars), ideal.gens)
    if ordered is None:
        return "skip", None
    pretty = decide(ideal, CleannessMode.PRETTY_CLEAN)[0]
    if pretty:
        return "pass", None
    return "fail", {
        "ideal": format_ideal(ideal),
        "d_sequence_given_order": given,
        "d_sequence_order": format_sequence(ordered),
        "pretty": pretty,
    }


def _check_regular_quotient_clean(trial: int, rng, spec: CorpusSpec):
    # Constructive regular sequence: supports drawn pairwise disjoint.
    length = 1 + int(rng.integers(0, min(3, spec.nvars)))
    variables = [int(v) for v in rng.permutation(spec.nvars)]
    groups = [variables[i::length] for i in range(length)]
    us = []
    for group in groups:
        exps = [0] * spec.nvars
        for v in group:
            if int(rng.integers(0, 2)):
                exps[v] = 1 + int(rng.integers(0, spec.max_deg))
        if not any(exps):
            exps[group[0]] = 1 + int(rng.integers(0, spec.max_deg))
        us.append(Monomial(tuple(exps)))
    us = tuple(us)
    if not is_regular_sequence(MonomialIdeal.zero(spec.nvars), us):
        return "skip", None
    verdict = decide(MonomialIdeal(spec.nvars, us), CleannessMode.CLEAN)[0]
    if verdict:
        return "pass", None
    return "fail", {"sequence": format_sequence(us), "clean": verdict}


def _check_filter_regular_quotient_pretty(trial: int, rng, spec: CorpusSpec):
    length = 1 + int(rng.integers(0, 3))
    us = draw_sequence(rng, spec.nvars, spec.max_deg, length, spec.squarefree)
    if not is_filter_regular_sequence(MonomialIdeal.zero(spec.nvars), us):
        return "skip", None
    verdict = decide(MonomialIdeal(spec.nvars, us), CleannessMode.PRETTY_CLEAN)[0]
    if verdict:
        return "pass", None
    return "fail", {"sequence": format_sequence(us), "pretty": verdict}


def _check_depth_formulas(trial: int, rng, spec: CorpusSpec):
    length = 1 + int(rng.integers(0, 2))
    us = draw_sequence(rng, spec.nvars, spec.max_deg, length, spec.squarefree)
    zero = MonomialIdeal.zero(spec.nvars)
    filter_regular = is_filter_regular_sequence(zero, us)
    d_sequence = (
        len(set(us)) == len(us) and exists_d_sequence_order(zero, us) is not None
    )
    if not (filter_regular or d_sequence):
        return "skip", None
    ideal = MonomialIdeal(spec.nvars, us)
    dep = depth(ideal)
    sdep = sdepth(ideal)[0]
    min_dim = min(p.dim for p in associated_primes(ideal))
    if dep == sdep == min_dim:
        return "pass", None
    return "fail", {
        "sequence": format_sequence(us),
        "filter_regular": filter_regular,
        "d_sequence": d_sequence,
        "depth": dep,
        "sdepth": sdep,
        "min_ass_dim": min_dim,
    }


def _oracle_row(ideal: MonomialIdeal) -> dict | None:
    """Compare the two deciders on one ideal; None means agreement."""
    verdicts = {}
    agree = True
    for mode in CleannessMode:
        by_ordering = decide(ideal, mode)[0]
        filtration = find_filtration(ideal, mode)
        by_filtration = filtration is not None
        if by_filtration and not validate_filtration(filtration, ideal, mode):
            by_filtration = None  # invalid certificate: always a failure
        verdicts[mode.value] = [by_ordering, by_filtration]
        agree = agree and by_ordering == by_filtration
    if agree:
        return None
    return {"ideal": format_ideal(ideal), "verdicts": verdicts}


def _check_oracle_agreement(trial: int, rng, spec: CorpusSpec):
    row = _oracle_row(draw_ideal(rng, spec))
    return ("pass", None) if row is None else ("fail", row)


CHECKS = {
    "thm26": _check_regular_quotient,
    "thm33": _check_filter_regular_quotient,
    "lem35": _check_maximal_ass_preserved,
    "thm36": _check_stanley_transfer,
    "lem43": _check_gcd_forest_pretty,
    "prop44": _check_d_sequence_pretty,
    "cor27": _check_regular_quotient_clean,
    "cor34": _check_filter_regular_quotient_pretty,
    "cor47": _check_depth_formulas,
    "oracle-agreement": _check_oracle_agreement,
}


def verify(theorem: str, spec: CorpusSpec) -> VerificationReport:
    """Run one named check over the corpus; never aborts on a counterexample."""
    if theorem not in CHECKS:
        raise ValueError(f"unknown check id {theorem!r}; known: {', '.join(sorted(CHECKS))}")
    check = CHECKS[theorem]
    report = VerificationReport(theorem=theorem, spec=spec)
    start = time.perf_counter()
    for trial in range(spec.trials):
        status, detail = check(trial, trial_rng(spec.seed, trial), spec)
        report.trials += 1
        if status == "pass":
            report.passes += 1
        elif status == "skip":
            report.skips += 1
        else:
            report.failures += 1
            detail = dict(detail or {})
            detail["trial"] = trial
            report.counterexamples.append(detail)
    report.wall_time = time.perf_counter() - start
    return report


def verify_oracle_exhaustive(max_exp: int = 3) -> VerificationReport:
    """Oracle agreement over every proper monomial ideal of K[x1,x2] with
    generator exponents <= max_exp (the zero ideal included)."""
    spec = CorpusSpec(seed=0, nvars=2, max_deg=max_exp, gen_count=1, trials=0)
    report = VerificationReport(theorem="oracle-agreement", spec=spec)
    start = time.perf_counter()
    for ideal in all_ideals_two_vars(max_exp):
        if ideal.is_unit():
            continue
        report.trials += 1
        row = _oracle_row(ideal)
        if row is None:
            report.passes += 1
        else:
            row["trial"] = report.trials - 1
            report.failures += 1
            report.counterexamples.append(row)
    report.wall_time = time.perf_counter() - start
    return report

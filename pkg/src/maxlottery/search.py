"""Profile generation, counterexample search and audit campaigns.

A search walks a *plan*: an indexed sequence of profiles that starts with
every anonymous profile of 1, 2, ... voters for as many sizes as fit in the
budget, and is filled up with seeded random profiles. The plan is a pure
function of the budget, so the first violating index, and hence the
reported witness, is the same whether the plan is scanned serially or in
parallel chunks.
"""

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import numpy as np

from .algebra import (
    Profile,
    SSBMatrix,
    all_strict_orders,
    all_weak_orders,
)
from .errors import UnknownCampaign
from .mechanisms import get_mechanism
from .properties import (
    AbstentionWitness,
    Outcomes,
    check_cancellation_all,
    check_homogeneity,
    check_ordinal_participation,
    check_participation,
    get_property,
    run_property,
    verify_witness,
)
from .reports import ReportRecord, to_plain
from .solver import verify_lemma1

DOMAINS = ("strict", "weak")


@dataclass(frozen=True)
class SearchBudget:
    alternatives: int
    max_voters: int
    domain: str = "strict"
    max_profiles: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.alternatives < 1 or self.max_voters < 1 or self.max_profiles < 1:
            raise ValueError("alternatives, max_voters and max_profiles must be positive")
        if self.domain not in DOMAINS:
            raise ValueError(f"domain must be one of {DOMAINS}, got {self.domain!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def default_labels(size):
    if size <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:size])
    return tuple(f"a{i}" for i in range(1, size + 1))


def domain_types(alts, domain="strict"):
    if domain == "strict":
        return all_strict_orders(alts)
    if domain == "weak":
        return all_weak_orders(alts)
    raise ValueError(f"domain must be one of {DOMAINS}, got {domain!r}")


def count_profiles(alts, voters, domain="strict"):
    """Number of anonymous profiles: multisets of size ``voters`` over the domain."""
    types = len(domain_types(alts, domain))
    return math.comb(types + voters - 1, voters)


def enumerate_profiles(alts, voters, domain="strict", labels=None):
    """Every anonymous profile with exactly ``voters`` voters, once each.

    Profiles come out in the order of
    ``itertools.combinations_with_replacement`` over the domain's types,
    which are themselves sorted (lexicographic rankings).
    """
    types = domain_types(alts, domain)
    labels = labels or default_labels(alts)
    for combo in itertools.combinations_with_replacement(range(len(types)), voters):
        yield Profile(labels, [(types[i], c) for i, c in _runs(combo)])


def _runs(combo):
    for key, group in itertools.groupby(combo):
        yield key, sum(1 for _ in group)


def random_profile(budget, index, labels=None):
    """Profile number ``index`` of the seeded random stream of ``budget``."""
    rng = np.random.default_rng([budget.seed, index])
    types = domain_types(budget.alternatives, budget.domain)
    n = int(rng.integers(1, budget.max_voters + 1))
    draws = sorted(int(i) for i in rng.integers(0, len(types), size=n))
    labels = labels or default_labels(budget.alternatives)
    return Profile(labels, [(types[i], c) for i, c in _runs(draws)])


# --------------------------------------------------------------------------
# Search plans
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Plan:
    budget: SearchBudget
    exhaustive_sizes: int  # voter counts 1..exhaustive_sizes are fully enumerated
    enumerated: int
    sampled: int

    @property
    def total(self):
        return self.enumerated + self.sampled

    @property
    def exhaustive(self):
        return self.exhaustive_sizes == self.budget.max_voters

    def profiles(self, start=0, stop=None):
        """(index, profile) pairs for plan positions in [start, stop)."""
        stop = self.total if stop is None else min(stop, self.total)
        b = self.budget
        if start < self.enumerated:
            stream = itertools.chain.from_iterable(
                enumerate_profiles(b.alternatives, n, b.domain)
                for n in range(1, self.exhaustive_sizes + 1)
            )
            stream = itertools.islice(stream, start, min(stop, self.enumerated))
            for offset, profile in enumerate(stream):
                yield start + offset, profile
        for index in range(max(start, self.enumerated), stop):
            yield index, random_profile(b, index - self.enumerated)


def make_plan(budget):
    """Enumerate whole voter counts while they fit, then sample the rest."""
    sizes, enumerated = 0, 0
    for n in range(1, budget.max_voters + 1):
        count = count_profiles(budget.alternatives, n, budget.domain)
        if enumerated + count > budget.max_profiles:
            break
        sizes, enumerated = n, enumerated + count
    sampled = 0 if sizes == budget.max_voters else budget.max_profiles - enumerated
    return Plan(budget, sizes, enumerated, sampled)


# --------------------------------------------------------------------------
# Checks run over a plan
# --------------------------------------------------------------------------
# A task is a picklable tuple naming what to check on each profile; workers
# rebuild the checker (with its own memo) from it.

MECHANISM_IDS = ("ml", "cu", "copeland", "rd")


@dataclass(frozen=True)
class Prop1Violation:
    """Participation holds for every group, yet ordinal participation fails."""

    mechanism: str
    witness: AbstentionWitness


@dataclass(frozen=True)
class AxiomFailure:
    mechanism: str
    property: str
    violation: object


def _build_checker(task):
    kind = task[0]
    if kind == "property":
        _, mech, prop = task
        outcomes = Outcomes(mech)
        return lambda profile: run_property(prop, mech, profile, outcomes)
    if kind == "prop1":
        memos = {m: Outcomes(m) for m in MECHANISM_IDS}

        def check(profile):
            for m in MECHANISM_IDS:
                if check_participation(m, profile, memos[m]) is None:
                    w = check_ordinal_participation(m, profile, memos[m])
                    if w is not None:
                        return Prop1Violation(m, w)
            return None

        return check
    if kind == "cancel-homog":
        _, mech, domain = task
        outcomes = Outcomes(mech)

        def check(profile):
            orders = domain_types(profile.size, domain)
            v = check_cancellation_all(mech, profile, orders, outcomes)
            if v is not None:
                return AxiomFailure(mech, "cancellation", v)
            v = check_homogeneity(mech, profile, 3, outcomes)
            if v is not None:
                return AxiomFailure(mech, "homogeneity", v)
            return None

        return check
    raise ValueError(f"unknown task {task!r}")


def _reverify(task, profile, violation):
    """Independent second evaluation of a reported violation."""
    if isinstance(violation, AbstentionWitness):
        return verify_witness(violation) and violation.full_profile == profile
    if isinstance(violation, Prop1Violation):
        return (
            verify_witness(violation.witness)
            and check_participation(violation.mechanism, profile) is None
        )
    # Re-run the checker from scratch with fresh memos.
    return _build_checker(task)(profile) == violation


def _scan(args):
    task, plan, start, stop = args
    check = _build_checker(task)
    for index, profile in plan.profiles(start, stop):
        violation = check(profile)
        if violation is not None:
            return index, profile, violation
    return None


def scan_plan(task, plan, workers=1, chunk_size=2000):
    """First (index, profile, violation) in plan order, or None."""
    chunks = [
        (task, plan, start, min(start + chunk_size, plan.total))
        for start in range(0, plan.total, chunk_size)
    ]
    if workers <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            hit = _scan(chunk)
            if hit is not None:
                return hit
        return None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map yields in submission order, so the first hit has the minimum index.
        for hit in pool.map(_scan, chunks):
            if hit is not None:
                pool.shutdown(wait=False, cancel_futures=True)
                return hit
    return None


# --------------------------------------------------------------------------
# Reports
# --------------------------------------------------------------------------


@dataclass
class AuditReport:
    campaign: str
    mechanism: str
    property: str
    budget: SearchBudget
    scope: dict
    outcome: str  # pass-exhaustive | pass-sampled | witness-found
    expected: str  # "pass" or "witness"
    witness: object = None
    witness_index: int = None
    details: list = field(default_factory=list)
    elapsed: float = 0.0  # wall-clock seconds; never part of the rendered record

    @property
    def expectation_met(self):
        found = self.outcome == "witness-found"
        base = found if self.expected == "witness" else not found
        return base and all(not d.startswith("FAILED") for d in self.details)

    def to_record(self):
        scope = dict(self.scope)
        if self.witness_index is not None:
            scope["witness_index"] = self.witness_index
        scope["expected"] = self.expected
        scope["expectation_met"] = self.expectation_met
        return ReportRecord(
            command="audit" if self.campaign else "search",
            mechanism=self.mechanism,
            property=self.property,
            campaign=self.campaign,
            scope=scope,
            outcome=self.outcome,
            witness=to_plain(self.witness),
            details=list(self.details),
            seed=self.budget.seed,
        )


def _scope(plan, examined):
    b = plan.budget
    return {
        "alternatives": b.alternatives,
        "max_voters": b.max_voters,
        "domain": b.domain,
        "max_profiles": b.max_profiles,
        "exhaustive_voter_counts": plan.exhaustive_sizes,
        "enumerated": min(examined, plan.enumerated),
        "sampled": max(0, examined - plan.enumerated),
    }


def _run_task(task, budget, mechanism, prop, expected, campaign=None, workers=1):
    start = time.perf_counter()
    plan = make_plan(budget)
    hit = scan_plan(task, plan, workers=workers)
    if hit is None:
        outcome = "pass-exhaustive" if plan.exhaustive else "pass-sampled"
        report = AuditReport(campaign, mechanism, prop, budget, _scope(plan, plan.total),
                             outcome, expected)
    else:
        index, profile, violation = hit
        if not _reverify(task, profile, violation):
            raise RuntimeError(f"witness at plan index {index} failed re-verification")
        report = AuditReport(campaign, mechanism, prop, budget, _scope(plan, index + 1),
                             "witness-found", expected, violation, index)
        if not isinstance(violation, (AbstentionWitness, Prop1Violation)):
            report.details.append(f"violating profile: {_profile_line(profile)}")
    report.elapsed = time.perf_counter() - start
    return report


def _profile_line(profile):
    if profile.is_ordinal:
        return "; ".join(f"{c}: {t.format(profile.alternatives)}" for t, c in profile.items)
    return repr(profile)


def find_counterexample(mechanism, property_id, budget, workers=1):
    """Search the budget's plan for a violation of ``property_id`` by ``mechanism``."""
    mech = get_mechanism(mechanism).id
    get_property(property_id)
    return _run_task(("property", mech, property_id), budget, mech, property_id,
                     expected="witness", workers=workers)


# --------------------------------------------------------------------------
# Campaigns
# --------------------------------------------------------------------------


def sign_matrices(size):
    """All skew-symmetric matrices with off-diagonal entries in {-1, 0, +1}."""
    pairs = [(x, y) for x in range(size) for y in range(x + 1, size)]
    for signs in itertools.product((-1, 0, 1), repeat=len(pairs)):
        rows = [[0] * size for _ in range(size)]
        for (x, y), s in zip(pairs, signs):
            rows[x][y], rows[y][x] = s, -s
        yield SSBMatrix(rows)


def _lemma1(budget):
    start = time.perf_counter()
    count = 0
    failure = None
    for matrix in sign_matrices(budget.alternatives):
        count += 1
        if not verify_lemma1(matrix):
            failure = matrix
            break
    scope = {"alternatives": budget.alternatives, "matrices": count}
    if failure is None:
        report = AuditReport("lemma1", None, "lemma1", budget, scope, "pass-exhaustive", "pass")
    else:
        report = AuditReport("lemma1", None, "lemma1", budget, scope, "witness-found", "pass",
                             witness={"matrix": [[str(v) for v in r] for r in failure.entries]},
                             witness_index=count - 1)
    report.elapsed = time.perf_counter() - start
    return report


def _cu_inefficiency(budget, workers):
    if budget.alternatives == 4:
        from .properties import check_ex_post_efficiency

        seeded = Profile.from_rankings(
            default_labels(4), ["a > b > c > d", "b > c > a > d", "c > a > b > d"]
        )
        violation = check_ex_post_efficiency("cu", seeded)
        if violation is not None:
            return AuditReport(
                "cu-inefficiency", "cu", "ex-post-efficiency", budget,
                {"alternatives": 4, "seeded_profiles": 1}, "witness-found", "witness",
                violation, None, [f"violating profile: {_profile_line(seeded)}"],
            )
    return _run_task(("property", "cu", "ex-post-efficiency"), budget, "cu",
                     "ex-post-efficiency", "witness", "cu-inefficiency", workers)


CAMPAIGNS = (
    "thm1",
    "prop1",
    "cor1",
    "cor2-contrapositive",
    "cor3-contrapositive",
    "lemma1",
    "moulin-contrast",
    "cu-inefficiency",
)


def audit_theorem(campaign, budget, workers=1):
    """Run a named audit campaign and return its :class:`AuditReport`."""
    if campaign == "lemma1":
        return _lemma1(budget)
    if campaign == "thm1":
        return _run_task(("property", "ml", "participation"), budget, "ml",
                         "participation", "pass", campaign, workers)
    if campaign == "cor1":
        return _run_task(("property", "ml", "ordinal-participation"), budget, "ml",
                         "ordinal-participation", "pass", campaign, workers)
    if campaign == "prop1":
        return _run_task(("prop1",), budget, ",".join(MECHANISM_IDS),
                         "participation=>ordinal-participation", "pass", campaign, workers)
    if campaign == "cor2-contrapositive":
        return _run_task(("property", "cu", "participation"), budget, "cu",
                         "participation", "witness", campaign, workers)
    if campaign == "cor3-contrapositive":
        report = _run_task(("property", "cu", "participation"), budget, "cu",
                           "participation", "witness", campaign, workers)
        side = _run_task(("cancel-homog", "cu", budget.domain), budget, "cu",
                         "cancellation+homogeneity", "pass", campaign, workers)
        status = "passed" if side.outcome.startswith("pass") else "FAILED"
        report.details.append(
            f"{status} cancellation and homogeneity (k<=3) for cu: {side.outcome} over "
            f"{side.scope['enumerated'] + side.scope['sampled']} profiles"
        )
        if side.witness is not None:
            report.details.append(f"FAILED counterexample: {to_plain(side.witness)}")
        report.elapsed += side.elapsed
        return report
    if campaign == "moulin-contrast":
        return _run_task(("property", "copeland", "ordinal-participation"), budget, "copeland",
                         "ordinal-participation", "witness", campaign, workers)
    if campaign == "cu-inefficiency":
        return _cu_inefficiency(budget, workers)
    raise UnknownCampaign(f"unknown campaign {campaign!r}; choose from {', '.join(CAMPAIGNS)}")


def deficit_of(report):
    """Exact deficit of an abstention witness carried by ``report`` (None otherwise)."""
    w = report.witness
    if isinstance(w, Prop1Violation):
        w = w.witness
    return w.deficit if isinstance(w, AbstentionWitness) else None


"""Exact checkers for the axioms studied for randomized mechanisms.

Every checker returns ``None`` when the property holds on the given
profile and a small violation record otherwise. Records name alternatives
by their labels so that they can be printed or serialized directly.

Group abstention on an anonymous profile means removing a non-empty strict
sub-multiset. Removal vectors ``r`` (one count per voter type, in the
profile's canonical type order) are visited in lexicographic order, and the
first violating one is reported.
"""

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Lottery,
    Profile,
    ZERO,
    aggregate,
    all_weak_orders,
    replicate,
    ssb_value,
    voter_matrix,
    canonical_ssb,
)
from .errors import DimensionMismatch, NonOrdinalProfile, UnknownProperty
from .mechanisms import get_mechanism
from .solver import column_values, condorcet_winner

PARTICIPATION_INEQUALITY = "sum over S of phi_i(f(P), f(P - S)) >= 0"
ORDINAL_PARTICIPATION_INEQUALITY = (
    "no member of S strictly SD-prefers f(P - S) to f(P); "
    "deficit is the group value sum over S of phi_i(f(P), f(P - S))"
)


class SDResult(enum.Enum):
    STRICTLY_DOMINATES = "strictly-dominates"
    STRICTLY_DOMINATED = "strictly-dominated"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


# --------------------------------------------------------------------------
# Memoized mechanism evaluation
# --------------------------------------------------------------------------


class Outcomes:
    """Mechanism evaluator with a memo keyed by what the output depends on.

    Majoritarian mechanisms are keyed by the aggregate matrix, so sub-profiles
    sharing margins share one evaluation. Pass the same instance to many
    checks to reuse it across a search.
    """

    def __init__(self, mechanism, max_entries=200_000):
        self.mechanism = get_mechanism(mechanism)
        self.max_entries = max_entries
        self._memo = {}

    def __call__(self, profile):
        key = aggregate(profile) if self.mechanism.majoritarian else profile
        try:
            return self._memo[key]
        except KeyError:
            pass
        if len(self._memo) >= self.max_entries:
            self._memo.clear()
        result = self._memo[key] = self.mechanism(profile)
        return result


def _outcomes(mechanism, outcomes):
    if outcomes is not None:
        return outcomes
    return Outcomes(mechanism)


# --------------------------------------------------------------------------
# Violation records
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AbstentionWitness:
    """Evidence that a group S is better off abstaining."""

    mechanism: str
    property: str
    full_profile: Profile
    abstainers: Profile
    outcome_present: Lottery
    outcome_absent: Lottery
    deficit: Fraction
    inequality: str

    @property
    def remaining_profile(self):
        return self.full_profile - self.abstainers


@dataclass(frozen=True)
class WelfareViolation:
    alternative: str
    value: Fraction


@dataclass(frozen=True)
class CancellationViolation:
    added_order: str
    before: Lottery
    after: Lottery


@dataclass(frozen=True)
class HomogeneityViolation:
    k: int
    before: Lottery
    after: Lottery


@dataclass(frozen=True)
class CondorcetViolation:
    winner: str
    outcome: Lottery


@dataclass(frozen=True)
class EfficiencyViolation:
    dominated: str
    dominators: tuple  # every alternative Pareto-dominating `dominated`, in label order
    probability: Fraction


# --------------------------------------------------------------------------
# Lottery comparisons
# --------------------------------------------------------------------------


def sd_compare(order, p, q):
    """Stochastic-dominance comparison of ``p`` against ``q`` for ``order``."""
    if not order.size == len(p) == len(q):
        raise DimensionMismatch("order and lotteries disagree on the alternatives")
    diffs = [
        sum((p[x] - q[x] for x in upper), ZERO) for upper in order.upper_contour_sets()
    ]
    has_pos = any(d > 0 for d in diffs)
    has_neg = any(d < 0 for d in diffs)
    if has_pos and has_neg:
        return SDResult.INCOMPARABLE
    if has_pos:
        return SDResult.STRICTLY_DOMINATES
    if has_neg:
        return SDResult.STRICTLY_DOMINATED
    return SDResult.EQUIVALENT


def pc_compare(order, p, q):
    """Sign of the canonical SSB value phi(p, q): +1 means p is PC-preferred."""
    value = ssb_value(canonical_ssb(order), p, q)
    return (value > 0) - (value < 0)


# --------------------------------------------------------------------------
# Checkers
# --------------------------------------------------------------------------


def check_welfare_maximizing(mechanism, profile, outcomes=None):
    """First alternative (in label order) with the most negative column value, if any."""
    f = _outcomes(mechanism, outcomes)
    values = column_values(aggregate(profile), f(profile))
    worst = min(values)
    if worst >= 0:
        return None
    return WelfareViolation(profile.alternatives[values.index(worst)], worst)


def removal_vectors(profile):
    """Per-type removal counts of every non-empty strict sub-multiset, lexicographically."""
    counts = profile.counts
    full = tuple(counts)
    for r in itertools.product(*(range(c + 1) for c in counts)):
        if any(r) and r != full:
            yield r


def _abstention_parts(profile, r):
    remaining = profile.with_counts([c - k for c, k in zip(profile.counts, r)])
    abstainers = profile.with_counts(r)
    return remaining, abstainers


def _group_value(profile, r, present, absent):
    total = ZERO
    for (voter_type, _), k in zip(profile.items, r):
        if k:
            total += k * ssb_value(voter_matrix(voter_type), present, absent)
    return total


def check_participation(mechanism, profile, outcomes=None):
    """First group S whose summed SSB value for staying is negative."""
    mech = get_mechanism(mechanism)
    f = _outcomes(mech, outcomes)
    present = f(profile)
    for r in removal_vectors(profile):
        remaining, abstainers = _abstention_parts(profile, r)
        absent = f(remaining)
        if absent == present:
            continue
        deficit = _group_value(profile, r, present, absent)
        if deficit < 0:
            return AbstentionWitness(
                mech.id, "participation", profile, abstainers,
                present, absent, deficit, PARTICIPATION_INEQUALITY,
            )
    return None


def _require_ordinal(profile):
    if not profile.is_ordinal:
        raise NonOrdinalProfile("stochastic dominance needs weak-order voter types")


def check_ordinal_participation(mechanism, profile, outcomes=None):
    """First group S every member of which strictly SD-prefers abstaining."""
    _require_ordinal(profile)
    mech = get_mechanism(mechanism)
    f = _outcomes(mech, outcomes)
    present = f(profile)
    types = profile.types
    # Cache each type's verdict per distinct abstention outcome.
    better_off = {}
    for r in removal_vectors(profile):
        remaining, abstainers = _abstention_parts(profile, r)
        absent = f(remaining)
        if absent == present:
            continue
        if absent not in better_off:
            better_off[absent] = [
                sd_compare(t, absent, present) is SDResult.STRICTLY_DOMINATES for t in types
            ]
        flags = better_off[absent]
        if all(flags[i] for i, k in enumerate(r) if k):
            deficit = _group_value(profile, r, present, absent)
            return AbstentionWitness(
                mech.id, "ordinal-participation", profile, abstainers,
                present, absent, deficit, ORDINAL_PARTICIPATION_INEQUALITY,
            )
    return None


def check_cancellation(mechanism, profile, order, outcomes=None):
    """Does adding ``order`` together with its reversal change the outcome?"""
    f = _outcomes(mechanism, outcomes)
    before = f(profile)
    extended = profile + Profile(profile.alternatives, [(order, 1), (order.reversed(), 1)])
    after = f(extended)
    if after == before:
        return None
    return CancellationViolation(order.format(profile.alternatives), before, after)


def check_cancellation_all(mechanism, profile, orders=None, outcomes=None):
    """Cancellation against every order in ``orders`` (default: all weak orders)."""
    f = _outcomes(mechanism, outcomes)
    for order in orders if orders is not None else all_weak_orders(profile.size):
        violation = check_cancellation(mechanism, profile, order, f)
        if violation is not None:
            return violation
    return None


def check_homogeneity(mechanism, profile, k_max=3, outcomes=None):
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    f = _outcomes(mechanism, outcomes)
    before = f(profile)
    for k in range(2, k_max + 1):
        after = f(replicate(profile, k))
        if after != before:
            return HomogeneityViolation(k, before, after)
    return None


def check_condorcet_consistency(mechanism, profile, outcomes=None):
    f = _outcomes(mechanism, outcomes)
    winner = condorcet_winner(aggregate(profile))
    if winner is None:
        return None
    outcome = f(profile)
    if outcome[winner] == 1:
        return None
    return CondorcetViolation(profile.alternatives[winner], outcome)


def pareto_dominators(profile, y):
    """Alternatives every voter weakly prefers to ``y``, with some voter strictly."""
    _require_ordinal(profile)
    found = []
    for x in range(profile.size):
        if x == y:
            continue
        if all(o.weakly_prefers(x, y) for o in profile.types) and any(
            o.prefers(x, y) for o in profile.types
        ):
            found.append(x)
    return found


def check_ex_post_efficiency(mechanism, profile, outcomes=None):
    """First Pareto-dominated alternative that receives positive probability."""
    _require_ordinal(profile)
    f = _outcomes(mechanism, outcomes)
    outcome = f(profile)
    for y in outcome.support:
        dominators = pareto_dominators(profile, y)
        if dominators:
            labels = profile.alternatives
            return EfficiencyViolation(labels[y], tuple(labels[x] for x in dominators), outcome[y])
    return None


# --------------------------------------------------------------------------
# Witness re-verification
# --------------------------------------------------------------------------


def verify_witness(witness):
    """Recompute an AbstentionWitness from scratch; True iff everything matches.

    Uses a fresh, unmemoized mechanism evaluation.
    """
    mech = get_mechanism(witness.mechanism)
    full, group = witness.full_profile, witness.abstainers
    if full.alternatives != group.alternatives:
        return False
    try:
        remaining = full - group
    except (ValueError, DimensionMismatch):
        return False
    present, absent = mech(full), mech(remaining)
    if present != witness.outcome_present or absent != witness.outcome_absent:
        return False
    deficit = sum(
        (c * ssb_value(voter_matrix(t), present, absent) for t, c in group.items), ZERO
    )
    if deficit != witness.deficit:
        return False
    if witness.property == "participation":
        return deficit < 0
    if witness.property == "ordinal-participation":
        return all(
            sd_compare(t, absent, present) is SDResult.STRICTLY_DOMINATES for t in group.types
        )
    return False


# --------------------------------------------------------------------------
# Registry
# --------------------------------------------------------------------------


def _cancellation(mechanism, profile, outcomes=None):
    return check_cancellation_all(mechanism, profile, outcomes=outcomes)


def _homogeneity(mechanism, profile, outcomes=None):
    return check_homogeneity(mechanism, profile, 3, outcomes)


PROPERTIES = {
    "welfare-max": check_welfare_maximizing,
    "participation": check_participation,
    "ordinal-participation": check_ordinal_participation,
    "cancellation": _cancellation,
    "homogeneity": _homogeneity,
    "condorcet": check_condorcet_consistency,
    "ex-post-efficiency": check_ex_post_efficiency,
}

ORDINAL_ONLY = {"ordinal-participation", "condorcet", "ex-post-efficiency"}


def get_property(property_id):
    try:
        return PROPERTIES[property_id]
    except KeyError:
        raise UnknownProperty(
            f"unknown property {property_id!r}; choose from {', '.join(PROPERTIES)}"
        ) from None


def run_property(property_id, mechanism, profile, outcomes=None):
    """Run one registered checker on one profile."""
    check = get_property(property_id)
    if property_id in ORDINAL_ONLY:
        _require_ordinal(profile)
    return check(mechanism, profile, outcomes=outcomes)

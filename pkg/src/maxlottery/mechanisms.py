"""Ordinal mechanisms: maximal lotteries and the rules used as contrasts.

Each mechanism maps a :class:`~maxlottery.algebra.Profile` to a
:class:`~maxlottery.algebra.Lottery`. All four are anonymous; ``ml``,
``cu`` and ``copeland`` only look at the aggregate margin matrix, which
lets the checkers memoize them by that matrix.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import Lottery, aggregate
from .errors import EmptyProfile, NonOrdinalProfile, UnknownMechanism
from .solver import condorcet_winner, lex_maximal


def _require_voters(profile):
    if profile is None or profile.n < 1:
        raise EmptyProfile("mechanisms are undefined on the empty profile")


def _require_ordinal(profile, name):
    if not profile.is_ordinal:
        raise NonOrdinalProfile(f"{name} needs weak-order voter types")


def ml_mechanism(profile):
    """Maximal lottery: lexicographically first welfare-maximizing lottery."""
    _require_voters(profile)
    return lex_maximal(aggregate(profile))


def cu_mechanism(profile):
    """Condorcet winner if there is one, otherwise the uniform lottery."""
    _require_voters(profile)
    _require_ordinal(profile, "cu")
    winner = condorcet_winner(aggregate(profile))
    if winner is None:
        return Lottery.uniform(profile.size)
    return Lottery.degenerate(profile.size, winner)


def copeland_scores(M):
    """Pairwise wins minus pairwise losses for every alternative."""
    m = M.size
    return tuple(
        sum(1 for y in range(m) if M[x][y] > 0) - sum(1 for y in range(m) if M[x][y] < 0)
        for x in range(m)
    )


def copeland_mechanism(profile):
    _require_voters(profile)
    _require_ordinal(profile, "copeland")
    scores = copeland_scores(aggregate(profile))
    best = max(scores)
    return Lottery.degenerate(profile.size, scores.index(best))


def rd_mechanism(profile):
    """Random dictatorship; a voter with a tied top splits its share evenly."""
    _require_voters(profile)
    _require_ordinal(profile, "rd")
    probs = [Fraction(0)] * profile.size
    for order, count in profile.items:
        share = Fraction(count, profile.n * len(order.top))
        for x in order.top:
            probs[x] += share
    return Lottery(tuple(probs))


@dataclass(frozen=True)
class Mechanism:
    id: str
    description: str
    rule: Callable
    majoritarian: bool  # output is a function of the aggregate matrix alone

    def __call__(self, profile):
        return self.rule(profile)


MECHANISMS = {
    m.id: m
    for m in (
        Mechanism("ml", "maximal lotteries (lexicographic selection)", ml_mechanism, True),
        Mechanism("cu", "Condorcet winner, else uniform", cu_mechanism, True),
        Mechanism("copeland", "Copeland winner, lexicographic tie-break", copeland_mechanism, True),
        Mechanism("rd", "random dictatorship with tied tops split evenly", rd_mechanism, False),
    )
}


def get_mechanism(mechanism):
    """Look up a mechanism by id; Mechanism instances pass through."""
    if isinstance(mechanism, Mechanism):
        return mechanism
    try:
        return MECHANISMS[mechanism]
    except KeyError:
        raise UnknownMechanism(
            f"unknown mechanism {mechanism!r}; choose from {', '.join(MECHANISMS)}"
        ) from None

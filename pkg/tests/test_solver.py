from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxlottery.algebra import Lottery, Profile, SSBMatrix, aggregate, canonical_ssb, ssb_value
from maxlottery.errors import NotSkewSymmetric
from maxlottery.search import enumerate_profiles, random_profile, SearchBudget, sign_matrices
from maxlottery.solver import (
    condorcet_winner,
    game_value,
    is_welfare_maximizing,
    lex_maximal,
    maximal_witness,
    uniqueness_analysis,
    verify_lemma1,
)

from oracles import polytope_summary

THIRD = F(1, 3)


def test_is_welfare_maximizing_examples(p_cyc):
    M = aggregate(p_cyc)
    assert is_welfare_maximizing(SSBMatrix.zero(3), Lottery.degenerate(3, 2))
    assert is_welfare_maximizing(M, Lottery.uniform(3))
    # column c at e_a is M(a, c) = -1
    assert not is_welfare_maximizing(M, Lottery.degenerate(3, 0))


def test_witness_examples(p_cyc, p_cw):
    assert maximal_witness(SSBMatrix.zero(3)) == Lottery.degenerate(3, 0)
    assert maximal_witness(aggregate(p_cyc)) == Lottery.uniform(3)
    assert maximal_witness(aggregate(p_cw)) == Lottery.degenerate(3, 0)


def test_lex_examples(p_cyc, p_cw):
    assert lex_maximal(SSBMatrix.zero(3)) == Lottery.degenerate(3, 0)
    assert lex_maximal(aggregate(p_cyc)) == Lottery.uniform(3)
    assert lex_maximal(aggregate(p_cw)) == Lottery.degenerate(3, 0)


def test_uniqueness_examples(p_cyc, p_cw):
    zero = uniqueness_analysis(SSBMatrix.zero(2))
    assert not zero.unique and zero.ranges == ((0, 1), (0, 1))
    cyc = uniqueness_analysis(aggregate(p_cyc))
    assert cyc.unique and cyc.ranges == ((THIRD, THIRD),) * 3
    assert cyc.witness == cyc.lex_choice
    cw = uniqueness_analysis(aggregate(p_cw))
    assert cw.unique and cw.ranges == ((1, 1), (0, 0), (0, 0))


def test_not_skew_symmetric_is_rejected():
    for fn in (maximal_witness, lex_maximal, uniqueness_analysis, verify_lemma1):
        with pytest.raises(NotSkewSymmetric):
            fn([[0, 1], [1, 0]])


def test_condorcet_winner_examples(p_cyc, p_cw):
    assert condorcet_winner(aggregate(p_cw)) == 0
    assert condorcet_winner(aggregate(p_cyc)) is None
    single = Profile.from_rankings("abc", ["a > b > c"])
    assert condorcet_winner(aggregate(single)) == 0


def test_lemma1_examples(p_cyc):
    strict = canonical_ssb(Profile.from_rankings("abc", ["a > b > c"]).types[0])
    assert verify_lemma1(strict)
    assert uniqueness_analysis(strict).lex_choice == Lottery.degenerate(3, 0)
    assert verify_lemma1(aggregate(p_cyc))
    assert verify_lemma1(SSBMatrix.zero(3))


def test_lemma1_exhaustive_three():
    assert sum(1 for m in sign_matrices(3) if verify_lemma1(m)) == 27


def _check_against_oracle(M):
    lex, unique, ranges, vertices = polytope_summary(M.entries)
    analysis = uniqueness_analysis(M)
    assert tuple(lex_maximal(M).probs) == lex
    assert tuple(analysis.witness.probs) in vertices
    assert analysis.unique == unique
    assert analysis.ranges == ranges
    assert analysis.lex_choice.probs == lex


@pytest.mark.parametrize("voters", [1, 2, 3])
def test_oracle_equivalence_enumerated(voters):
    for profile in enumerate_profiles(3, voters, "weak"):
        _check_against_oracle(aggregate(profile))


@st.composite
def rational_ssb(draw, size):
    rows = [[F(0)] * size for _ in range(size)]
    for x in range(size):
        for y in range(x + 1, size):
            v = draw(st.fractions(-3, 3, max_denominator=4))
            rows[x][y], rows[y][x] = v, -v
    return SSBMatrix(rows)


@given(st.integers(2, 5).flatmap(rational_ssb))
@settings(max_examples=120, deadline=None)
def test_oracle_equivalence_rational_matrices(M):
    _check_against_oracle(M)


@given(st.integers(0, 10_000), st.integers(2, 5))
@settings(max_examples=40, deadline=None)
def test_scaling_invariance(index, k):
    M = aggregate(random_profile(SearchBudget(4, 6, "weak", 10_001, seed=7), index))
    assert lex_maximal(k * M) == lex_maximal(M)
    assert uniqueness_analysis(k * M).ranges == uniqueness_analysis(M).ranges


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_symmetric_game_value_is_zero(index):
    M = aggregate(random_profile(SearchBudget(4, 6, "strict", 10_001, seed=3), index))
    p = lex_maximal(M)
    assert is_welfare_maximizing(M, p)
    assert ssb_value(M, p, p) == 0
    assert game_value(M) == 0

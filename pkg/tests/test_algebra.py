from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxlottery.algebra import (
    Lottery,
    Profile,
    SSBMatrix,
    WeakOrder,
    aggregate,
    all_strict_orders,
    all_weak_orders,
    as_rational,
    canonical_ssb,
    negate,
    replicate,
    ssb_value,
)
from maxlottery.errors import (
    DimensionMismatch,
    DuplicateAlternative,
    EmptyProfile,
    InvalidFactor,
    InvalidLottery,
    NotSkewSymmetric,
)

ABC = ("a", "b", "c")


def order(text, labels=ABC):
    return WeakOrder.parse(text, labels)


def entries(matrix):
    return [list(row) for row in matrix.entries]


# -- strategies -------------------------------------------------------------

weak_orders_3 = st.sampled_from(all_weak_orders(3))
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def lotteries(draw, size=3):
    weights = draw(st.lists(st.integers(0, 6), min_size=size, max_size=size))
    if sum(weights) == 0:
        weights[draw(st.integers(0, size - 1))] = 1
    total = sum(weights)
    return Lottery(tuple(F(w, total) for w in weights))


@st.composite
def ssb_matrices(draw, size=3):
    rows = [[F(0)] * size for _ in range(size)]
    for x in range(size):
        for y in range(x + 1, size):
            v = draw(rationals)
            rows[x][y], rows[y][x] = v, -v
    return SSBMatrix(rows)


@st.composite
def profiles(draw, size=3):
    pool = all_weak_orders(size)
    picks = draw(st.lists(st.tuples(st.sampled_from(pool), st.integers(1, 3)), min_size=1, max_size=4))
    return Profile("abcd"[:size], picks)


# -- rationals and lotteries --------------------------------------------------


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("0.5")
    assert as_rational("-2/4") == F(-1, 2)


def test_lottery_validation():
    with pytest.raises(InvalidLottery):
        Lottery((F(1, 2), F(1, 3), F(1, 3)))
    with pytest.raises(InvalidLottery):
        Lottery((F(3, 2), F(-1, 2)))
    p = Lottery((F(1, 2), 0, F(1, 2)))
    assert not p.is_degenerate
    assert p.support == (0, 2)
    assert Lottery.degenerate(3, 1).is_degenerate
    assert str(Lottery.uniform(3)) == "(1/3, 1/3, 1/3)"


# -- canonical_ssb -------------------------------------------------------------


def test_canonical_strict_order():
    assert entries(canonical_ssb(order("a > b > c"))) == [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]


def test_canonical_full_indifference_is_zero():
    assert canonical_ssb(order("a = b = c")).is_zero()


def test_canonical_partial_tie():
    m = canonical_ssb(order("a > b = c"))
    assert (m[0][1], m[0][2], m[1][2]) == (1, 1, 0)
    assert m.canonical


@given(weak_orders_3)
def test_canonical_round_trip(o):
    assert WeakOrder.from_ssb(canonical_ssb(o)) == o


def test_there_are_13_weak_orders_on_three():
    assert len(all_weak_orders(3)) == 13
    assert len(all_strict_orders(3)) == 6


# -- negate --------------------------------------------------------------------


def test_negate_reverses_order():
    assert negate(canonical_ssb(order("a > b > c"))) == canonical_ssb(order("c > b > a"))
    assert negate(SSBMatrix.zero(3)) == SSBMatrix.zero(3)


@given(weak_orders_3)
def test_negate_of_canonical_is_reversed_order(o):
    assert negate(canonical_ssb(o)) == canonical_ssb(o.reversed())


@given(ssb_matrices())
def test_negate_is_involution(phi):
    assert negate(negate(phi)) == phi


# -- SSBMatrix -----------------------------------------------------------------


def test_not_skew_symmetric_rejected():
    with pytest.raises(NotSkewSymmetric):
        SSBMatrix([[0, 1], [1, 0]])
    with pytest.raises(NotSkewSymmetric):
        SSBMatrix([[1, 0], [0, -1]])
    with pytest.raises(DimensionMismatch):
        SSBMatrix([[0, 1, 2], [-1, 0, 0]])


def test_integral_and_fractional_entries_compare_equal():
    assert SSBMatrix([[0, F(2, 2)], [-1, 0]]) == SSBMatrix([["0", "1"], ["-1", "0"]])
    assert hash(SSBMatrix([[0, F(1)], [-1, 0]])) == hash(SSBMatrix([[0, 1], [-1, 0]]))


# -- aggregate -----------------------------------------------------------------


def test_aggregate_cycle(p_cyc):
    # a>b>c + b>c>a + c>a>b, summed by hand entry by entry
    assert entries(aggregate(p_cyc)) == [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]


def test_aggregate_single_voter():
    p = Profile.from_rankings(ABC, ["a > b > c"])
    assert aggregate(p) == canonical_ssb(order("a > b > c"))


@given(profiles(), weak_orders_3)
def test_aggregate_cancelling_pair(profile, o):
    extended = profile + Profile(ABC, [(o, 1), (o.reversed(), 1)])
    assert aggregate(extended) == aggregate(profile)


@given(profiles(), profiles())
def test_aggregate_additive(p, q):
    assert aggregate(p + q) == aggregate(p) + aggregate(q)


@given(profiles())
def test_aggregate_skew_symmetric(profile):
    m = aggregate(profile)
    assert all(m[x][y] == -m[y][x] for x in range(3) for y in range(3))


def test_aggregate_mixed_types():
    phi = SSBMatrix([[0, F(1, 2), 0], [F(-1, 2), 0, 0], [0, 0, 0]])
    p = Profile(ABC, [(phi, 2), (order("c > b > a"), 1)])
    assert entries(aggregate(p)) == [[0, 0, -1], [0, 0, -1], [1, 1, 0]]


# -- ssb_value -----------------------------------------------------------------


def test_ssb_value_examples():
    phi = canonical_ssb(order("a > b > c"))
    p = Lottery((F(1, 2), 0, F(1, 2)))
    q = Lottery.degenerate(3, 1)
    # 1/2 * phi(a, b) + 1/2 * phi(c, b) = 1/2 - 1/2
    assert ssb_value(phi, p, q) == 0
    assert ssb_value(phi, Lottery.degenerate(3, 0), Lottery.degenerate(3, 2)) == 1


@given(ssb_matrices(), lotteries())
def test_ssb_value_self_is_zero(phi, p):
    assert ssb_value(phi, p, p) == 0


@given(ssb_matrices(), lotteries(), lotteries(), lotteries(), st.fractions(0, 1, max_denominator=9))
def test_bilinearity(phi, p, r, q, lam):
    mixed = p.mix(r, lam)
    assert ssb_value(phi, mixed, q) == lam * ssb_value(phi, p, q) + (1 - lam) * ssb_value(phi, r, q)
    assert ssb_value(phi, q, mixed) == -ssb_value(phi, mixed, q)


def test_ssb_value_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ssb_value(SSBMatrix.zero(3), Lottery.uniform(2), Lottery.uniform(3))


# -- profiles ------------------------------------------------------------------


def test_profile_is_anonymous():
    a = Profile.from_rankings(ABC, ["a > b > c", "c > b > a", "a > b > c"])
    b = Profile.from_rankings(ABC, ["c > b > a", (2, "a > b > c")])
    assert a == b and hash(a) == hash(b)
    assert a.n == 3


def test_profile_errors():
    with pytest.raises(EmptyProfile):
        Profile(ABC, [])
    with pytest.raises(DuplicateAlternative):
        Profile(("a", "a"), [(WeakOrder.indifferent(2), 1)])
    with pytest.raises(DimensionMismatch):
        Profile(ABC, [(WeakOrder.indifferent(2), 1)])
    with pytest.raises(ValueError):
        Profile(ABC, [(WeakOrder.indifferent(3), 0)])


def test_profile_difference(p_cw):
    single = Profile.from_rankings(ABC, ["a > b > c"])
    assert (p_cw - single) == Profile.from_rankings(ABC, ["a > b > c", "b > c > a"])
    with pytest.raises(ValueError):
        single - p_cw


# -- replicate -----------------------------------------------------------------


def test_replicate_examples(p_cyc):
    assert replicate(p_cyc, 1) == p_cyc
    doubled = replicate(p_cyc, 2)
    assert doubled.n == 6 and set(doubled.counts) == {2}
    assert aggregate(replicate(p_cyc, 3)) == 3 * aggregate(p_cyc)


@given(profiles(), st.integers(1, 4))
@settings(max_examples=50)
def test_replicate_scales_aggregate(profile, k):
    assert aggregate(replicate(profile, k)) == k * aggregate(profile)


@pytest.mark.parametrize("k", [0, -1, 1.5, True])
def test_replicate_rejects_bad_factor(p_cyc, k):
    with pytest.raises(InvalidFactor):
        replicate(p_cyc, k)

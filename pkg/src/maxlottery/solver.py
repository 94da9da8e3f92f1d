"""Welfare-maximizing lotteries of an aggregate SSB matrix.

A lottery p is welfare-maximizing for M when p^T M >= 0 column by column,
i.e. p is an optimal strategy of the symmetric zero-sum game M. The set of
such lotteries (the maximal polytope) is

    { p >= 0 : sum(p) = 1, sum_x p(x) M[x][y] >= 0 for every y }

and every routine below works on that polytope with the exact simplex in
:mod:`maxlottery.lp`.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Lottery, SSBMatrix, ZERO
from .errors import DimensionMismatch
from .lp import Tableau


@dataclass(frozen=True)
class MaximalAnalysis:
    witness: Lottery
    lex_choice: Lottery
    unique: bool
    ranges: tuple  # (min, max) probability per alternative over the maximal polytope


def _require_ssb(M):
    # SSBMatrix validates skew-symmetry on construction; raw rows get it here.
    return M if isinstance(M, SSBMatrix) else SSBMatrix(M)


def _polytope(M):
    """Equality-form constraints over variables (p_0..p_{m-1}, s_0..s_{m-1})."""
    m = M.size
    A, b = [], []
    for y in range(m):
        # s_y = sum_x M[x][y] p_x  >= 0
        row = [-M.entries[x][y] for x in range(m)] + [ZERO] * m
        row[m + y] = Fraction(1)
        A.append(row)
        b.append(ZERO)
    A.append([Fraction(1)] * m + [ZERO] * m)
    b.append(Fraction(1))
    return A, b


def _unit(m, k, sign=1):
    c = [ZERO] * (2 * m)
    c[k] = Fraction(sign)
    return c


def _base_tableau(M):
    return Tableau(*_polytope(M))


def column_values(M, p):
    """Exact values sum_x p(x) M[x][y], one per alternative y."""
    if M.size != len(p):
        raise DimensionMismatch(f"{M.size} alternatives vs lottery of length {len(p)}")
    return tuple(
        sum((px * M.entries[x][y] for x, px in enumerate(p.probs) if px), ZERO)
        for y in range(M.size)
    )


def is_welfare_maximizing(M, p):
    """True iff no lottery beats ``p`` under ``M``; checking the pure columns suffices."""
    return all(v >= 0 for v in column_values(M, p))


def maximal_witness(M):
    """Some welfare-maximizing lottery: the vertex reached by phase one."""
    M = _require_ssb(M)
    m = M.size
    t = _base_tableau(M)
    return Lottery(tuple(t.solution()[:m]))


def lex_maximal(M):
    """Welfare-maximizing lottery that lexicographically maximizes (p(a1), p(a2), ...)."""
    M = _require_ssb(M)
    m = M.size
    t = _base_tableau(M)
    fixed = ZERO
    for k in range(m):
        fixed += t.maximize(_unit(m, k))
        if fixed == 1:
            break
        t.restrict_to_optimal_face()
    return Lottery(tuple(t.solution()[:m]))


def uniqueness_analysis(M):
    """Witness, lex choice and exact per-alternative probability ranges."""
    M = _require_ssb(M)
    m = M.size
    base = _base_tableau(M)
    witness = Lottery(tuple(base.solution()[:m]))
    ranges = []
    for x in range(m):
        hi = base.copy().maximize(_unit(m, x))
        lo = -base.copy().maximize(_unit(m, x, -1))
        ranges.append((lo, hi))
    unique = all(lo == hi for lo, hi in ranges)
    lex = Lottery(tuple(hi for _, hi in ranges)) if unique else lex_maximal(M)
    return MaximalAnalysis(witness=witness, lex_choice=lex, unique=unique, ranges=tuple(ranges))


def game_value(M):
    """Maximin value of the zero-sum game M (zero whenever M is skew-symmetric)."""
    m = M.size
    # variables: p (m), v+ , v-, slacks (m)
    A, b = [], []
    for y in range(m):
        row = [M.entries[x][y] for x in range(m)] + [Fraction(-1), Fraction(1)] + [ZERO] * m
        row[m + 2 + y] = Fraction(-1)
        A.append(row)
        b.append(ZERO)
    A.append([Fraction(1)] * m + [ZERO] * (m + 2))
    b.append(Fraction(1))
    c = [ZERO] * m + [Fraction(1), Fraction(-1)] + [ZERO] * m
    return Tableau(A, b).maximize(c)


def condorcet_winner(M):
    """Index of the alternative beating every other one strictly, or None."""
    m = M.size
    for x in range(m):
        if all(M.entries[x][y] > 0 for y in range(m) if y != x):
            return x
    return None


def verify_lemma1(phi):
    """Check: x is the unique welfare-maximizing lottery iff phi(x, y) > 0 for all y != x."""
    phi = _require_ssb(phi)
    m = phi.size
    for x in range(m):
        # e_x is the unique maximal lottery iff it is maximal and min p_x over the polytope is 1
        unique_at_x = all(v >= 0 for v in phi.entries[x]) and (
            -_base_tableau(phi).maximize(_unit(m, x, -1)) == 1
        )
        strictly_best = all(phi.entries[x][y] > 0 for y in range(m) if y != x)
        if unique_at_x != strictly_best:
            return False
    return True

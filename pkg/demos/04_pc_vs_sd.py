"""Stochastic dominance against the pairwise-comparison (PC) extension for a
voter ranking a > b > c: SD leaves many lottery pairs incomparable, PC ranks
all of them and never contradicts SD.

Run: python3 demos/04_pc_vs_sd.py
"""

from collections import Counter
from fractions import Fraction

from maxlottery import Lottery, WeakOrder
from maxlottery.properties import SDResult, pc_compare, sd_compare


def grid(den):
    return [
        Lottery((Fraction(i, den), Fraction(j, den), Fraction(den - i - j, den)))
        for i in range(den + 1)
        for j in range(den + 1 - i)
    ]


def main():
    order = WeakOrder.parse("a > b > c", "abc")
    lotteries = grid(4)
    tally = Counter()
    for p in lotteries:
        for q in lotteries:
            sd = sd_compare(order, p, q)
            pc = pc_compare(order, p, q)
            tally[sd.value, (pc > 0) - (pc < 0)] += 1
            if sd is SDResult.STRICTLY_DOMINATES:
                assert pc > 0
    print(f"{len(lotteries)} lotteries, {len(lotteries) ** 2} ordered pairs")
    for (sd, pc), count in sorted(tally.items()):
        print(f"  SD {sd:<18} PC sign {pc:+d}: {count}")
    p = Lottery((Fraction(1, 2), 0, Fraction(1, 2)))
    q = Lottery.degenerate(3, 1)
    print("a/c coin flip vs sure b:", sd_compare(order, p, q).value,
          "under SD, PC value", pc_compare(order, p, q))


if __name__ == "__main__":
    main()

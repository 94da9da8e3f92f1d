"""Maximal lotteries on a few small profiles.

Run: python3 demos/01_maximal_lotteries.py
"""

from maxlottery import Profile, aggregate
from maxlottery.mechanisms import MECHANISMS
from maxlottery.solver import condorcet_winner, uniqueness_analysis

PROFILES = {
    "majority cycle": Profile.from_rankings("abc", ["a > b > c", "b > c > a", "c > a > b"]),
    "Condorcet winner": Profile.from_rankings("abc", [(2, "a > b > c"), "b > c > a"]),
    "two opposed voters": Profile.from_rankings("ab", ["a > b", "b > a"]),
    "cycle above d": Profile.from_rankings(
        "abcd", ["a > b > c > d", "b > c > a > d", "c > a > b > d"]
    ),
}


def main():
    for name, profile in PROFILES.items():
        labels = profile.alternatives
        M = aggregate(profile)
        print(f"== {name}")
        print("margins:", [list(map(str, row)) for row in M.rows()])
        analysis = uniqueness_analysis(M)
        print("maximal lottery:", analysis.lex_choice.format(labels),
              "(unique)" if analysis.unique else "(not unique)")
        if not analysis.unique:
            for x, (lo, hi) in enumerate(analysis.ranges):
                print(f"  p({labels[x]}) ranges over [{lo}, {hi}]")
        winner = condorcet_winner(M)
        if winner is not None:
            print("Condorcet winner:", labels[winner])
        for mid, mech in MECHANISMS.items():
            print(f"  {mid:>8}: {mech(profile).format(labels)}")
        print()


if __name__ == "__main__":
    main()

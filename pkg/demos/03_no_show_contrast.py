"""Copeland (deterministic, Condorcet-consistent) against maximal lotteries:
a seeded search finds voters who gain under stochastic dominance by staying
home under Copeland, while the same profiles never help abstainers under ML.

Run: python3 demos/03_no_show_contrast.py
"""

from maxlottery.properties import check_ordinal_participation, verify_witness
from maxlottery.search import SearchBudget, audit_theorem


def main():
    budget = SearchBudget(4, 15, max_profiles=200_000, seed=42)
    report = audit_theorem("moulin-contrast", budget)
    print(report.to_record().to_text())
    w = report.witness
    print("independently re-verified:", verify_witness(w))
    print("maximal lotteries on the same profile:",
          "no witness" if check_ordinal_participation("ml", w.full_profile) is None else "witness")


if __name__ == "__main__":
    main()

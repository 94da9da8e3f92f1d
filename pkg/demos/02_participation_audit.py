"""Exhaustive participation audit of maximal lotteries on small electorates,
next to the same audit for Condorcet-or-uniform (CU), which fails it.

Run: python3 demos/02_participation_audit.py
"""

from maxlottery.search import SearchBudget, audit_theorem, deficit_of


def main():
    small = SearchBudget(3, 4, max_profiles=10_000)
    for campaign in ("thm1", "cor1", "prop1"):
        report = audit_theorem(campaign, small)
        print(f"{campaign:>5}: {report.outcome} over {report.scope['enumerated']} profiles")

    report = audit_theorem("cor2-contrapositive", SearchBudget(4, 6, max_profiles=200_000))
    w = report.witness
    print()
    print("CU participation witness at plan index", report.witness_index)
    print("full profile:")
    print(w.full_profile)
    print("abstaining group:", w.abstainers)
    labels = w.full_profile.alternatives
    print("outcome with group:   ", w.outcome_present.format(labels))
    print("outcome without group:", w.outcome_absent.format(labels))
    print("group welfare change from voting:", deficit_of(report))


if __name__ == "__main__":
    main()

"""Command-line front end: ``solve``, ``check``, ``search`` and ``audit``.

Exit codes: 0 success / property holds / campaign expectation met,
1 witness found (``check``, ``search``) or campaign expectation missed,
2 unreadable or malformed profile file, 3 unknown mechanism, property or
campaign id, 4 property or mechanism not applicable to the profile.
"""

import argparse
import sys

from . import __version__
from .algebra import aggregate
from .errors import (
    EmptyProfile,
    NonOrdinalProfile,
    NotSkewSymmetric,
    ParseError,
    UnknownCampaign,
    UnknownMechanism,
    UnknownProperty,
)
from .fileformat import parse_profile
from .mechanisms import get_mechanism
from .properties import get_property, run_property
from .reports import ReportRecord, to_plain
from .search import CAMPAIGNS, SearchBudget, audit_theorem, find_counterexample
from .solver import condorcet_winner, uniqueness_analysis

EXIT_OK, EXIT_WITNESS, EXIT_PARSE, EXIT_UNKNOWN, EXIT_MISMATCH = 0, 1, 2, 3, 4

# Campaign-specific defaults, used for flags left unset on the command line.
CAMPAIGN_DEFAULTS = {
    "thm1": dict(alts=3, voters=4, budget=10_000),
    "prop1": dict(alts=3, voters=4, budget=10_000),
    "cor1": dict(alts=3, voters=4, budget=10_000),
    "lemma1": dict(alts=4, voters=1, budget=1),
    "cor2-contrapositive": dict(alts=4, voters=6, budget=200_000),
    "cor3-contrapositive": dict(alts=4, voters=6, budget=20_000),
    "moulin-contrast": dict(alts=4, voters=15, budget=200_000, seed=42),
    "cu-inefficiency": dict(alts=4, voters=3, budget=10_000),
}


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    try:
        return parse_profile(text)
    except (ParseError, NotSkewSymmetric, EmptyProfile) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _emit(record, args):
    text = record.to_json() if args.format == "machine" else record.to_text()
    sys.stdout.write(text)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(record.to_json())


def cmd_solve(args):
    profile = _load(args.file)
    mech = get_mechanism(args.mechanism)
    try:
        lottery = mech(profile)
    except NonOrdinalProfile as exc:
        raise CliError(str(exc), EXIT_MISMATCH) from None
    labels = profile.alternatives
    M = aggregate(profile)
    winner = condorcet_winner(M)
    notes, details = [], []
    result = {"lottery": to_plain(lottery)}
    if mech.id == "ml":
        analysis = uniqueness_analysis(M)
        notes.append("unique" if analysis.unique else "not unique")
        result["unique"] = analysis.unique
        result["ranges"] = {
            labels[x]: [str(lo), str(hi)] for x, (lo, hi) in enumerate(analysis.ranges)
        }
        if not analysis.unique:
            details.extend(
                f"range {labels[x]}: [{lo}, {hi}]" for x, (lo, hi) in enumerate(analysis.ranges)
            )
    if winner is not None:
        notes.append(f"Condorcet winner: {labels[winner]}")
        result["condorcet_winner"] = labels[winner]
    line = lottery.format(labels)
    if notes:
        line += " (" + "; ".join(notes) + ")"
    record = ReportRecord(
        command="solve", mechanism=mech.id, outcome=line,
        scope={"alternatives": len(labels), "voters": profile.n},
        witness=None, details=details,
    )
    record.scope["result"] = result
    if args.format == "machine":
        _emit(record, args)
    else:
        sys.stdout.write(line + "\n")
        for d in details:
            sys.stdout.write(d + "\n")
    return EXIT_OK


def cmd_check(args):
    profile = _load(args.file)
    mech = get_mechanism(args.mechanism)
    get_property(args.property)
    try:
        violation = run_property(args.property, mech, profile)
    except NonOrdinalProfile as exc:
        raise CliError(str(exc), EXIT_MISMATCH) from None
    record = ReportRecord(
        command="check", mechanism=mech.id, property=args.property,
        scope={"alternatives": profile.size, "voters": profile.n},
        outcome="pass" if violation is None else "witness-found",
        witness=to_plain(violation),
    )
    _emit(record, args)
    return EXIT_OK if violation is None else EXIT_WITNESS


def _budget(args, defaults=None):
    defaults = defaults or {}

    def pick(name, fallback):
        value = getattr(args, name)
        return defaults.get(name, fallback) if value is None else value

    return SearchBudget(
        alternatives=pick("alts", 3),
        max_voters=pick("voters", 4),
        domain=args.domain,
        max_profiles=pick("budget", 10_000),
        seed=pick("seed", 0),
    )


def cmd_search(args):
    get_mechanism(args.mechanism)
    get_property(args.property)
    report = find_counterexample(args.mechanism, args.property, _budget(args))
    _emit(report.to_record(), args)
    return EXIT_WITNESS if report.outcome == "witness-found" else EXIT_OK


def cmd_audit(args):
    if args.campaign not in CAMPAIGNS:
        raise UnknownCampaign(
            f"unknown campaign {args.campaign!r}; choose from {', '.join(CAMPAIGNS)}"
        )
    budget = _budget(args, CAMPAIGN_DEFAULTS[args.campaign])
    report = audit_theorem(args.campaign, budget, workers=args.workers)
    _emit(report.to_record(), args)
    return EXIT_OK if report.expectation_met else EXIT_WITNESS


def build_parser():
    parser = argparse.ArgumentParser(
        prog="maxlottery",
        description="Maximal lotteries and exact axiom audits for randomized voting rules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--out", help="also write the machine-readable record here")

    def search_flags(p, sharded=False):
        p.add_argument("--alts", type=int)
        p.add_argument("--voters", type=int, help="maximum number of voters")
        p.add_argument("--domain", choices=("strict", "weak"), default="strict")
        p.add_argument("--budget", type=int, help="maximum number of profiles examined")
        p.add_argument("--seed", type=int)
        if sharded:
            p.add_argument("--workers", type=int, default=1,
                           help="worker processes; reports do not depend on this")

    p = sub.add_parser("solve", help="outcome lottery of a mechanism on a profile file")
    p.add_argument("file")
    p.add_argument("--mechanism", default="ml")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="check one property on one profile file")
    p.add_argument("file")
    p.add_argument("--mechanism", default="ml")
    p.add_argument("--property", required=True)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="counterexample search over generated profiles")
    p.add_argument("--mechanism", required=True)
    p.add_argument("--property", required=True)
    search_flags(p)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("audit", help="run a named audit campaign")
    p.add_argument("campaign")
    search_flags(p, sharded=True)
    common(p)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (UnknownMechanism, UnknownProperty, UnknownCampaign) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

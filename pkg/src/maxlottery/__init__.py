"""Maximal lotteries for SSB utility profiles, with exact axiom audits.

The public surface is re-exported here; see the submodules for details.
"""

__version__ = "0.1.0"

from .algebra import (
    Lottery,
    Profile,
    SSBMatrix,
    WeakOrder,
    aggregate,
    canonical_ssb,
    negate,
    replicate,
    ssb_value,
)
from .mechanisms import (
    MECHANISMS,
    copeland_mechanism,
    cu_mechanism,
    get_mechanism,
    ml_mechanism,
    rd_mechanism,
)
from .properties import (
    SDResult,
    check_cancellation,
    check_condorcet_consistency,
    check_ex_post_efficiency,
    check_homogeneity,
    check_ordinal_participation,
    check_participation,
    check_welfare_maximizing,
    pc_compare,
    sd_compare,
    verify_witness,
)
from .solver import (
    condorcet_winner,
    is_welfare_maximizing,
    lex_maximal,
    maximal_witness,
    uniqueness_analysis,
    verify_lemma1,
)

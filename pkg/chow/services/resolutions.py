# chow/services/resolutions.py

"""
CHERN CLASSES OF RESOLUTIONS

For 0 -> E -> L -> F -> 0 the character of F is ch(L) - ch(E):
positive terms are L, negative terms are E.
"""

from __future__ import annotations

from typing import Iterable

from chow.services.bundles import BundleTerm
from chow.services.chern import ChernTriple, chern_triple_of
from chow.services.chow_ring import ChowClass
from chow.services.exceptions import NegativeVirtualRankError


def resolution_chern(
    positive: Iterable[BundleTerm],
    negative: Iterable[BundleTerm],
) -> ChernTriple:
    positive, negative = list(positive), list(negative)

    rank = sum(t.rank for t in positive) - sum(t.rank for t in negative)
    if rank < 0:
        raise NegativeVirtualRankError(f"virtual rank {rank} is negative")

    ch = ChowClass()
    for term in positive:
        ch = ch + term.character()
    for term in negative:
        ch = ch - term.character()

    return chern_triple_of(ch)

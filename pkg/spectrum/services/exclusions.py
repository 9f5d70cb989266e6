# spectrum/services/exclusions.py

"""
UNREALIZED SPECTRA REGISTRY

Spectra that pass every enumeration rule but belong to no stable rank-2
reflexive sheaf. The reasons are theorems, not algorithms, so this is data:
a static table keyed by (c1, c2, sorted values), each entry with a citation.
"""

from __future__ import annotations

from types import MappingProxyType

EXCLUDED_SPECTRA = MappingProxyType(
    {
        (0, 4, (-2, -2, -1, 0)): (
            "Remark 2.3: no stable rank-2 reflexive sheaf with c1=0, c2=4 has "
            "spectrum {-2,-2,-1,0}; non-existence result recalled from prior work."
        ),
        (-1, 4, (-3, -3, -2, -1)): (
            "Remark 2.3, §1: R(-1,4,14) is empty, so no stable rank-2 reflexive "
            "sheaf has spectrum {-3,-3,-2,-1}."
        ),
    }
)


def lookup_exclusion(spectrum) -> str:
    """Citation for an excluded spectrum, or '' when none is registered."""
    return EXCLUDED_SPECTRA.get((spectrum.c1, spectrum.c2, tuple(spectrum.values)), "")


def exclusion_records() -> list[dict]:
    return [
        {
            "c1": c1,
            "c2": c2,
            "spectrum": list(values),
            "status": "unrealized",
            "citation": citation,
        }
        for (c1, c2, values), citation in sorted(EXCLUDED_SPECTRA.items())
    ]

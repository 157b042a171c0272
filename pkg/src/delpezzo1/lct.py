"""Log canonical thresholds of germs and of anticanonical configurations.

lct_germ resolves a squarefree germ by iterated blowups and takes the
minimum of (k_E + 1)/m_E over the exceptional divisors together with the
reciprocal component multiplicities.  lct_config evaluates the weighted
total transform D~ + Gamma: simple normal crossings contribute 1/m, and the
finitely many non-SNC local models (tangency, triple point, cusp) are fed
to the same engine with their weights.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ

from .blowup import BlowupNode, blowup_tree, lct_of_branches
from .cycles import AnticanonicalConfiguration, Meeting
from .errors import UnrecognizedConfigurationError
from .germs import CurveGerm, as_germ, ensure_squarefree


def _branches_of(germs: Sequence[tuple[CurveGerm | str, int]]):
    return [(ensure_squarefree(as_germ(g)).native_dict, w) for g, w in germs]


def lct_germ(g: CurveGerm | str) -> Fraction:
    """Log canonical threshold of a squarefree germ at the origin."""
    return lct_of_branches(_branches_of([(g, 1)]))


def lct_weighted_germs(germs: Sequence[tuple[CurveGerm | str, int]]) -> Fraction:
    """Threshold of a weighted union sum w_i f_i of pairwise coprime germs."""
    return lct_of_branches(_branches_of(germs))


def germ_blowup_tree(g: CurveGerm | str) -> list[BlowupNode]:
    """Resolution tree of a squarefree germ (root nodes; empty when SNC)."""
    return blowup_tree(_branches_of([(g, 1)]))


# local models for one meeting record, as branch dicts over QQ
_X = {(1, 0): QQ.one}
_Y = {(0, 1): QQ.one}
_CUSP = {(0, 2): QQ.one, (3, 0): -QQ.one}


def _line(slope: int) -> dict:
    return {(1, 0): QQ.one, (0, 1): QQ.convert(slope)}


def _local_branches(meeting: Meeting, mult_of) -> list[tuple[dict, int]]:
    weights = [mult_of(cid) for cid in meeting.members]
    if meeting.cuspidal:
        return [(_CUSP, weights[0])]
    if len(meeting.members) == 2:
        if meeting.contact == 1:
            return [(_X, weights[0]), (_Y, weights[1])]
        # two smooth branches with contact order c: y = 0 against y = x^c
        tangent = {(0, 1): QQ.one, (meeting.contact, 0): -QQ.one}
        return [(_Y, weights[0]), (tangent, weights[1])]
    if meeting.contact == 1:
        # pairwise transverse branches through one point: distinct lines
        lines = [_Y, _X] + [_line(s) for s in range(1, len(meeting.members) - 1)]
        return list(zip(lines, weights))
    raise UnrecognizedConfigurationError(
        f"no local model for meeting {meeting!r}"
    )


def lct_config(c: AnticanonicalConfiguration) -> Fraction:
    """Threshold of the weighted configuration sum m_i C_i.

    The minimum of the reciprocal multiplicities (the SNC answer) and of the
    engine values at every non-transverse meeting.
    """
    best = min(Fraction(1, comp.multiplicity) for comp in c.components)
    for meeting in c.incidence:
        best = min(best, lct_of_branches(_local_branches(meeting, c.multiplicity_of)))
    return best

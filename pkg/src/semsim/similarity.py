"""IC-based similarity measures, common-subsumer machinery and word lookup.

All operations are pure reads over a frozen taxonomy and an immutable IC
table, so unbounded concurrent callers are safe.

Two conventions deserve a note:

* ``lcs_ic`` defaults to the IC of the deepest common subsumer, where
  depth means the longest path from the root (ties resolved by taking the
  larger IC).  ``lcs_mode="max_ic"`` switches to the maximum IC over the
  whole common-subsumer set instead; the two disagree on multiple
  inheritance when an IC model is not monotone along ancestor chains.
* The disjoint common subsumers of a pair are the hyponym-minimal
  elements of its common-subsumer set: the members that have no other
  common subsumer below them.  A greedy sweep in descending depth order
  computes the same set only if every node is visited before all of its
  ancestors, which a minimum-distance depth does not guarantee on a DAG
  (an ancestor reached by a long path can sort deeper than its
  descendant), so membership is decided by the direct incomparability
  test rather than by sweep order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateTable, UnboundedIC, UnknownWord
from .ic import ICTable
from .taxonomy import SynsetId, Taxonomy


class SimMeasureId(str, Enum):
    RESNIK = "resnik"
    LIN = "lin"
    JIANG_CONRATH = "jiang_conrath"
    FAITH = "faith"
    BATET = "batet"
    PROPOSED = "proposed"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DcsSet:
    """Disjoint common subsumers of a pair, deepest first.

    Members all subsume both pair elements and are pairwise unrelated by
    the hyponym relation; the set is empty only when the pair shares no
    subsumer at all.
    """

    members: tuple[SynsetId, ...]
    for_pair: tuple[SynsetId, SynsetId]


def common_subsumers(t: Taxonomy, a: SynsetId, b: SynsetId) -> frozenset[SynsetId]:
    return t.subsumers(a) & t.subsumers(b)


def lcs_ic(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
           lcs_mode: str = "max_depth") -> float:
    """IC of the least common subsumer; 0 when the pair shares none."""
    cs = common_subsumers(t, a, b)
    if not cs:
        return 0.0
    if lcs_mode == "max_ic":
        return max(ic[c] for c in cs)
    if lcs_mode != "max_depth":
        raise ValueError(f"lcs_mode must be 'max_depth' or 'max_ic', got {lcs_mode!r}")
    deepest = max(t.stats[c].depth_longest for c in cs)
    return max(ic[c] for c in cs if t.stats[c].depth_longest == deepest)


def dcs(t: Taxonomy, a: SynsetId, b: SynsetId) -> DcsSet:
    """Hyponym-minimal common subsumers of the pair, deepest first.

    Every strict ancestor of a common subsumer is itself a common
    subsumer, so the minimal elements are exactly the suspects that are
    nobody's ancestor within the suspect set.
    """
    suspects = common_subsumers(t, a, b)
    ancestors_of_suspects: set[SynsetId] = set()
    for y in suspects:
        ancestors_of_suspects |= t.subsumers(y) - {y}
    kept = suspects - ancestors_of_suspects
    members = tuple(sorted(kept, key=lambda c: (-t.stats[c].depth, c)))
    return DcsSet(members=members, for_pair=(a, b))


def sim_resnik(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
               lcs_mode: str = "max_depth") -> float:
    return lcs_ic(t, ic, a, b, lcs_mode)


def sim_lin(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
            lcs_mode: str = "max_depth") -> float:
    denom = ic[a] + ic[b]
    if denom <= 0.0:
        return 0.0
    return 2.0 * lcs_ic(t, ic, a, b, lcs_mode) / denom


def sim_jiang_conrath(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
                      lcs_mode: str = "max_depth") -> float:
    """IC distance mapped linearly onto similarity: 1 - distance/2.

    Lands in [0, 1] when the IC table is bounded; unbounded tables keep
    the affine relation to the distance, which correlation studies rely
    on, but can go negative.
    """
    distance = ic[a] + ic[b] - 2.0 * lcs_ic(t, ic, a, b, lcs_mode)
    return 1.0 - distance / 2.0


def sim_faith(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
              lcs_mode: str = "max_depth") -> float:
    shared = lcs_ic(t, ic, a, b, lcs_mode)
    denom = ic[a] + ic[b] - shared
    if denom <= 0.0:
        return 0.0
    return shared / denom


def sim_batet(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
              lcs_mode: str = "max_depth") -> float:
    """Log-scaled IC distance against twice the table maximum."""
    if ic.max_ic <= 0.0:
        raise DegenerateTable(f"{ic.model} table has max_ic 0")
    distance = ic[a] + ic[b] - 2.0 * lcs_ic(t, ic, a, b, lcs_mode)
    return -math.log((distance + 1.0) / (2.0 * ic.max_ic), ic.config.log_base_absolute)


def sim_proposed(t: Taxonomy, ic: ICTable, a: SynsetId, b: SynsetId,
                 lcs_mode: str = "max_depth") -> float:
    """Mean over the disjoint common subsumers of their shared-IC ratios.

    Each member d contributes IC(d)/(IC(a)+1) + IC(d)/(IC(b)+1); an empty
    common-subsumer set scores 0.  Requires a bounded (or normalized)
    table so the result stays in [0, 1].
    """
    if not ic.bounded:
        raise UnboundedIC(
            f"{ic.model} values exceed [0, 1]; normalize the table first")
    members = dcs(t, a, b).members
    if not members:
        return 0.0
    ia1 = ic[a] + 1.0
    ib1 = ic[b] + 1.0
    total = 0.0
    for d in members:
        total += ic[d] / ia1 + ic[d] / ib1
    return total / len(members)


_DISPATCH = {
    SimMeasureId.RESNIK: sim_resnik,
    SimMeasureId.LIN: sim_lin,
    SimMeasureId.JIANG_CONRATH: sim_jiang_conrath,
    SimMeasureId.FAITH: sim_faith,
    SimMeasureId.BATET: sim_batet,
    SimMeasureId.PROPOSED: sim_proposed,
}


def pair_similarity(t: Taxonomy, ic: ICTable, measure: SimMeasureId,
                    a: SynsetId, b: SynsetId, lcs_mode: str = "max_depth") -> float:
    return _DISPATCH[SimMeasureId(measure)](t, ic, a, b, lcs_mode)


def word_similarity(t: Taxonomy, ic: ICTable, measure: SimMeasureId,
                    word1: str, word2: str, lcs_mode: str = "max_depth") -> float:
    """Maximum of the measure over the cross product of the words' senses."""
    score, _ = word_similarity_detail(t, ic, measure, word1, word2, lcs_mode)
    return score


def word_similarity_detail(
        t: Taxonomy, ic: ICTable, measure: SimMeasureId, word1: str, word2: str,
        lcs_mode: str = "max_depth") -> tuple[float, tuple[SynsetId, SynsetId]]:
    """Word similarity plus the sense pair attaining the maximum.

    Raises ``UnknownWord`` naming the first word without any noun sense.
    Ties keep the earliest pair in sense order, so results do not depend
    on dictionary hash order.
    """
    measure = SimMeasureId(measure)
    senses1 = t.senses(word1)
    if not senses1:
        raise UnknownWord(word1)
    senses2 = t.senses(word2)
    if not senses2:
        raise UnknownWord(word2)
    fn = _DISPATCH[measure]
    best = -math.inf
    best_pair = (senses1[0], senses2[0])
    for a in senses1:
        for b in senses2:
            value = fn(t, ic, a, b, lcs_mode)
            if value > best:
                best = value
                best_pair = (a, b)
    return best, best_pair

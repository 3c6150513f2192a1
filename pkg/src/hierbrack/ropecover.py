"""Rope covers: the structural/auxiliary split that drives every encoding.

A rope cover is a set of structural arcs such that every remaining arc
leans on one of them.  The proper rope cover (no structural arc leans on
another) is unique and minimal; the degenerate all-arcs cover reproduces
naive bracketing; the per-node longest-outgoing cover reproduces the 4-bit
encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .deptree import Arc, DepGraph, arc_sort_key, leans_on
from .errors import CoverError

MAX_BRUTE_FORCE_ARCS = 20


@dataclass(frozen=True)
class RopeCover:
    """Structural arcs plus, for each auxiliary arc, its designated supporter."""

    structural: frozenset[Arc]
    aux_support: Mapping[Arc, Arc] = field(default_factory=dict)

    def __post_init__(self):
        for aux, sup in self.aux_support.items():
            if aux in self.structural:
                raise ValueError(f"arc {aux} is both structural and auxiliary")
            if sup not in self.structural:
                raise ValueError(f"supporter {sup} of {aux} is not structural")
            if not leans_on(aux, sup):
                raise ValueError(f"arc {aux} does not lean on its supporter {sup}")

    def check(self, g: DepGraph) -> None:
        if not self.structural <= g.arcs:
            raise CoverError("structural arcs not a subset of the graph's arcs")
        if not is_rope_cover(g, self.structural):
            raise CoverError("structural set is not a rope cover of the graph")


def is_rope_cover(g: DepGraph, structural: Iterable[Arc]) -> bool:
    """True iff every arc outside ``structural`` leans on a member of it."""
    structural = set(structural)
    return all(
        any(leans_on(a, s) for s in structural)
        for a in g.arcs
        if a not in structural
    )


def is_proper(g: DepGraph, structural: Iterable[Arc]) -> bool:
    """True iff no cover member leans on another member (assumes a rope cover)."""
    structural = list(structural)
    return not any(
        leans_on(a, b) for a in structural for b in structural if a != b
    )


def is_compact(g: DepGraph, structural: Iterable[Arc]) -> bool:
    """True iff no node heads two structural arcs in the same direction and
    no node is the dependent of two structural arcs from the same direction."""
    seen_head: set[tuple[int, bool]] = set()
    seen_dep: set[tuple[int, bool]] = set()
    for a in structural:
        hk = (a.head, a.is_rightward)
        dk = (a.dep, a.is_rightward)
        if hk in seen_head or dk in seen_dep:
            return False
        seen_head.add(hk)
        seen_dep.add(dk)
    return True


def proper_rope_cover(g: DepGraph) -> RopeCover:
    """Compute the unique proper rope cover by the marking procedure.

    Repeatedly take, among unmarked arcs, the longest one with the leftmost
    left endpoint, mark it structural, and mark everything leaning on it as
    auxiliary.  Applies verbatim to any dependency graph, crossing or not.
    Each auxiliary arc records the structural arc that marked it first; a
    length-tie at the same left endpoint (a 2-cycle) resolves to the
    rightward arc.
    """
    unmarked = sorted(g.arcs, key=arc_sort_key)
    structural: set[Arc] = set()
    aux_support: dict[Arc, Arc] = {}
    while unmarked:
        pick = unmarked[0]
        structural.add(pick)
        rest = []
        for a in unmarked[1:]:
            if leans_on(a, pick):
                aux_support[a] = pick
            else:
                rest.append(a)
        unmarked = rest
    return RopeCover(frozenset(structural), aux_support)


def fourbit_rope_cover(t: DepGraph) -> RopeCover:
    """The cover behind the 4-bit encoding: the longest rightward and longest
    leftward arc going out of each node are structural.

    Intended for projective trees; the construction itself is well defined
    on any graph (auxiliary arcs always lean on the same-head longest arc in
    their direction).
    """
    longest: dict[tuple[int, bool], Arc] = {}
    for a in t.arcs:
        key = (a.head, a.is_rightward)
        best = longest.get(key)
        if best is None or a.length > best.length:
            longest[key] = a
    structural = frozenset(longest.values())
    aux_support = {
        a: longest[(a.head, a.is_rightward)]
        for a in t.arcs
        if a not in structural
    }
    return RopeCover(structural, aux_support)


def naive_rope_cover(g: DepGraph) -> RopeCover:
    """All arcs structural; induces the naive (non-hierarchical) bracketing."""
    return RopeCover(frozenset(g.arcs), {})


def min_rope_cover_size(g: DepGraph) -> int:
    """Minimum cardinality over all rope covers, by brute-force subset search.

    Testkit-grade oracle: enumerates subsets in increasing cardinality, so
    runtime is exponential; refuses graphs with more than
    ``MAX_BRUTE_FORCE_ARCS`` arcs.
    """
    arcs = sorted(g.arcs, key=arc_sort_key)
    m = len(arcs)
    if m > MAX_BRUTE_FORCE_ARCS:
        raise ValueError(f"brute force capped at {MAX_BRUTE_FORCE_ARCS} arcs, got {m}")
    if m == 0:
        return 0
    # supported_by[i]: bitmask of arcs that lean on arcs[i]
    supported_by = [0] * m
    for i, s in enumerate(arcs):
        mask = 0
        for j, a in enumerate(arcs):
            if i != j and leans_on(a, s):
                mask |= 1 << j
        supported_by[i] = mask
    full = (1 << m) - 1
    for k in range(m + 1):
        for combo in combinations(range(m), k):
            chosen = 0
            covered = 0
            for i in combo:
                chosen |= 1 << i
                covered |= supported_by[i]
            if full & ~chosen & ~covered == 0:
                return k
    return m  # unreachable: the full arc set is always a rope cover

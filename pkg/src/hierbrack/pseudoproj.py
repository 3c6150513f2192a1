"""Pseudo-projective transformation (Head scheme) and its inverse.

``projectivize`` repeatedly lifts the shortest non-projective arc (h, d) to
d's grandparent, annotating d's relation as ``orig↑headrel`` so the
lift can be undone.  ``deprojectivize`` searches breadth-first below each
annotated token's head for the nearest node carrying the recorded relation
and reattaches there.  The Head scheme is lossy by design: unresolvable
annotations are stripped with a diagnostic.
"""

from __future__ import annotations

from collections import deque

from .deptree import Arc, DepGraph, tree_violation

LIFT_SEP = "↑"


def _base(rel: str | None) -> str | None:
    if rel is None:
        return None
    return rel.split(LIFT_SEP, 1)[0]


def _descendants(children: list[list[int]], v: int) -> set[int]:
    out: set[int] = set()
    todo = [v]
    while todo:
        cur = todo.pop()
        for c in children[cur]:
            if c not in out:
                out.add(c)
                todo.append(c)
    return out


def _nonprojective_arcs(heads: list[int], n: int) -> list[Arc]:
    """Arcs (h, d) spanning a node outside h's descendants."""
    children: list[list[int]] = [[] for _ in range(n + 1)]
    for d in range(1, n + 1):
        children[heads[d]].append(d)
    bad = []
    for d in range(1, n + 1):
        h = heads[d]
        lo, hi = min(h, d), max(h, d)
        if hi - lo <= 1:
            continue
        desc = _descendants(children, h)
        if any(k not in desc for k in range(lo + 1, hi)):
            bad.append(Arc(h, d))
    return bad


def projectivize(t: DepGraph) -> DepGraph:
    """Lift crossing arcs until the tree is projective.

    Lift order: shortest non-projective arc first, ties by leftmost
    endpoint.  Each dependent's relation is annotated once, on its first
    lift.  The identity on projective trees.
    """
    reason = tree_violation(t)
    if reason is not None:
        raise ValueError(f"projectivize needs a tree: {reason}")
    n = t.n
    heads = [0] * (n + 1)
    for a in t.arcs:
        heads[a.dep] = a.head
    rels: list[str | None] = [None] + list(t.token_deprels())

    while True:
        bad = _nonprojective_arcs(heads, n)
        if not bad:
            break
        bad.sort(key=lambda a: (a.length, a.left, a.right))
        h, d = bad[0]
        if rels[d] is not None and LIFT_SEP not in rels[d]:
            rels[d] = f"{rels[d]}{LIFT_SEP}{_base(rels[h]) or ''}"
        heads[d] = heads[h]

    return DepGraph.from_heads(
        heads[1:], deprels=rels[1:], tokens=t.tokens, layout=t.layout
    )


def deprojectivize(t: DepGraph, collect: list[str] | None = None) -> DepGraph:
    """Undo Head-scheme lifts; unresolvable annotations are stripped.

    ``collect``, if given, receives one line per unresolved lift.
    """
    n = t.n
    heads = [0] * (n + 1)
    for a in t.arcs:
        heads[a.dep] = a.head
    rels: list[str | None] = [None] + list(t.token_deprels())
    children: list[list[int]] = [[] for _ in range(n + 1)]
    for d in range(1, n + 1):
        children[heads[d]].append(d)
    for c in children:
        c.sort()

    for d in range(1, n + 1):
        rel = rels[d]
        if rel is None or LIFT_SEP not in rel:
            continue
        orig, target_rel = rel.split(LIFT_SEP, 1)
        blocked = _descendants(children, d) | {d}
        found = None
        queue = deque(c for c in children[heads[d]] if c not in blocked)
        while queue:
            cand = queue.popleft()
            if _base(rels[cand]) == target_rel:
                found = cand
                break
            queue.extend(c for c in children[cand] if c not in blocked)
        if found is None:
            if collect is not None:
                collect.append(f"token {d}: no descendant with relation {target_rel!r}")
        else:
            children[heads[d]].remove(d)
            heads[d] = found
            children[found].append(d)
            children[found].sort()
        rels[d] = orig

    return DepGraph.from_heads(
        heads[1:], deprels=rels[1:], tokens=t.tokens, layout=t.layout
    )

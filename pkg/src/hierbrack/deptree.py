"""Dependency-graph data model and structural predicates.

Nodes are 0..n where node 0 is the dummy root.  An arc (head, dep) points
from head to dependent; node 0 never has a parent.  All types are immutable
after construction and every operation here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple


class Arc(NamedTuple):
    head: int
    dep: int

    @property
    def left(self) -> int:
        return self.head if self.head < self.dep else self.dep

    @property
    def right(self) -> int:
        return self.dep if self.head < self.dep else self.head

    @property
    def length(self) -> int:
        return abs(self.head - self.dep)

    @property
    def is_rightward(self) -> bool:
        return self.head < self.dep

    def __str__(self) -> str:
        return f"{self.head}→{self.dep}"


def arc_sort_key(a: Arc) -> tuple[int, int, int]:
    """Canonical arc order: (min endpoint, -length, rightward first)."""
    return (a.left, -a.length, 0 if a.is_rightward else 1)


def crosses(a: Arc, b: Arc) -> bool:
    """True iff the endpoints of a and b strictly interleave (symmetric)."""
    return (a.left < b.left < a.right < b.right) or (b.left < a.left < b.right < a.right)


def covers(a: Arc, b: Arc) -> bool:
    """True iff the span of a contains the span of b."""
    return a.left <= b.left and b.right <= a.right


def leans_on(b: Arc, a: Arc) -> bool:
    """True iff b leans on a: a covers b, they share an endpoint, and a != b."""
    if a == b:
        return False
    return covers(a, b) and (a.left == b.left or a.right == b.right)


@dataclass(frozen=True, eq=False)
class DepGraph:
    """A dependency graph over nodes 0..n.

    ``deprels`` optionally maps arcs to relation strings.  ``tokens`` and
    ``layout`` carry CoNLL-U surface material for round-tripping and are
    ignored by equality.
    """

    n: int
    arcs: frozenset[Arc]
    deprels: Mapping[Arc, str] | None = None
    tokens: tuple[tuple[str, ...], ...] | None = field(default=None, compare=False)
    layout: tuple[tuple[str, object], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        for a in self.arcs:
            if not (0 <= a.head <= self.n and 1 <= a.dep <= self.n):
                raise ValueError(f"arc {a} out of range for n={self.n}")
            if a.head == a.dep:
                raise ValueError(f"arc {a} is a self-loop")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DepGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.arcs == other.arcs
            and dict(self.deprels or {}) == dict(other.deprels or {})
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    @classmethod
    def from_heads(
        cls,
        heads: Iterable[int],
        deprels: Iterable[str | None] | None = None,
        tokens=None,
        layout=None,
    ) -> "DepGraph":
        """Build a graph from a head vector: heads[i] is the head of token i+1."""
        heads = tuple(heads)
        n = len(heads)
        arcs = frozenset(Arc(h, d) for d, h in enumerate(heads, start=1))
        rels = None
        if deprels is not None:
            rels = {
                Arc(h, d): r
                for (d, h), r in zip(enumerate(heads, start=1), deprels)
                if r is not None
            }
        return cls(n=n, arcs=arcs, deprels=rels, tokens=tokens, layout=layout)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs, key=arc_sort_key)

    def head_of(self, dep: int) -> int | None:
        """Head of ``dep``, or None; raises if ``dep`` has several heads."""
        found = [a.head for a in self.arcs if a.dep == dep]
        if len(found) > 1:
            raise ValueError(f"node {dep} has several heads")
        return found[0] if found else None

    def heads(self) -> tuple[int, ...]:
        """Head vector for tokens 1..n (requires a single head per token)."""
        out: list[int | None] = [None] * self.n
        for a in self.arcs:
            if out[a.dep - 1] is not None:
                raise ValueError(f"node {a.dep} has several heads")
            out[a.dep - 1] = a.head
        if any(h is None for h in out):
            missing = [i + 1 for i, h in enumerate(out) if h is None]
            raise ValueError(f"nodes without a head: {missing}")
        return tuple(out)  # type: ignore[return-value]

    def deprel_of(self, dep: int) -> str | None:
        if not self.deprels:
            return None
        for a, r in self.deprels.items():
            if a.dep == dep:
                return r
        return None

    def token_deprels(self) -> tuple[str | None, ...]:
        out: list[str | None] = [None] * self.n
        for a, r in (self.deprels or {}).items():
            out[a.dep - 1] = r
        return tuple(out)

    def form(self, i: int) -> str:
        if self.tokens is not None and 1 <= i <= len(self.tokens):
            return self.tokens[i - 1][1]
        return f"w{i}"


def tree_violation(g: DepGraph) -> str | None:
    """Reason g is not a tree, or None if it is one."""
    head: list[int | None] = [None] * (g.n + 1)
    for a in g.arcs:
        if head[a.dep] is not None:
            return f"node {a.dep} has two heads"
        head[a.dep] = a.head
    for i in range(1, g.n + 1):
        if head[i] is None:
            return f"node {i} has no head"
    # every chain of heads must reach node 0
    state = [0] * (g.n + 1)  # 0 unseen, 1 in progress, 2 done
    state[0] = 2
    for i in range(1, g.n + 1):
        path = []
        cur = i
        while state[cur] == 0:
            state[cur] = 1
            path.append(cur)
            cur = head[cur]  # type: ignore[assignment]
        if state[cur] == 1:
            return f"cycle through node {cur}"
        for p in path:
            state[p] = 2
    return None


def validate_tree(g: DepGraph) -> bool:
    """True iff g is single-headed, acyclic, and node 0 is parentless."""
    return tree_violation(g) is None


def find_crossing(arcs: Iterable[Arc]) -> tuple[Arc, Arc] | None:
    """Some crossing pair among ``arcs``, or None."""
    arcs = sorted(arcs, key=arc_sort_key)
    for i, a in enumerate(arcs):
        for b in arcs[i + 1 :]:
            if b.left >= a.right:
                break
            if crosses(a, b):
                return (a, b)
    return None


def is_projective(g: DepGraph) -> bool:
    """True iff the tree g has no crossing arcs.

    Rejects non-tree input; use ``find_crossing`` directly for graphs.
    """
    reason = tree_violation(g)
    if reason is not None:
        raise ValueError(f"is_projective needs a tree: {reason}")
    return find_crossing(g.arcs) is None


def is_projective_by_descendants(g: DepGraph) -> bool:
    """Projectivity via the equivalent definition: for every arc, all nodes
    between its endpoints are descendants of the head."""
    reason = tree_violation(g)
    if reason is not None:
        raise ValueError(f"is_projective needs a tree: {reason}")
    children: list[list[int]] = [[] for _ in range(g.n + 1)]
    for a in g.arcs:
        children[a.head].append(a.dep)
    desc: list[set[int] | None] = [None] * (g.n + 1)

    def collect(v: int) -> set[int]:
        memo = desc[v]
        if memo is not None:
            return memo
        acc: set[int] = set()
        for c in children[v]:
            acc.add(c)
            acc |= collect(c)
        desc[v] = acc
        return acc

    for a in g.arcs:
        dset = collect(a.head)
        for k in range(a.left + 1, a.right):
            if k not in dset:
                return False
    return True

"""Stack decoders turning label sequences back into dependency graphs.

Three entry points share one engine:

- ``decode_noncrossing``: single-pass stack matching for index-0 sequences.
  Closing semibrackets fetch the first superbracket on the stack (skipping
  opening semibrackets without removing them); closing superbrackets pop
  semibrackets, creating their arcs, until a superbracket is matched.
- ``decode_indexed``: the extension for arbitrary graphs.  A closing
  bracket with index i skips i matching stack entries; opening semibrackets
  passed over by a sweep are put back with their index decreased by one and
  are consumed (creating their arc) when it reaches zero.
- ``decode_robust``: same engine plus guarantees for garbage input:
  unmatched closers are discarded, over-large indices clamp to the deepest
  superbracket, and with ``want_tree`` arcs creating cycles or second heads
  are skipped at insertion (union-find with path compression and union by
  rank) and headless tokens are attached to the syntactic root afterwards.

When a sequence does not include a label for the root (the default emitted
by the encoders), closing brackets that exhaust the stack resolve against a
virtual open-right superbracket at position 0, reconstructing the
suppressed root label deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brackets import (
    CLOSE_LEFT,
    CLOSE_RIGHT,
    OPEN_LEFT,
    OPEN_RIGHT,
    LabelSequence,
    render_label,
)
from .deptree import Arc, DepGraph


@dataclass
class Diagnostic:
    pos: int
    symbol: str
    action: str

    def line(self) -> str:
        return f"{self.pos}\t{self.symbol}\t{self.action}"


@dataclass
class DecodeCounters:
    """Stack-operation accounting for the complexity assertions.

    ``pops`` counts terminal matched-superbracket removals (one per closing
    superbracket that finds its match, the virtual root included) and
    ``peeks`` counts closing-semibracket fetches that produced an arc, so on
    well-formed input pushes equals the number of opening symbols and
    pops + peeks equals the number of closing symbols.  ``semi_pops`` counts
    semibrackets consumed during sweeps; ``puts`` counts entries a sweep
    passes over and leaves in place (each such reposition is one in-place
    operation: an index decrement or a step deeper).
    """

    pushes: int = 0
    pops: int = 0
    peeks: int = 0
    semi_pops: int = 0
    puts: int = 0
    max_super_depth: int = 0

    @property
    def total_ops(self) -> int:
        return self.pushes + self.pops + self.peeks + self.semi_pops + self.puts


class _Entry:
    __slots__ = ("shape", "is_super", "index", "pos")

    def __init__(self, shape: str, is_super: bool, index: int, pos: int):
        self.shape = shape
        self.is_super = is_super
        self.index = index
        self.pos = pos


class DecodeStack:
    """Decode stack holding only opening symbols, with instrumentation.

    Besides push/pop/peek it supports the indexed extension's primitives:
    fetching the i-th entry from the top satisfying a predicate, removing
    it, and re-inserting an entry at a given depth.
    """

    def __init__(self, counters: DecodeCounters):
        self.entries: list[_Entry] = []
        self.super_count = 0
        self.c = counters

    def __len__(self) -> int:
        return len(self.entries)

    def push(self, entry: _Entry) -> None:
        self.entries.append(entry)
        self.c.pushes += 1
        if entry.is_super:
            self.super_count += 1
            if self.super_count > self.c.max_super_depth:
                self.c.max_super_depth = self.super_count

    def at_depth(self, depth: int) -> _Entry | None:
        """Entry at 1-based depth from the top, or None past the bottom."""
        if depth > len(self.entries):
            return None
        return self.entries[-depth]

    def remove_at(self, depth: int) -> _Entry:
        entry = self.entries[-depth]
        del self.entries[-depth]
        if entry.is_super:
            self.super_count -= 1
        return entry

    def put_at(self, entry: _Entry, depth: int) -> None:
        """Insert so that ``entry`` ends up at 1-based ``depth`` from the top."""
        self.entries.insert(len(self.entries) - depth + 1, entry)
        if entry.is_super:
            self.super_count += 1

    def fetch_super(self, rank: int) -> _Entry | None:
        """The rank-th superbracket from the top (1-based), skipping semis."""
        seen = 0
        for entry in reversed(self.entries):
            if entry.is_super:
                seen += 1
                if seen == rank:
                    return entry
        return None


@dataclass
class DecodeRun:
    graph: DepGraph
    diagnostics: list[Diagnostic] = field(default_factory=list)
    counters: DecodeCounters = field(default_factory=DecodeCounters)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)


def run_decoder(
    ls: LabelSequence, *, indexed: bool = True, want_tree: bool = False
) -> DecodeRun:
    """Decode a label sequence, returning graph, diagnostics, and counters."""
    n = ls.n
    counters = DecodeCounters()
    stack = DecodeStack(counters)
    diags: list[Diagnostic] = []
    implicit_root = not ls.includes_root

    arcs: list[Arc] = []
    arc_set: set[Arc] = set()
    head_of: dict[int, int] = {}
    uf = _UnionFind(n + 1) if want_tree else None

    def add_arc(head: int, dep: int, pos: int, symtext: str) -> None:
        if dep == 0:
            diags.append(Diagnostic(pos, symtext, "dropped arc into node 0"))
            return
        arc = Arc(head, dep)
        if want_tree:
            if dep in head_of:
                diags.append(
                    Diagnostic(pos, symtext, f"skipped {arc}: {dep} already has a head")
                )
                return
            if uf.connected(head, dep):
                diags.append(
                    Diagnostic(pos, symtext, f"skipped {arc}: would create a cycle")
                )
                return
            uf.union(head, dep)
            head_of[dep] = head
            arcs.append(arc)
            arc_set.add(arc)
        else:
            if arc in arc_set:
                diags.append(Diagnostic(pos, symtext, f"duplicate arc {arc} ignored"))
                return
            arc_set.add(arc)
            arcs.append(arc)

    positions = range(0, n + 1) if ls.includes_root else range(1, n + 1)
    for pos, label in zip(positions, ls.labels):
        for sym in label:
            text = sym.text
            index = sym.index
            if index and not indexed:
                diags.append(Diagnostic(pos, text, "index ignored (index-0 decoder)"))
                index = 0

            if sym.is_opening:
                stack.push(_Entry(sym.shape, sym.is_super, index, pos))
                continue

            if not sym.is_super:
                # closing semibracket: fetch, do not remove
                rank = index + 1
                avail = stack.super_count
                root_ok = implicit_root and sym.shape == CLOSE_RIGHT
                if root_ok:
                    avail += 1
                if rank > avail:
                    if avail == 0:
                        diags.append(Diagnostic(pos, text, "discarded: no superbracket"))
                        continue
                    diags.append(
                        Diagnostic(pos, text, "index clamped to deepest superbracket")
                    )
                    rank = avail
                target = stack.fetch_super(rank)
                counters.peeks += 1
                j = target.pos if target is not None else 0  # virtual root
                if sym.shape == CLOSE_RIGHT:
                    add_arc(j, pos, pos, text)
                else:
                    add_arc(pos, j, pos, text)
                continue

            # closing superbracket
            if indexed:
                _sweep_indexed(stack, sym.shape, index, pos, text, implicit_root,
                               add_arc, diags, counters)
            else:
                _sweep_plain(stack, sym.shape, pos, text, implicit_root,
                             add_arc, diags, counters)

    for entry in stack.entries:
        diags.append(
            Diagnostic(
                entry.pos,
                _entry_text(entry),
                "left unmatched on the stack, no arc",
            )
        )

    deprels: dict[Arc, str] = {}
    if ls.deprels is not None:
        for arc in arcs:
            rel = ls.deprels[arc.dep - 1]
            if rel is not None:
                deprels[arc] = rel

    if want_tree:
        # syntactic root: node 0's unique dependent if exactly one, else node 0
        root_deps = [a.dep for a in arcs if a.head == 0]
        syn_root = root_deps[0] if len(root_deps) == 1 else 0
        for i in range(1, n + 1):
            if i in head_of:
                continue
            target = syn_root
            arc = Arc(target, i)
            uf.union(target, i)
            head_of[i] = target
            arcs.append(arc)
            diags.append(
                Diagnostic(i, "", f"headless token attached to syntactic root {target}")
            )
            if ls.deprels is not None and ls.deprels[i - 1] is not None:
                deprels[arc] = ls.deprels[i - 1]

    graph = DepGraph(n=n, arcs=frozenset(arcs), deprels=deprels or None)
    return DecodeRun(graph=graph, diagnostics=diags, counters=counters)


def _entry_text(entry: _Entry) -> str:
    return entry.shape + ("*" if entry.is_super else "") + (
        str(entry.index) if entry.index else ""
    )


def _sweep_plain(stack, shape, pos, text, implicit_root, add_arc, diags, counters):
    """CloseSuperbracket of the noncrossing algorithm: pop semibrackets,
    creating their arcs, until the first superbracket, matched by direction."""
    while True:
        if len(stack) == 0:
            if shape == CLOSE_RIGHT and implicit_root:
                counters.pops += 1
                add_arc(0, pos, pos, text)
            else:
                diags.append(Diagnostic(pos, text, "discarded: stack exhausted"))
            return
        entry = stack.remove_at(1)
        if not entry.is_super:
            counters.semi_pops += 1
            if entry.index:
                diags.append(
                    Diagnostic(pos, _entry_text(entry), "index ignored (index-0 decoder)")
                )
            if entry.shape == OPEN_LEFT:
                add_arc(pos, entry.pos, pos, text)
            else:
                add_arc(entry.pos, pos, pos, text)
            continue
        counters.pops += 1
        if entry.shape == OPEN_LEFT and shape == CLOSE_LEFT:
            add_arc(pos, entry.pos, pos, text)
        elif entry.shape == OPEN_RIGHT and shape == CLOSE_RIGHT:
            add_arc(entry.pos, pos, pos, text)
        else:
            diags.append(
                Diagnostic(pos, text, f"direction mismatch with {_entry_text(entry)}, no arc")
            )
        return


def _sweep_indexed(stack, shape, rind, pos, text, implicit_root, add_arc, diags, counters):
    """CloseSuperbracket of the indexed extension.

    Walks down from the top: index-0 opening semibrackets are consumed
    (creating their arcs), indexed ones are put back with index - 1,
    superbrackets of the matching direction consume one unit of the
    closer's index or terminate the sweep, and superbrackets of the other
    direction are passed over untouched.
    """
    want_open = OPEN_RIGHT if shape == CLOSE_RIGHT else OPEN_LEFT
    depth = 1
    while True:
        entry = stack.at_depth(depth)
        if entry is None:
            if rind == 0 and shape == CLOSE_RIGHT and implicit_root:
                counters.pops += 1
                add_arc(0, pos, pos, text)
            else:
                diags.append(Diagnostic(pos, text, "discarded: stack exhausted"))
            return
        if not entry.is_super:
            if entry.index > 0:
                # put back at the same depth with its index decreased
                entry.index -= 1
                counters.puts += 1
                depth += 1
            else:
                stack.remove_at(depth)
                counters.semi_pops += 1
                if entry.shape == OPEN_LEFT:
                    add_arc(pos, entry.pos, pos, text)
                else:
                    add_arc(entry.pos, pos, pos, text)
            continue
        if entry.shape == want_open:
            if rind == 0:
                stack.remove_at(depth)
                counters.pops += 1
                if shape == CLOSE_RIGHT:
                    add_arc(entry.pos, pos, pos, text)
                else:
                    add_arc(pos, entry.pos, pos, text)
                return
            rind -= 1
        counters.puts += 1
        depth += 1


def decode_noncrossing(ls: LabelSequence) -> DepGraph:
    """Decode an index-0 sequence (the noncrossing algorithm verbatim)."""
    return run_decoder(ls, indexed=False, want_tree=False).graph


def decode_indexed(ls: LabelSequence) -> DepGraph:
    """Decode any sequence, honouring bracket indices (arbitrary graphs)."""
    return run_decoder(ls, indexed=True, want_tree=False).graph


def decode_robust(
    ls: LabelSequence, want_tree: bool = True
) -> tuple[DepGraph, list[Diagnostic]]:
    """Decode arbitrary, possibly garbage label sequences.

    With ``want_tree`` the output always satisfies ``validate_tree``; the
    diagnostics enumerate every dropped symbol and forced attachment.
    """
    run = run_decoder(ls, indexed=True, want_tree=want_tree)
    return run.graph, run.diagnostics

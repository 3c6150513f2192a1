"""Combinatorial oracles: exhaustive tree enumeration and seeded sampling.

Enumeration walks all head vectors {1..n} -> {0..n} and keeps the ones that
form trees, so it is duplicate-free and exhaustive by construction; the cap
at n = 7 keeps the 8^7 candidate space tractable.  Sampling rejects invalid
head vectors, which is uniform over labeled trees (every tree is exactly
one head vector) though not over unlabeled shapes.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from .deptree import DepGraph, find_crossing, Arc

MAX_ENUM_TOKENS = 7


def heads_form_tree(heads: tuple[int, ...]) -> bool:
    """True iff the head vector is acyclic (every chain reaches node 0)."""
    n = len(heads)
    state = [0] * (n + 1)  # 0 unseen, 1 on current chain, 2 known good
    state[0] = 2
    for start in range(1, n + 1):
        cur = start
        chain = []
        while state[cur] == 0:
            state[cur] = 1
            chain.append(cur)
            cur = heads[cur - 1]
        if state[cur] == 1:
            return False
        for node in chain:
            state[node] = 2
    return True


def _heads_projective(heads: tuple[int, ...]) -> bool:
    arcs = [Arc(h, d) for d, h in enumerate(heads, start=1)]
    return find_crossing(arcs) is None


def enumerate_head_vectors(
    n: int, projective_only: bool = False
) -> Iterator[tuple[int, ...]]:
    """All tree head vectors for n tokens, in lexicographic order."""
    if n > MAX_ENUM_TOKENS:
        raise ValueError(f"exhaustive enumeration capped at n={MAX_ENUM_TOKENS}")
    if n == 0:
        yield ()
        return
    for heads in product(range(n + 1), repeat=n):
        if not heads_form_tree(heads):
            continue
        if projective_only and not _heads_projective(heads):
            continue
        yield heads


def enumerate_trees(n: int, projective_only: bool = False) -> Iterator[DepGraph]:
    """All dependency trees with n tokens, optionally projective only."""
    for heads in enumerate_head_vectors(n, projective_only):
        yield DepGraph.from_heads(heads)


def random_heads(
    n: int, rng: random.Random, allow_nonprojective: bool = True
) -> tuple[int, ...]:
    while True:
        heads = tuple(rng.randint(0, n) for _ in range(n))
        if not heads_form_tree(heads):  # self-loops read as cycles
            continue
        if not allow_nonprojective and not _heads_projective(heads):
            continue
        return heads


def random_tree(n: int, seed: int, allow_nonprojective: bool = True) -> DepGraph:
    """A random n-token tree, deterministic per seed."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    rng = random.Random(seed)
    return DepGraph.from_heads(random_heads(n, rng, allow_nonprojective))

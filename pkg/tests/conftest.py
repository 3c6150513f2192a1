"""Shared fixtures: the worked-example trees and cached enumerations."""

from __future__ import annotations

import functools
import random

import pytest

from hierbrack.deptree import DepGraph
from hierbrack.testkit import enumerate_head_vectors, random_heads

# The running example tree (nodes 0..7): 0->4, 0->1, 4->2, 4->3, 4->7,
# 7->6, 6->5.  Its proper rope cover is {0->4, 4->7, 6->5}.
EXAMPLE_HEADS = (0, 4, 4, 0, 6, 7, 4)

# The step-by-step non-projective example, 0-based (the figure's node 1 is
# the root): 0->6, 0->2, 2->7, 3->8, 6->1, 6->3, 7->4, 8->5.
STEPWISE_HEADS = (6, 0, 6, 7, 8, 0, 2, 3)
STEPWISE_LABELS = ["/*", "<", ">/*", "/*<", "<1", "<2", ">*2", ">*1", ">*"]

# The 14-node complex non-projective example, 0-based.
COMPLEX_HEADS = (6, 0, 6, 7, 8, 0, 2, 3, 13, 8, 8, 8, 10)
COMPLEX_LABELS = ["/*", "<", ">/*", "/*<", "<1", "<2", ">*2", ">*1",
                  ">*/*", "<*", ">1/1", ">1", ">*", "\\*"]


@pytest.fixture
def example_tree() -> DepGraph:
    return DepGraph.from_heads(EXAMPLE_HEADS)


@pytest.fixture
def stepwise_tree() -> DepGraph:
    return DepGraph.from_heads(STEPWISE_HEADS)


@pytest.fixture
def complex_tree() -> DepGraph:
    return DepGraph.from_heads(COMPLEX_HEADS)


@functools.lru_cache(maxsize=None)
def head_vectors(n: int, projective_only: bool = False) -> tuple[tuple[int, ...], ...]:
    return tuple(enumerate_head_vectors(n, projective_only))


def all_trees_up_to(n_max: int, projective_only: bool = False):
    for n in range(1, n_max + 1):
        for heads in head_vectors(n, projective_only):
            yield DepGraph.from_heads(heads)


def random_corpus(
    count: int, n_max: int, seed: int, nonprojective: bool = True, with_rels: bool = True
) -> list[DepGraph]:
    rng = random.Random(seed)
    rels = ("nsubj", "obj", "obl", "nmod", "det", "amod", "advmod", "case")
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        heads = random_heads(n, rng, allow_nonprojective=nonprojective)
        deprels = [rels[rng.randrange(len(rels))] for _ in range(n)] if with_rels else None
        out.append(DepGraph.from_heads(heads, deprels=deprels))
    return out


@pytest.fixture(scope="session")
def mixed_corpus() -> list[DepGraph]:
    return random_corpus(300, 12, seed=20240601)


@pytest.fixture(scope="session")
def projective_corpus() -> list[DepGraph]:
    return random_corpus(200, 10, seed=20240602, nonprojective=False)

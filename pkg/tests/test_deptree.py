import pytest
from hypothesis import given, strategies as st

from hierbrack.deptree import (
    Arc,
    DepGraph,
    covers,
    crosses,
    is_projective,
    is_projective_by_descendants,
    leans_on,
    tree_violation,
    validate_tree,
)

from conftest import EXAMPLE_HEADS, STEPWISE_HEADS, all_trees_up_to


def test_crosses_examples():
    assert crosses(Arc(1, 4), Arc(2, 5))
    assert not crosses(Arc(0, 4), Arc(4, 2))
    assert crosses(Arc(3, 8), Arc(4, 9))


def test_crosses_symmetric():
    assert crosses(Arc(2, 5), Arc(1, 4))


def test_covers_examples():
    assert covers(Arc(0, 4), Arc(4, 2))
    assert covers(Arc(3, 7), Arc(3, 7))
    assert not covers(Arc(1, 3), Arc(2, 5))


def test_leans_on_examples():
    # the running example: 0->4 supports 0->1 and 4->3; 6->5 leans on nothing
    assert leans_on(Arc(0, 1), Arc(0, 4))
    assert leans_on(Arc(4, 3), Arc(0, 4))
    assert not leans_on(Arc(6, 5), Arc(4, 7))
    assert not leans_on(Arc(0, 4), Arc(0, 4))


arcs_st = st.builds(
    Arc,
    st.integers(min_value=0, max_value=9),
    st.integers(min_value=1, max_value=9),
).filter(lambda a: a.head != a.dep)


@given(arcs_st, arcs_st)
def test_crosses_covers_exclusive(a, b):
    assert not (crosses(a, b) and covers(a, b))
    assert not (crosses(a, b) and covers(b, a))


@given(arcs_st, arcs_st)
def test_leans_on_implies_covers(a, b):
    if leans_on(a, b):
        assert covers(b, a)


def test_is_projective_examples(example_tree, stepwise_tree):
    assert is_projective(example_tree)
    assert not is_projective(stepwise_tree)
    assert is_projective(DepGraph.from_heads((0,)))


def test_is_projective_rejects_non_tree():
    g = DepGraph(n=2, arcs=frozenset({Arc(1, 2), Arc(2, 1)}))
    with pytest.raises(ValueError):
        is_projective(g)


def test_projectivity_definitions_agree_exhaustively():
    # crossing-freeness vs the descendants definition, all trees n <= 6;
    # n = 7 is covered by the acceptance suite's enumeration
    for g in all_trees_up_to(6):
        assert is_projective(g) == is_projective_by_descendants(g)


def test_validate_tree_examples():
    assert validate_tree(DepGraph.from_heads((0, 1)))
    cyclic = DepGraph(n=2, arcs=frozenset({Arc(1, 2), Arc(2, 1)}))
    assert not validate_tree(cyclic)
    assert "cycle" in tree_violation(cyclic)
    two_heads = DepGraph(n=2, arcs=frozenset({Arc(0, 1), Arc(0, 2), Arc(1, 2)}))
    assert not validate_tree(two_heads)
    assert "two heads" in tree_violation(two_heads)
    headless = DepGraph(n=2, arcs=frozenset({Arc(0, 1)}))
    assert "no head" in tree_violation(headless)


def test_arc_invariants():
    with pytest.raises(ValueError):
        DepGraph(n=2, arcs=frozenset({Arc(1, 1)}))
    with pytest.raises(ValueError):
        DepGraph(n=2, arcs=frozenset({Arc(1, 0)}))  # node 0 never has a parent
    with pytest.raises(ValueError):
        DepGraph(n=2, arcs=frozenset({Arc(0, 3)}))


def test_heads_roundtrip(example_tree):
    assert DepGraph.from_heads(example_tree.heads()) == example_tree
    assert example_tree.heads() == EXAMPLE_HEADS

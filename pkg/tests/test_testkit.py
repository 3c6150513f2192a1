import pytest

from hierbrack.deptree import is_projective, is_projective_by_descendants, validate_tree
from hierbrack.testkit import enumerate_head_vectors, enumerate_trees, random_tree


def test_single_token():
    assert list(enumerate_head_vectors(1)) == [(0,)]


def test_two_tokens():
    trees = list(enumerate_head_vectors(2))
    assert trees == [(0, 0), (0, 1), (2, 0)]
    assert all(is_projective(t) for t in enumerate_trees(2))


def test_counts_match_direct_filtering():
    # duplicate-free and exhaustive: (n+1)^(n-1) trees for n tokens
    for n, expect in [(1, 1), (2, 3), (3, 16), (4, 125), (5, 1296)]:
        vecs = list(enumerate_head_vectors(n))
        assert len(vecs) == expect
        assert len(set(vecs)) == expect


def test_projective_filter_cross_checked():
    for n in (3, 4, 5):
        by_crossing = sum(1 for _ in enumerate_head_vectors(n, projective_only=True))
        by_descendants = sum(
            1 for t in enumerate_trees(n) if is_projective_by_descendants(t)
        )
        assert by_crossing == by_descendants


def test_enumeration_cap():
    with pytest.raises(ValueError):
        next(enumerate_head_vectors(8))


def test_random_tree_deterministic():
    assert random_tree(9, seed=123) == random_tree(9, seed=123)
    assert random_tree(9, seed=123) != random_tree(9, seed=124)


def test_random_trees_valid_and_sometimes_nonprojective():
    nonproj = 0
    for seed in range(2000):
        t = random_tree(10, seed=seed)
        assert validate_tree(t)
        if not is_projective(t):
            nonproj += 1
    assert nonproj > 0


def test_random_tree_projective_only():
    for seed in range(200):
        assert is_projective(random_tree(8, seed=seed, allow_nonprojective=False))

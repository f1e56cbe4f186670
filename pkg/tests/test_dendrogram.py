import random
from fractions import Fraction
from itertools import combinations

import pytest

from ultrametric import (
    Leaf,
    Merge,
    brute_force_isometry,
    canonicalize,
    encoding,
    from_dendrogram,
    isometric,
    isometry_witness,
    leaf_labels,
    random_space,
    spectrum,
    to_dendrogram,
    validate_ultrametric,
)
from ultrametric.errors import MalformedTree

from conftest import SIX_VALUES, make_space


def lca_height(node, a, b):
    """Independent LCA evaluation: recurse into the child containing both."""
    if isinstance(node, Leaf):
        return Fraction(0)
    for child in node.children:
        names = set(leaf_labels(child))
        if a in names and b in names:
            return lca_height(child, a, b)
    return node.height


def assert_tree_matches_space(tree, space):
    for a, b in combinations(space.labels, 2):
        assert lca_height(tree, a, b) == space.d(a, b)


class TestToDendrogram:
    def test_single_point(self):
        tree = to_dendrogram(validate_ultrametric(["a"], [["0"]]))
        assert tree == Leaf("a")

    def test_two_points(self):
        tree = to_dendrogram(make_space("ab", {("a", "b"): 1}))
        assert isinstance(tree, Merge)
        assert tree.height == 1
        assert set(leaf_labels(tree)) == {"a", "b"}

    def test_isosceles_shape(self, isosceles):
        tree = to_dendrogram(isosceles)
        assert tree.height == 2
        first, second = tree.children
        assert first == Leaf("c")  # leaves sort before internal nodes
        assert isinstance(second, Merge) and second.height == 1
        assert_tree_matches_space(tree, isosceles)

    def test_lca_metric_reproduces_random_matrices(self):
        rng = random.Random(11)
        for _ in range(60):
            space = random_space(rng.randint(1, 8), SIX_VALUES, rng.randrange(10**9))
            assert_tree_matches_space(to_dendrogram(space), space)


class TestFromDendrogram:
    def test_single_leaf(self):
        space = from_dendrogram(Leaf("a"))
        assert space.labels == ("a",)

    def test_two_leaves(self):
        space = from_dendrogram(Merge(Fraction(1), (Leaf("a"), Leaf("b"))))
        assert space.d("a", "b") == 1

    def test_nested(self, isosceles):
        tree = Merge(
            Fraction(2), (Leaf("c"), Merge(Fraction(1), (Leaf("a"), Leaf("b"))))
        )
        assert isometric(from_dendrogram(tree), isosceles)

    def test_roundtrip_is_isometric(self):
        rng = random.Random(12)
        for _ in range(60):
            space = random_space(rng.randint(1, 8), SIX_VALUES, rng.randrange(10**9))
            assert isometric(from_dendrogram(to_dendrogram(space)), space)

    def test_malformed_trees(self):
        with pytest.raises(MalformedTree):  # child height not below parent
            from_dendrogram(
                Merge(Fraction(1), (Leaf("a"), Merge(Fraction(1), (Leaf("b"), Leaf("c")))))
            )
        with pytest.raises(MalformedTree):  # single child
            from_dendrogram(Merge(Fraction(1), (Leaf("a"),)))
        with pytest.raises(MalformedTree):  # nonpositive height
            from_dendrogram(Merge(Fraction(0), (Leaf("a"), Leaf("b"))))
        with pytest.raises(MalformedTree):  # duplicate leaf labels
            from_dendrogram(Merge(Fraction(1), (Leaf("a"), Leaf("a"))))


class TestIsometry:
    def test_relabeled_copy(self, isosceles):
        relabeled = validate_ultrametric(["u", "v", "w"], isosceles.dist)
        witness = isometry_witness(isosceles, relabeled)
        assert witness is not None
        for a in isosceles.labels:
            for b in isosceles.labels:
                assert isosceles.d(a, b) == relabeled.d(witness[a], witness[b])

    def test_different_spectra(self, isosceles):
        other = make_space("abc", {("a", "b"): 1, ("a", "c"): 3, ("b", "c"): 3})
        assert not isometric(isosceles, other)

    def test_equal_spectra_different_shapes(self):
        # two pairs at 1 vs one pair at 1: both have spectrum {0, 1, 2}
        pairs = make_space(
            "abcd",
            {("a", "b"): 1, ("c", "d"): 1, ("a", "c"): 2, ("a", "d"): 2,
             ("b", "c"): 2, ("b", "d"): 2},
        )
        lopsided = make_space(
            "abcd",
            {("a", "b"): 1, ("c", "d"): 2, ("a", "c"): 2, ("a", "d"): 2,
             ("b", "c"): 2, ("b", "d"): 2},
        )
        assert spectrum(pairs) == spectrum(lopsided)
        assert brute_force_isometry(pairs, lopsided) is None
        assert not isometric(pairs, lopsided)

    def test_agrees_with_brute_force_on_random_pairs(self):
        rng = random.Random(13)
        for _ in range(200):
            x = random_space(rng.randint(1, 6), SIX_VALUES, rng.randrange(10**9))
            y = random_space(rng.randint(1, 6), SIX_VALUES, rng.randrange(10**9))
            expected = brute_force_isometry(x, y)
            witness = isometry_witness(x, y)
            assert (witness is None) == (expected is None)
            if witness is not None:
                for a in x.labels:
                    for b in x.labels:
                        assert x.d(a, b) == y.d(witness[a], witness[b])

    def test_isometry_implies_equal_spectra(self):
        rng = random.Random(14)
        for _ in range(100):
            x = random_space(rng.randint(1, 6), SIX_VALUES, rng.randrange(10**9))
            y = random_space(rng.randint(1, 6), SIX_VALUES, rng.randrange(10**9))
            if isometric(x, y):
                assert spectrum(x) == spectrum(y)

    def test_relabeled_random_spaces_are_isometric(self):
        rng = random.Random(15)
        for _ in range(50):
            x = random_space(rng.randint(2, 7), SIX_VALUES, rng.randrange(10**9))
            shuffled = list(range(len(x)))
            rng.shuffle(shuffled)
            labels = [f"r{k}" for k in range(len(x))]
            matrix = [
                [x.dist[shuffled[i]][shuffled[j]] for j in range(len(x))]
                for i in range(len(x))
            ]
            assert isometric(x, validate_ultrametric(labels, matrix))


class TestCanonicalForm:
    def test_canonical_encoding_ignores_labels(self, isosceles):
        relabeled = validate_ultrametric(["z", "y", "x"], isosceles.dist)
        assert encoding(to_dendrogram(isosceles)) == encoding(to_dendrogram(relabeled))

    def test_canonicalize_is_idempotent(self):
        rng = random.Random(16)
        for _ in range(30):
            space = random_space(rng.randint(1, 8), SIX_VALUES, rng.randrange(10**9))
            tree = to_dendrogram(space)
            assert canonicalize(tree) == tree

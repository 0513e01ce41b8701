"""Graph model: construction rules, weight lookup, cliques, colorings."""

import random

import pytest

from ewmcp.errors import InputError
from ewmcp.graph import (
    Clique,
    Coloring,
    WeightedGraph,
    is_clique,
    total_edge_weight,
    validate_coloring,
)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(InputError, match="self-loop"):
            WeightedGraph(3, [(1, 1, 2)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(InputError, match="duplicate"):
            WeightedGraph(3, [(1, 2, 1), (2, 1, 4)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            WeightedGraph(3, [(1, 4, 1)])

    def test_rejects_negative_weight(self):
        with pytest.raises(InputError):
            WeightedGraph(3, [(1, 2, -1)])

    def test_edges_normalized_and_sorted(self):
        g = WeightedGraph(4, [(3, 1, 5), (2, 1, 7)])
        assert g.edges == ((1, 2, 7), (1, 3, 5))

    def test_adjacency_consistent_with_edges(self):
        g = WeightedGraph(5, [(1, 2, 1), (2, 3, 2), (4, 5, 3)])
        for u, v, _ in g.edges:
            assert g.has_edge(u, v) and g.has_edge(v, u)
            assert v in g.neighbors(u) and u in g.neighbors(v)
        assert not g.has_edge(1, 3)

    def test_weight_lookup_on_non_edge_raises(self):
        g = WeightedGraph(3, [(1, 2, 9)])
        assert g.weight(2, 1) == 9
        with pytest.raises(InputError, match="no edge"):
            g.weight(1, 3)


class TestTotalEdgeWeight:
    def test_ref9a_best_clique(self, ref9a):
        assert total_edge_weight(ref9a, {4, 5, 6}) == 13

    def test_ref9b_best_clique(self, ref9b):
        assert total_edge_weight(ref9b, {1, 2, 3}) == 19

    def test_empty_set(self, ref9a):
        assert total_edge_weight(ref9a, set()) == 0

    def test_does_not_require_clique(self, ref9a):
        # {1,2,3,4} is not a clique; the sum still covers internal edges.
        assert total_edge_weight(ref9a, {1, 2, 3, 4}) == 5 + 3 + 2 + 2

    def test_out_of_range_vertex(self, ref9a):
        with pytest.raises(InputError):
            total_edge_weight(ref9a, {1, 10})


class TestIsClique:
    def test_ref9a_highlighted(self, ref9a):
        assert is_clique(ref9a, {4, 5, 6})

    def test_singleton(self, ref9a):
        assert is_clique(ref9a, {7})

    def test_missing_edge(self, ref9a):
        assert not is_clique(ref9a, {1, 2, 4})

    def test_empty(self, ref9a):
        assert is_clique(ref9a, set())

    def test_clique_of_validates(self, ref9a):
        c = Clique.of(ref9a, [6, 5, 4])
        assert c.vertices == (4, 5, 6)
        assert c.total_weight == 13
        with pytest.raises(InputError):
            Clique.of(ref9a, [1, 2, 4])


class TestColoring:
    def test_ref_coloring_valid(self, ref9a, ref_coloring):
        assert validate_coloring(ref9a, ref_coloring)

    def test_single_class_invalid_with_edges(self, ref9a):
        c = Coloring(9, [range(1, 10)])
        assert not validate_coloring(ref9a, c)

    def test_singletons_always_valid(self, ref9a):
        c = Coloring(9, [[u] for u in range(1, 10)])
        assert validate_coloring(ref9a, c)

    def test_partition_enforced(self):
        with pytest.raises(InputError):
            Coloring(3, [[1, 2]])  # vertex 3 missing
        with pytest.raises(InputError):
            Coloring(3, [[1, 2], [2, 3]])  # overlap
        with pytest.raises(InputError):
            Coloring(3, [[1, 2, 3], []])  # empty class

    def test_tau_matches_classes(self, ref_coloring):
        for h, cls in enumerate(ref_coloring.classes, start=1):
            for u in cls:
                assert ref_coloring.tau(u) == h

    def test_wrong_n_invalid(self, ref9a):
        c = Coloring(8, [[u] for u in range(1, 9)])
        assert not validate_coloring(ref9a, c)


def test_random_subsets_weight_matches_naive(ref9a):
    rng = random.Random(5)
    for _ in range(50):
        s = {v for v in range(1, 10) if rng.random() < 0.5}
        naive = sum(
            w for (u, v, w) in ref9a.edges if u in s and v in s
        )
        assert total_edge_weight(ref9a, s) == naive

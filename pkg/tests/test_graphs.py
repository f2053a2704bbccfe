import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigexpand.graphs import (
    Graph,
    GraphFormatError,
    Orientation,
    bfs_tree,
    degeneracy_order,
    distances_within,
    edge_density,
    format_graph,
    hakimi_orient,
    max_density,
    parse_graph,
    radius_and_centre,
)
from rigexpand.rng import SplitMix64

from helpers import all_graphs, random_graph


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def brute_max_density(g: Graph) -> Fraction:
    best = Fraction(0)
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            sset = set(subset)
            edges = sum(1 for u, v in g.edges() if u in sset and v in sset)
            best = max(best, Fraction(edges, size))
    return best


def brute_min_max_indegree(g: Graph) -> int:
    edges = g.edges()
    best = g.n
    for bits in range(1 << len(edges)):
        indeg = [0] * g.n
        for idx, (u, v) in enumerate(edges):
            indeg[v if bits >> idx & 1 else u] += 1
        best = min(best, max(indeg, default=0))
    return best


def brute_degeneracy(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            sset = set(subset)
            mindeg = min(
                sum(1 for w in g.adj[v] if w in sset) for v in sset
            )
            best = max(best, mindeg)
    return best


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_parallel(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency_sorted_and_symmetric(self):
        g = Graph.from_edges(4, [(2, 1), (0, 3), (1, 0)])
        for v in range(4):
            assert list(g.adj[v]) == sorted(g.adj[v])
            for w in g.adj[v]:
                assert v in g.adj[w]
        assert g.m == 3


class TestEdgeDensity:
    def test_empty_graph_is_zero(self):
        assert edge_density(Graph.from_edges(0, [])) == 0

    def test_triangle(self):
        assert edge_density(complete(3)) == 1

    def test_path4(self):
        assert edge_density(path(4)) == Fraction(3, 4)


class TestMaxDensity:
    def test_k4(self):
        assert max_density(complete(4)) == Fraction(3, 2)

    def test_star(self):
        assert max_density(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])) == Fraction(3, 4)

    def test_c4_plus_pendant(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])
        assert max_density(g) == brute_max_density(g) == 1

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            max_density(Graph.from_edges(0, []))

    def test_matches_bruteforce_on_random_graphs(self):
        gen = SplitMix64(20240817)
        for _ in range(40):
            g = random_graph(gen, 3 + gen.below(6), 20 + gen.below(60))
            assert max_density(g) == brute_max_density(g)


class TestDegeneracy:
    def test_forest(self):
        k, _ = degeneracy_order(path(6))
        assert k == 1

    def test_k5(self):
        k, _ = degeneracy_order(complete(5))
        assert k == 4

    def test_c4_with_density_sandwich(self):
        g = cycle(4)
        k, _ = degeneracy_order(g)
        d = max_density(g)
        assert k == 2
        assert d <= k <= 2 * d

    def test_order_property_and_exactness(self):
        gen = SplitMix64(7)
        for _ in range(30):
            g = random_graph(gen, 3 + gen.below(5), 20 + gen.below(60))
            k, order = degeneracy_order(g)
            assert k == brute_degeneracy(g)
            position = {v: i for i, v in enumerate(order)}
            for v in range(g.n):
                forward = sum(1 for w in g.adj[v] if position[w] > position[v])
                assert forward <= k

    def test_density_sandwich_exhaustive(self):
        for g in all_graphs(4):
            if g.m == 0:
                continue
            k, _ = degeneracy_order(g)
            d = max_density(g)
            assert d <= k <= 2 * d


class TestHakimi:
    def test_c4_with_bound_one(self):
        orient = hakimi_orient(cycle(4), 1)
        assert orient is not None
        assert all(orient.indegree(v) == 1 for v in range(4))

    def test_star_with_bound_one(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        orient = hakimi_orient(g, 1)
        assert orient is not None
        assert orient.indegree(0) == 0
        assert all(orient.indegree(v) == 1 for v in (1, 2, 3))

    def test_k4_infeasible_at_one(self):
        g = complete(4)
        assert hakimi_orient(g, 1) is None
        assert brute_min_max_indegree(g) == 2

    def test_deterministic(self):
        g = cycle(5)
        first = hakimi_orient(g, 1)
        second = hakimi_orient(g, 1)
        assert first.direction == second.direction

    def test_matches_density_threshold_exhaustively(self):
        # feasibility at d is equivalent to max_density <= d
        for g in all_graphs(4):
            for d in range(0, 4):
                feasible = hakimi_orient(g, d) is not None
                assert feasible == (g.m == 0 or max_density(g) <= d)

    def test_orientation_invariants(self):
        gen = SplitMix64(99)
        for _ in range(20):
            g = random_graph(gen, 4 + gen.below(4), 30 + gen.below(50))
            d = 1 + gen.below(3)
            orient = hakimi_orient(g, d)
            if orient is None:
                assert max_density(g) > d
            else:
                assert orient.max_indegree() <= d
                assert sorted(orient.direction) == g.edges()


class TestBfsTree:
    def test_path_middle_root(self):
        g = path(3)
        parent, depth = bfs_tree(g, 1, frozenset({0, 1, 2}))
        assert parent == {0: 1, 2: 1}
        assert depth == {0: 1, 1: 0, 2: 1}

    def test_singleton(self):
        g = path(3)
        parent, depth = bfs_tree(g, 2, frozenset({2}))
        assert parent == {} and depth == {2: 0}

    def test_c4_parent_tie_to_smaller_id(self):
        g = cycle(4)
        parent, depth = bfs_tree(g, 0, frozenset(range(4)))
        assert depth == {0: 0, 1: 1, 3: 1, 2: 2}
        assert parent[2] == 1  # both 1 and 3 are one level up; the smaller wins

    def test_depths_are_graph_distances(self):
        gen = SplitMix64(5)
        for _ in range(20):
            g = random_graph(gen, 5 + gen.below(4), 40 + gen.below(40))
            within = frozenset(range(g.n))
            root = gen.below(g.n)
            dist = distances_within(g, root, within)
            if len(dist) != g.n:
                with pytest.raises(ValueError):
                    bfs_tree(g, root, within)
                continue
            _, depth = bfs_tree(g, root, within)
            assert depth == dist

    def test_disconnected_rejected(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError):
            bfs_tree(g, 0, frozenset(range(4)))


class TestRadius:
    def test_singleton(self):
        assert radius_and_centre(path(2), frozenset({1})) == (0, 1)

    def test_path3(self):
        assert radius_and_centre(path(3), frozenset(range(3))) == (1, 1)

    def test_c5(self):
        assert radius_and_centre(cycle(5), frozenset(range(5))) == (2, 0)


class TestGraphFormat:
    def test_roundtrip(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])
        assert parse_graph(format_graph(g)).adj == g.adj

    @given(st.integers(1, 8), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_random(self, n, seed):
        g = random_graph(SplitMix64(seed), n, 50)
        assert parse_graph(format_graph(g)).adj == g.adj

    @pytest.mark.parametrize(
        "text",
        [
            "graph 2 1\n0 0\n",  # self loop
            "graph 2 2\n0 1\n0 1\n",  # duplicate
            "graph 2 1\n1 0\n",  # u >= v
            "graph 2 1\n0 2\n",  # out of range
            "graph 2 2\n0 1\n",  # count mismatch
            "nonsense\n",
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_graph(text)


class TestOrientationType:
    def test_must_cover_edges(self):
        g = path(3)
        with pytest.raises(ValueError):
            Orientation(g, {(0, 1): (0, 1)})

    def test_arc_must_match_edge(self):
        g = path(3)
        with pytest.raises(ValueError):
            Orientation(g, {(0, 1): (0, 1), (1, 2): (0, 2)})

    def test_in_neighbours(self):
        g = path(3)
        orient = Orientation(g, {(0, 1): (0, 1), (1, 2): (2, 1)})
        assert orient.in_neighbours(1) == (0, 2)
        assert orient.indegree(1) == 2
        assert orient.has_arc(0, 1) and not orient.has_arc(1, 0)

import itertools

import pytest

from rigexpand.graphs import Graph, Orientation, hakimi_orient, is_connected_within, max_density
from rigexpand.minors import MinorModel, random_shallow_model
from rigexpand.regions import RegionSystem, rig
from rigexpand.representation import (
    PatternSubgraph,
    all_junction_blockers,
    build_representation,
    find_junctions,
    format_paths,
    junction_blockers,
)
from rigexpand.rng import SplitMix64, stream

from helpers import block_chain_instance, pipeline_instance


def singleton_chain():
    """S_0 = {u}, S_1 = {v} with uv an edge: the two-vertex connecting path."""
    host = Graph.from_edges(3, [(0, 1), (1, 2)])
    rs = RegionSystem.from_sets(host, [{0, 1}, {1, 2}])
    g = rig(rs)
    model = MinorModel(g, Graph.from_edges(2, [(0, 1)]),
                       (frozenset({0}), frozenset({1})), (0, 1), 0)
    return rs, g, model


class TestBuildRepresentation:
    def test_adjacent_roots_give_two_vertex_path(self):
        rs, g, model = singleton_chain()
        rep = build_representation(model, rs, (0, 1))
        record = rep.paths[(0, 1)]
        assert record.case == 3
        assert record.vertices() == (0, 1)

    def test_path_length_bound(self):
        gen = SplitMix64(404)
        for seed in range(25):
            _, _, model, rep, _, _ = pipeline_instance(seed, host_size=10, blocks=4, r=1)
            r = model.depth_bound
            for record in rep.paths.values():
                assert len(record.vertices()) <= 2 * r + 2

    def test_case2_tiebreak_prefers_smaller_tree_distance(self):
        # host: 0-1, 0-2, 2-3, 1-4, 3-4; regions: a={1}, b1={0,1,2}, b2={1,4}, c={2,3,4}
        host = Graph.from_edges(5, [(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)])
        rs = RegionSystem.from_sets(host, [{1}, {0, 1, 2}, {1, 4}, {2, 3, 4}])
        g = rig(rs)
        assert g.edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        model = MinorModel(g, Graph.from_edges(2, [(0, 1)]),
                           (frozenset({0}), frozenset({1, 2, 3})), (0, 3), 1)
        rep = build_representation(model, rs, (0, 1))
        record = rep.paths[(0, 1)]
        assert record.case == 2
        assert record.x == 0
        # both contacts 1 and 2 sit at distance 1 from the root; vertex 1 has
        # the smaller id but its region routes the tie two tree edges away
        assert record.y == 2
        assert record.vertices() == (0, 2, 3)

    def test_case1_when_root_sees_nothing(self):
        rs, g, model, rep, orient = block_chain_instance(6, blocks=3)
        cases = {rec.case for rec in rep.paths.values()}
        assert cases <= {1, 2}

    def test_invalid_ordering_rejected(self):
        rs, g, model = singleton_chain()
        with pytest.raises(ValueError):
            build_representation(model, rs, (0, 0))

    def test_wrong_ambient_rejected(self):
        rs, g, model = singleton_chain()
        other = MinorModel(Graph.from_edges(2, []), Graph.from_edges(1, []),
                           (frozenset({0}),), (0,), 0)
        with pytest.raises(ValueError):
            build_representation(other, rs, (0,))

    def test_share_connectivity(self):
        for seed in range(30):
            _, _, model, rep, _, _ = pipeline_instance(seed, host_size=11, blocks=5, r=1)
            g = model.ambient
            for i in range(model.pattern.n):
                share = set()
                for (a, b), record in rep.paths.items():
                    if a == i:
                        share.update(record.head)
                    elif b == i:
                        share.update(record.tail)
                if share:
                    assert model.roots[i] in share
                    assert is_connected_within(g, share)

    def test_dump_format(self):
        rs, g, model = singleton_chain()
        rep = build_representation(model, rs, (0, 1))
        assert format_paths(rep) == "path 0 1 case 3: 0 1\n"


class TestJunctions:
    def test_edgeless_subgraph(self):
        _, _, model, rep, orient, _ = pipeline_instance(0)
        sub = PatternSubgraph(frozenset({0}), frozenset())
        assert find_junctions(rep, orient, sub) == []

    def test_k3_over_star_always_has_junction(self):
        host = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        rs = RegionSystem.from_sets(host, [{0, 1}, {0, 2}, {0, 3}])
        g = rig(rs)
        assert g.adj == Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]).adj
        model = MinorModel(g, g, tuple(frozenset({v}) for v in range(3)), (0, 1, 2), 0)
        rep = build_representation(model, rs, (0, 1, 2))
        full = PatternSubgraph.full(g)
        edges = g.edges()
        for bits in range(1 << len(edges)):
            direction = {
                e: (e if bits >> i & 1 else (e[1], e[0])) for i, e in enumerate(edges)
            }
            orient = Orientation(g, direction)
            assert find_junctions(rep, orient, full), f"orientation {direction}"

    def test_specific_junction_reported(self):
        # path host, three singleton blocks in a row, arcs pointing into the middle
        host = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        rs = RegionSystem.from_sets(host, [{0, 1}, {1, 2, 3}, {3, 4}])
        g = rig(rs)
        model = MinorModel(g, Graph.from_edges(3, [(0, 1), (1, 2)]),
                           (frozenset({0}), frozenset({1}), frozenset({2})), (0, 1, 2), 0)
        rep = build_representation(model, rs, (0, 1, 2))
        orient = Orientation(g, {(0, 1): (0, 1), (1, 2): (2, 1)})
        junctions = find_junctions(rep, orient, PatternSubgraph.full(model.pattern))
        assert [(j.arc, j.pattern_edge, j.witness_block) for j in junctions] == [
            ((2, 1), (0, 1), 2),
            ((0, 1), (1, 2), 0),
        ]
        assert all(j.position == j.arc[1] for j in junctions)

    def test_monotone_under_subgraphs(self):
        for seed in range(40):
            _, g, model, rep, orient, _ = pipeline_instance(seed, host_size=10, blocks=4, r=1)
            full = PatternSubgraph.full(model.pattern)
            if find_junctions(rep, orient, full):
                continue
            # every subgraph of a junction-free pattern stays junction-free
            verts = sorted(full.vertices)
            for size in range(len(verts)):
                kept = frozenset(verts[:size])
                sub = PatternSubgraph(
                    kept, frozenset(e for e in full.edges if set(e) <= kept)
                )
                assert find_junctions(rep, orient, sub) == []


class TestBlockers:
    def test_junction_free_gives_empty_blockers(self):
        rs, g, model, rep, orient = block_chain_instance(1, blocks=4)
        for edge, blockers in all_junction_blockers(rep, orient).items():
            positions = {v for v in (edge[0], edge[1])}
            # seam arcs always come from a path's own edge blocks
            assert blockers == frozenset() or blockers <= frozenset(range(4)) - positions

    def test_bounded_by_kd(self):
        for seed in range(60):
            _, g, model, rep, orient, d = pipeline_instance(seed, host_size=10, blocks=4, r=1)
            k = rep.max_path_vertices()
            for edge, blockers in all_junction_blockers(rep, orient).items():
                assert len(blockers) <= k * d

    def test_matches_junction_scan(self):
        for seed in range(20):
            _, g, model, rep, orient, _ = pipeline_instance(seed, host_size=10, blocks=5, r=1)
            full = PatternSubgraph.full(model.pattern)
            junctions = find_junctions(rep, orient, full)
            by_edge = {}
            for j in junctions:
                by_edge.setdefault(j.pattern_edge, set()).add(j.witness_block)
            for edge, blockers in all_junction_blockers(rep, orient).items():
                assert blockers == frozenset(by_edge.get(edge, set()))

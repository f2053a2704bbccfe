"""Seeded instance generators shared by the test modules.

Everything draws from the package's SplitMix64 streams, so each test run
sees exactly the same instances.
"""

from __future__ import annotations

import math
from fractions import Fraction

from rigexpand.geometry import (
    Arrangement,
    DegenerateArrangementError,
    Segment,
    segments_intersect,
)
from rigexpand.graphs import Graph, Orientation, hakimi_orient, max_density
from rigexpand.minors import MinorModel, enumerate_shallow_families, model_from_family
from rigexpand.regions import RegionSystem, rig
from rigexpand.representation import build_representation
from rigexpand.rng import SplitMix64, stream


def random_graph(gen: SplitMix64, n: int, percent: int) -> Graph:
    """Erdos-Renyi-ish graph: each pair is an edge with the given percentage."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if gen.below(100) < percent
    ]
    return Graph.from_edges(n, edges)


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_arrangement(gen: SplitMix64, max_segments: int = 12, box: int = 60) -> Arrangement:
    """General-position integer segments; degenerate candidates are re-drawn."""
    n = 3 + gen.below(max_segments - 2)
    segs: list[Segment] = []
    attempts = 0
    while len(segs) < n and attempts < 500:
        attempts += 1
        p = (gen.below(box), gen.below(box))
        q = (gen.below(box), gen.below(box))
        if p == q:
            continue
        cand = Segment(p, q)
        try:
            for s in segs:
                segments_intersect(cand, s)
        except DegenerateArrangementError:
            continue
        segs.append(cand)
    return Arrangement(tuple(segs))


def random_tree(gen: SplitMix64, n: int) -> Graph:
    """Uniform-ish random tree: each vertex attaches to a random earlier one."""
    edges = [(gen.below(v), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def random_region_system(gen: SplitMix64, host: Graph, blocks: int) -> RegionSystem:
    """Regions grown as random-radius balls around random host vertices."""
    regions = []
    for _ in range(blocks):
        centre = gen.below(host.n)
        radius = gen.below(3)
        from rigexpand.graphs import distances_within

        dist = distances_within(host, centre, frozenset(range(host.n)))
        regions.append(frozenset(v for v, d in dist.items() if d <= radius))
    return RegionSystem.from_sets(host, regions)


def block_chain_instance(seed: int, blocks: int = 4):
    """A chain of 3-vertex blocks over a path host, junction-free by design.

    The host is a path; intersection-graph vertex t is the interval
    {2t, 2t+1, 2t+2}, so the intersection graph is a path; block m takes
    vertices {3m, 3m+1, 3m+2}.  Seam edges between consecutive blocks are
    oriented left to right and block roots sit at the middle or right end,
    which keeps every connecting path clear of incoming third-block arcs.
    Middle roots drive the distant-contact construction cases, right-end
    roots the adjacent-contact ones.
    """
    gen = stream(seed, 0)
    t_count = 3 * blocks
    host_len = 2 * t_count + 1
    host = Graph.from_edges(host_len, [(i, i + 1) for i in range(host_len - 1)])
    rs = RegionSystem.from_sets(
        host, [frozenset({2 * t, 2 * t + 1, 2 * t + 2}) for t in range(t_count)]
    )
    g = rig(rs)
    branch = tuple(frozenset({3 * m, 3 * m + 1, 3 * m + 2}) for m in range(blocks))
    roots = tuple(3 * m + 1 + gen.below(2) for m in range(blocks))  # middle or right
    pattern = Graph.from_edges(blocks, [(m, m + 1) for m in range(blocks - 1)])
    model = MinorModel(ambient=g, pattern=pattern, branch=branch, roots=roots, depth_bound=2)
    ordering = list(range(blocks))
    gen.shuffle(ordering)
    rep = build_representation(model, rs, tuple(ordering))
    direction = {}
    for u, v in g.edges():
        if u % 3 == 2 and v == u + 1:  # seam between blocks: left to right
            direction[(u, v)] = (u, v)
        else:
            direction[(u, v)] = (u, v) if gen.below(2) else (v, u)
    orient = Orientation(g, direction)
    return rs, g, model, rep, orient


def pipeline_instance(seed: int, host_size: int = 9, blocks: int = 4, r: int = 1):
    """A ready-to-run tuple (rs, g, model, rep, orient, d) on a tree host.

    The model is a random shallow family over the intersection graph; the
    ordering is a seeded shuffle; the orientation is the flow-based one for
    d = ceil(max density).
    """
    gen = stream(seed, 0)
    host = random_tree(gen, host_size)
    rs = random_region_system(gen, host, blocks)
    g = rig(rs)
    families = None
    # grow a model: random family of disjoint shallow balls over g
    from rigexpand.minors import random_shallow_model

    model = random_shallow_model(g, r, target_size=max(2, g.n), seed=stream(seed, 1).next64())
    ordering = list(range(model.pattern.n))
    stream(seed, 2).shuffle(ordering)
    rep = build_representation(model, rs, tuple(ordering))
    d = math.ceil(max_density(g)) if g.m else 0
    orient = hakimi_orient(g, d)
    assert orient is not None
    return rs, g, model, rep, orient, d

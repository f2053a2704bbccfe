"""Undirected simple graphs, exact density measures, BFS trees and orientations.

Vertices are dense integer ids ``0..n-1``.  All densities are exact
:class:`fractions.Fraction` values; no floating point is used in any
comparison.  Ties everywhere are broken towards the smallest vertex id so
that each construction is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from ._flow import FlowNetwork


class GraphFormatError(ValueError):
    """Raised when a graph (or related) text block is malformed."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  The constructor
    of record is :meth:`from_edges`, which validates symmetry, rejects
    self-loops and parallel edges, and sorts the adjacency lists.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        neighbours: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in neighbours[u]:
                raise ValueError(f"parallel edge ({u}, {v})")
            neighbours[u].add(v)
            neighbours[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in neighbours))

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Orientation:
    """An orientation of ``base``: every edge {u, v} carries one arc.

    ``direction`` maps each canonical edge (u, v) with u < v to the ordered
    pair (tail, head).
    """

    base: Graph
    direction: dict[tuple[int, int], tuple[int, int]] = field(repr=False)

    def __post_init__(self):
        edges = set(self.base.edges())
        if set(self.direction) != edges:
            raise ValueError("orientation does not cover exactly the edge set")
        for (u, v), (a, b) in self.direction.items():
            if {a, b} != {u, v}:
                raise ValueError(f"arc ({a}, {b}) does not orient edge ({u}, {v})")

    def arc_of(self, u: int, v: int) -> tuple[int, int]:
        key = (u, v) if u < v else (v, u)
        return self.direction[key]

    def has_arc(self, tail: int, head: int) -> bool:
        if not self.base.has_edge(tail, head):
            return False
        return self.arc_of(tail, head) == (tail, head)

    @cached_property
    def in_neighbour_sets(self) -> tuple[tuple[int, ...], ...]:
        ins: list[list[int]] = [[] for _ in range(self.base.n)]
        for tail, head in self.direction.values():
            ins[head].append(tail)
        return tuple(tuple(sorted(s)) for s in ins)

    def in_neighbours(self, v: int) -> tuple[int, ...]:
        return self.in_neighbour_sets[v]

    def indegree(self, v: int) -> int:
        return len(self.in_neighbour_sets[v])

    def max_indegree(self) -> int:
        return max((self.indegree(v) for v in self.base.vertices()), default=0)

    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self.direction.values())


def edge_density(g: Graph) -> Fraction:
    """|E|/|V|, with the empty graph having density 0."""
    if g.n == 0:
        return Fraction(0)
    return Fraction(g.m, g.n)


def _some_subgraph_denser_than(g: Graph, threshold: Fraction) -> bool:
    """Whether some non-empty S has |E(G[S])|/|S| > threshold.

    Goldberg's network: source -> edge-node (capacity q), edge-node -> both
    endpoints (infinite), vertex -> sink (capacity p) for threshold p/q.
    The min cut is q*m - max over S of (q*e(S) - p*|S|), so the max flow is
    below q*m exactly when some subgraph beats the threshold.
    """
    m = g.m
    if m == 0:
        return 0 > threshold  # density 0 subgraphs only
    p, q = threshold.numerator, threshold.denominator
    if p < 0:
        return True
    big = q * m + 1
    net = FlowNetwork(2 + m + g.n)
    source, sink = 0, 1
    for idx, (u, v) in enumerate(g.edges()):
        enode = 2 + idx
        net.add_edge(source, enode, q)
        net.add_edge(enode, 2 + m + u, big)
        net.add_edge(enode, 2 + m + v, big)
    for v in range(g.n):
        net.add_edge(2 + m + v, sink, p)
    return net.max_flow(source, sink) < q * m


def max_density(g: Graph) -> Fraction:
    """Exact maximum of |E(G[S])|/|S| over non-empty S, by parametric min-cut.

    Candidate values are all fractions a/b with 1 <= b <= n and
    0 <= a <= b(b-1)/2; a binary search over the sorted candidates needs
    O(log n) max-flow runs.
    """
    if g.n == 0:
        raise ValueError("max_density is undefined on the empty graph")
    if g.m == 0:
        return Fraction(0)
    candidates = {Fraction(0)}
    for b in range(1, g.n + 1):
        top = min(g.m, b * (b - 1) // 2)
        for a in range(1, top + 1):
            candidates.add(Fraction(a, b))
    ordered = sorted(candidates)
    # max_density is the least candidate c with no subgraph denser than c.
    lo, hi = 0, len(ordered) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _some_subgraph_denser_than(g, ordered[mid]):
            lo = mid + 1
        else:
            hi = mid
    return ordered[lo]


def degeneracy_order(g: Graph) -> tuple[int, list[int]]:
    """Exact degeneracy k and a peeling order v_1..v_n.

    Repeatedly removes a minimum-degree vertex (smallest id on ties), so
    each v_i has at most k neighbours among {v_{i+1}, ..., v_n}.
    """
    degree = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order: list[int] = []
    k = 0
    for _ in range(g.n):
        v = min(
            (u for u in range(g.n) if not removed[u]),
            key=lambda u: (degree[u], u),
        )
        k = max(k, degree[v])
        removed[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                degree[w] -= 1
    return k, order


def hakimi_orient(g: Graph, d: int) -> Optional[Orientation]:
    """Orientation with every indegree <= d, or None when none exists.

    Max-flow formulation: a unit from the source through each edge-node must
    reach the sink through one of the edge's endpoints, whose sink capacity
    is d.  Saturation is equivalent to feasibility.  Deterministic for the
    canonical edge order.
    """
    if d < 0:
        raise ValueError("indegree bound must be non-negative")
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return Orientation(g, {})
    net = FlowNetwork(2 + m + g.n)
    source, sink = 0, 1
    choice_ids: list[tuple[int, int]] = []
    for idx, (u, v) in enumerate(edges):
        enode = 2 + idx
        net.add_edge(source, enode, 1)
        # larger endpoint first, so heads prefer larger ids when both fit
        ev = net.add_edge(enode, 2 + m + v, 1)
        eu = net.add_edge(enode, 2 + m + u, 1)
        choice_ids.append((eu, ev))
    for v in range(g.n):
        net.add_edge(2 + m + v, sink, d)
    if net.max_flow(source, sink) < m:
        return None
    direction: dict[tuple[int, int], tuple[int, int]] = {}
    for (u, v), (eu, ev) in zip(edges, choice_ids):
        if net.flow_on(eu) == 1:
            direction[(u, v)] = (v, u)  # the unit went to u, so u is the head
        else:
            assert net.flow_on(ev) == 1
            direction[(u, v)] = (u, v)
    return Orientation(g, direction)


def distances_within(g: Graph, root: int, within: frozenset[int] | set[int]) -> dict[int, int]:
    """BFS distances from root inside G[within]."""
    if root not in within:
        raise ValueError(f"root {root} is not in the vertex set")
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in within and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_tree(
    g: Graph, root: int, within: frozenset[int] | set[int]
) -> tuple[dict[int, int], dict[int, int]]:
    """Canonical BFS tree of G[within] rooted at root: (parent, depth).

    The parent of a vertex is its smallest-id neighbour in the previous BFS
    layer; the root has no parent entry.  Raises if within is disconnected.
    """
    depth = distances_within(g, root, within)
    if len(depth) != len(within):
        missing = sorted(set(within) - set(depth))
        raise ValueError(f"vertex set is disconnected: {missing} unreachable from {root}")
    parent: dict[int, int] = {}
    for v in sorted(within):
        if v == root:
            continue
        parent[v] = min(w for w in g.adj[v] if w in depth and depth[w] == depth[v] - 1)
    return parent, depth


def radius_and_centre(g: Graph, within: frozenset[int] | set[int]) -> tuple[int, int]:
    """Minimum eccentricity inside G[within] and the smallest-id centre."""
    if not within:
        raise ValueError("radius of an empty vertex set is undefined")
    best: Optional[tuple[int, int]] = None
    for c in sorted(within):
        dist = distances_within(g, c, within)
        if len(dist) != len(within):
            raise ValueError("vertex set is disconnected")
        ecc = max(dist.values())
        if best is None or ecc < best[0]:
            best = (ecc, c)
    return best


def eccentricity_within(g: Graph, v: int, within: frozenset[int] | set[int]) -> int:
    dist = distances_within(g, v, within)
    if len(dist) != len(within):
        raise ValueError("vertex set is disconnected")
    return max(dist.values())


def is_connected_within(g: Graph, within: frozenset[int] | set[int]) -> bool:
    if not within:
        return False
    root = min(within)
    return len(distances_within(g, root, within)) == len(within)


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Line 1 is ``graph <n> <m>``, followed by m lines ``<u> <v>`` with
    0 <= u < v < n.  Duplicates, self-loops and out-of-range ids are
    rejected.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty graph block")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "graph":
        raise GraphFormatError(f"bad graph header: {lines[0]!r}")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError as exc:
        raise GraphFormatError(f"bad graph header: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {ln!r}") from exc
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n={n}")
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

"""Connecting paths that properly represent a model, and junction detection.

For each pattern edge the module picks a contact edge xy of the ambient
graph by a three-case rule (driven by whether the earlier root sees the
other branch set), then routes the connecting path through the stored BFS
trees of the two branch sets.  All residual ties break lexicographically by
vertex id, so the construction is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .graphs import Graph, Orientation, bfs_tree, is_connected_within
from .minors import MinorModel, validate_model
from .regions import RegionSystem, region_tree_set_distance, rig


@dataclass(frozen=True)
class PatternSubgraph:
    """A subgraph of the pattern: chosen vertices plus surviving edges."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]  # canonical (u, v) with u < v

    @staticmethod
    def full(pattern: Graph) -> "PatternSubgraph":
        return PatternSubgraph(frozenset(range(pattern.n)), frozenset(pattern.edges()))

    def __post_init__(self):
        for u, v in self.edges:
            if u >= v or u not in self.vertices or v not in self.vertices:
                raise ValueError(f"bad subgraph edge ({u}, {v})")

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def density(self) -> Fraction:
        if not self.vertices:
            return Fraction(0)
        return Fraction(len(self.edges), len(self.vertices))


@dataclass(frozen=True)
class PathRecord:
    """Connecting path for one pattern edge, split at the contact edge xy.

    `first` precedes `second` in the ordering.  `head` is the tree path from
    the first root c_first to x inside its branch set; `tail` is the tree
    path from y back to c_second.  The full path is their concatenation.
    """

    first: int
    second: int
    head: tuple[int, ...]
    tail: tuple[int, ...]
    case: int  # 1, 2 or 3

    @property
    def x(self) -> int:
        return self.head[-1]

    @property
    def y(self) -> int:
        return self.tail[0]

    def vertices(self) -> tuple[int, ...]:
        return self.head + self.tail


@dataclass(frozen=True)
class Junction:
    """An arc (a, b) entering a connecting path from a third branch set."""

    arc: tuple[int, int]
    pattern_edge: tuple[int, int]
    witness_block: int
    position: int  # = arc head, the path vertex that is hit

    def __post_init__(self):
        if self.position != self.arc[1]:
            raise ValueError("junction position must be the arc head")


@dataclass(frozen=True)
class Representation:
    model: MinorModel
    regions: RegionSystem
    trees: tuple[tuple[dict[int, int], dict[int, int]], ...]  # (parent, depth) per block
    ordering: tuple[int, ...]
    paths: dict[tuple[int, int], PathRecord]  # keyed (first, second) in order

    def position(self, i: int) -> int:
        return self.ordering.index(i)

    def record(self, i: int, j: int) -> PathRecord:
        if (i, j) in self.paths:
            return self.paths[(i, j)]
        return self.paths[(j, i)]

    def max_path_vertices(self) -> int:
        return max((len(r.vertices()) for r in self.paths.values()), default=0)

    def owner(self) -> dict[int, int]:
        return self.model.branch_of()


def _tree_path_to_root(parent: dict[int, int], v: int) -> list[int]:
    chain = [v]
    while chain[-1] in parent:
        chain.append(parent[chain[-1]])
    return chain


def build_representation(
    model: MinorModel, rs: RegionSystem, ordering: Iterable[int]
) -> Representation:
    """Construct the connecting paths for every pattern edge.

    Requires the model's ambient graph to equal the intersection graph of
    `rs` (the region trees answer in-region distance queries during
    tie-breaking).  Raises on an invalid model or ordering.
    """
    g = model.ambient
    induced = rig(rs)
    if induced.n != g.n or induced.adj != g.adj:
        raise ValueError("model ambient graph is not the intersection graph of the regions")
    problem = validate_model(model)
    if problem is not None:
        raise ValueError(f"invalid model: {problem}")
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(model.pattern.n)):
        raise ValueError("ordering is not a permutation of the pattern vertices")
    pos = {v: idx for idx, v in enumerate(ordering)}

    trees = tuple(
        bfs_tree(g, model.roots[i], model.branch[i]) for i in range(model.pattern.n)
    )

    paths: dict[tuple[int, int], PathRecord] = {}
    for u, v in model.pattern.edges():
        i, j = (u, v) if pos[u] < pos[v] else (v, u)
        paths[(i, j)] = _build_path(model, rs, g, trees, i, j)

    rep = Representation(model, rs, trees, ordering, paths)
    _check_proper(rep)
    return rep


def _build_path(model, rs, g: Graph, trees, i: int, j: int) -> PathRecord:
    s_i, s_j = model.branch[i], model.branch[j]
    c_i, c_j = model.roots[i], model.roots[j]
    parent_i, depth_i = trees[i]
    parent_j, depth_j = trees[j]

    root_contacts = g.adjacency_sets[c_i] & s_j
    if c_j in root_contacts:
        case, x, y = 3, c_i, c_j
    elif root_contacts:
        case = 2
        x = c_i

        def case2_key(cand: int):
            up = parent_j[cand]  # cand != c_j here, so the parent exists
            tie = region_tree_set_distance(
                rs,
                cand,
                rs.region(cand) & rs.region(up),
                rs.region(cand) & rs.region(c_i),
            )
            return (depth_j[cand], tie, cand)

        y = min(sorted(root_contacts), key=case2_key)
    else:
        case = 1
        candidates = [
            (xc, yc)
            for xc in sorted(s_i)
            for yc in sorted(g.adjacency_sets[xc] & s_j)
        ]
        alpha = min(depth_i[xc] for xc, _ in candidates)

        def case1_key(pair: tuple[int, int]):
            xc, yc = pair
            up = parent_i[xc]  # depth alpha >= 1 in this case
            tie = region_tree_set_distance(
                rs,
                xc,
                rs.region(xc) & rs.region(up),
                rs.region(xc) & rs.region(yc),
            )
            return (tie, xc, yc)

        x, y = min(
            (pair for pair in candidates if depth_i[pair[0]] == alpha), key=case1_key
        )

    head = tuple(reversed(_tree_path_to_root(parent_i, x)))  # c_i .. x
    tail = tuple(_tree_path_to_root(parent_j, y))  # y .. c_j
    record = PathRecord(first=i, second=j, head=head, tail=tail, case=case)

    assert record.x in s_i and record.y in s_j and g.has_edge(record.x, record.y)
    assert len(set(record.vertices())) == len(record.vertices())
    if case == 1:
        assert record.x != c_i and record.x in parent_i
    return record


def _check_proper(rep: Representation) -> None:
    """Connectivity of each branch set's share of the connecting paths."""
    g = rep.model.ambient
    for i in range(rep.model.pattern.n):
        share: set[int] = set()
        for (a, b), record in rep.paths.items():
            if a == i:
                share.update(record.head)
            elif b == i:
                share.update(record.tail)
        if share:
            assert rep.model.roots[i] in share
            assert is_connected_within(g, share), f"branch {i} share is disconnected"


def find_junctions(
    rep: Representation, orient: Orientation, sub: PatternSubgraph
) -> list[Junction]:
    """All junctions of `sub`, sorted by (pattern edge, arc); empty iff junction-free."""
    if orient.base.n != rep.model.ambient.n or orient.base.adj != rep.model.ambient.adj:
        raise ValueError("orientation is over a different graph")
    owner = rep.owner()
    found: list[Junction] = []
    for i, j in sorted(sub.edges):
        q = rep.record(i, j).vertices()
        for b in q:
            for a in orient.in_neighbours(b):
                block = owner.get(a)
                if block is None or block == i or block == j:
                    continue
                if block in sub.vertices:
                    found.append(
                        Junction(arc=(a, b), pattern_edge=(i, j), witness_block=block, position=b)
                    )
    found.sort(key=lambda junc: (junc.pattern_edge, junc.arc))
    return found


def junction_blockers(
    rep: Representation, orient: Orientation, pattern_edge: tuple[int, int]
) -> frozenset[int]:
    """Blocks (other than the edge's ends) that fire a junction into this path.

    Ranging over the whole pattern: a block l lands here when some arc
    (a, b) has a in l's branch set and b on this edge's connecting path.
    With paths of at most k vertices and indegree at most d, at most k*d
    blocks can qualify.
    """
    i, j = pattern_edge
    owner = rep.owner()
    q = rep.record(i, j).vertices()
    hits: set[int] = set()
    for b in q:
        for a in orient.in_neighbours(b):
            block = owner.get(a)
            if block is not None and block != i and block != j:
                hits.add(block)
    return frozenset(hits)


def all_junction_blockers(
    rep: Representation, orient: Orientation
) -> dict[tuple[int, int], frozenset[int]]:
    """Blocker sets for every pattern edge, keyed by canonical (min, max) pair."""
    return {
        (min(i, j), max(i, j)): junction_blockers(rep, orient, (i, j))
        for (i, j) in rep.paths
    }


def format_paths(rep: Representation) -> str:
    lines = []
    for (i, j), record in sorted(rep.paths.items()):
        verts = " ".join(str(v) for v in record.vertices())
        lines.append(f"path {i} {j} case {record.case}: {verts}")
    return "\n".join(lines) + ("\n" if lines else "")

"""Host branch sets for the degree->=2 core of a junction-free pattern.

Given connecting paths over a region system and an orientation under which
the pattern has no junctions, this module builds, vertex by vertex in the
representation's ordering, disjoint connected host sets realising the core
as a minor of the host graph.  Every intermediate claim of the construction
is executed as a hard assertion; a violation raises :class:`ClaimViolation`
with the witnessing vertices, so a successful run doubles as a machine
check of the argument on that instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, Orientation, is_connected_within
from .minors import MinorModel, validate_model
from .regions import region_tree_path_between_sets
from .representation import PatternSubgraph, Representation, find_junctions


class JunctionPreconditionError(ValueError):
    """The pattern is not junction-free under the given orientation."""


class ClaimViolation(RuntimeError):
    """An internal claim of the extraction failed; carries the witness."""

    def __init__(self, claim: str, detail: str):
        super().__init__(f"claim {claim!r} violated: {detail}")
        self.claim = claim
        self.detail = detail


@dataclass(frozen=True)
class ExtractionLedger:
    """Per-vertex and per-edge decomposition of the final branch sets.

    Keys are core indices (positions in the induction order).  Forward
    pieces carry case 1 or 2; backward pieces carry case "A" or "B".
    """

    early: tuple[frozenset[int], ...]  # per core vertex, the pre-induction part
    late: tuple[frozenset[int], ...]  # per core vertex, the backward union
    forward: dict[tuple[int, int], tuple[frozenset[int], int]] = field(default_factory=dict)
    backward: dict[tuple[int, int], tuple[frozenset[int], str]] = field(default_factory=dict)


@dataclass(frozen=True)
class HostModel:
    host: Graph
    core: Graph  # relabelled 0..s-1 in the induction order
    core_to_pattern: tuple[int, ...]
    sets: tuple[frozenset[int], ...]
    ledger: ExtractionLedger

    def as_model(self) -> MinorModel:
        """View as a MinorModel (roots are placeholders; no radius condition)."""
        return MinorModel(
            ambient=self.host,
            pattern=self.core,
            branch=self.sets,
            roots=tuple(min(s) for s in self.sets),
            depth_bound=self.host.n,  # no radius condition is claimed
        )


def degree2_core(pattern: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the vertices of degree >= 2, with the id mapping."""
    keep = [v for v in range(pattern.n) if pattern.degree(v) >= 2]
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in pattern.edges() if u in index and v in index
    ]
    return Graph.from_edges(len(keep), edges), tuple(keep)


def _sub_core(sub: PatternSubgraph) -> tuple[set[int], set[tuple[int, int]]]:
    core_vertices = {v for v in sub.vertices if sub.degree(v) >= 2}
    core_edges = {
        (u, v) for u, v in sub.edges if u in core_vertices and v in core_vertices
    }
    return core_vertices, core_edges


def _region_union(rep: Representation, block_vertices) -> frozenset[int]:
    out: set[int] = set()
    for t in block_vertices:
        out |= rep.regions.region(t)
    return frozenset(out)


def build_forward_piece(
    rep: Representation, edge: tuple[int, int]
) -> tuple[frozenset[int], int, Optional[tuple[int, int]]]:
    """The early contribution of edge (i, j) (i before j) to i's branch set.

    Case 1 walks the regions of the head path short of the contact vertex x,
    then follows region x's tree from its overlap with the parent's region
    towards its overlap with region y, stopping one vertex short.  Case 2 is
    just the root's region.  Returns (piece, case, bridging host edge into
    region y or None).
    """
    i, j = edge
    record = rep.record(i, j)
    if record.first != i:
        raise ValueError(f"edge {edge} is ordered {record.first} before {record.second}")
    rs = rep.regions
    c_i = rep.model.roots[i]
    if record.case == 3:
        raise ClaimViolation(
            "basic", f"roots of {i} and {j} are adjacent, so case 3 arose"
        )

    if record.case == 2:
        piece = frozenset(rs.region(c_i))
        y_region = rs.region(record.y)
        if not (piece & y_region):
            raise ClaimViolation(
                "forward-contact", f"edge {edge}: root region misses region of y={record.y}"
            )
        return piece, 2, None

    x, y = record.x, record.y
    parent_i, _ = rep.trees[i]
    x_up = parent_i[x]
    first_set = rs.region(x) & rs.region(x_up)
    second_set = rs.region(x) & rs.region(y)
    if first_set & second_set:
        raise ClaimViolation(
            "forward-separation",
            f"edge {edge}: regions of x-parent and y meet inside region {x}",
        )
    path = region_tree_path_between_sets(rs, x, first_set, second_set)
    piece = set(_region_union(rep, record.head[:-1]))
    piece.update(path[:-1])
    piece = frozenset(piece)

    s_j_regions = _region_union(rep, rep.model.branch[j])
    offenders = piece & s_j_regions
    if offenders:
        raise ClaimViolation(
            "star",
            f"edge {edge}: piece meets the regions of block {j} at {sorted(offenders)}",
        )
    if not rs.region(c_i) <= piece:
        raise ClaimViolation("forward-root", f"edge {edge}: root region not contained")
    if not is_connected_within(rep.regions.host, piece):
        raise ClaimViolation("forward-connected", f"edge {edge}: piece disconnected")
    red_edge = (path[-2], path[-1])
    if not rep.regions.host.has_edge(*red_edge):
        raise ClaimViolation("forward-bridge", f"edge {edge}: no bridge into region of y")
    return piece, 1, red_edge


def build_backward_piece(
    rep: Representation,
    built: dict[int, frozenset[int]],
    edge: tuple[int, int],
    forward_cases: dict[tuple[int, int], tuple[frozenset[int], int, Optional[tuple[int, int]]]],
) -> tuple[frozenset[int], str]:
    """The late contribution of edge (i, j) to j's branch set, given B_i.

    Case A (B_i misses every region along the tail): take the whole tail's
    regions; the bridge into B_i is the forward piece's stored red edge.
    Case B: cut the tail at the region closest to j's root that meets B_i
    and route through that region's tree up to (but excluding) B_i.
    """
    i, j = edge
    record = rep.record(i, j)
    rs = rep.regions
    host = rs.host
    b_i = built[i]
    tail = record.tail  # y .. c_j
    reach = _region_union(rep, tail)

    if not (b_i & reach):
        piece = reach
        fpiece, fcase, red_edge = forward_cases[edge]
        if fcase != 1 or red_edge is None:
            raise ClaimViolation(
                "Bji",
                f"edge {edge}: case A with forward case {fcase}; contact is impossible",
            )
        if red_edge[1] not in piece or red_edge[0] not in b_i:
            raise ClaimViolation(
                "Bji", f"edge {edge}: stored bridge {red_edge} does not join the sets"
            )
        case = "A"
    else:
        z_idx = None
        for idx in range(len(tail) - 1, -1, -1):  # from c_j towards y
            if b_i & rs.region(tail[idx]):
                z_idx = idx
                break
        z = tail[z_idx]
        if z == tail[-1]:
            raise ClaimViolation(
                "first", f"edge {edge}: built set {i} meets the root region of {j}"
            )
        z_up = tail[z_idx + 1]
        first_set = rs.region(z) & rs.region(z_up)
        second_set = rs.region(z) & b_i
        if rs.region(z_up) & b_i:
            raise ClaimViolation(
                "Bji", f"edge {edge}: minimality of z={z} fails at {z_up}"
            )
        path = region_tree_path_between_sets(rs, z, first_set, second_set)
        if set(path[:-1]) & b_i:
            raise ClaimViolation(
                "Bji", f"edge {edge}: interior of the connecting path meets block {i}"
            )
        piece = frozenset(_region_union(rep, tail[z_idx + 1 :]) | set(path[:-1]))
        if not host.has_edge(path[-2], path[-1]):
            raise ClaimViolation("Bji", f"edge {edge}: no bridge from {path[-2]} into B_i")
        case = "B"

    if piece & b_i:
        raise ClaimViolation(
            "Bji", f"edge {edge}: piece intersects block {i} at {sorted(piece & b_i)}"
        )
    if not _host_edge_between(host, piece, b_i):
        raise ClaimViolation("Bji", f"edge {edge}: no host edge into block {i}")
    c_j = rep.model.roots[j]
    if not rs.region(c_j) <= piece:
        raise ClaimViolation("backward-root", f"edge {edge}: root region not contained")
    if not is_connected_within(host, piece):
        raise ClaimViolation("backward-connected", f"edge {edge}: piece disconnected")
    return piece, case


def _host_edge_between(host: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    smaller, larger = (a, b) if len(a) <= len(b) else (b, a)
    return any(w in larger for v in smaller for w in host.adj[v])


def extract_host_model(
    rep: Representation,
    orient: Orientation,
    sub: Optional[PatternSubgraph] = None,
) -> HostModel:
    """Run the full induction and return validated host branch sets.

    Precondition: `sub` (default: the whole pattern) has no junctions under
    `orient`.  Raises JunctionPreconditionError otherwise, and
    ClaimViolation if any internal step of the construction fails.
    """
    if sub is None:
        sub = PatternSubgraph.full(rep.model.pattern)
    junctions = find_junctions(rep, orient, sub)
    if junctions:
        raise JunctionPreconditionError(
            f"{len(junctions)} junction(s) present, first: {junctions[0]}"
        )

    host = rep.regions.host
    core_vertices, core_edges = _sub_core(sub)
    pos = {v: idx for idx, v in enumerate(rep.ordering)}
    order = sorted(core_vertices, key=lambda v: pos[v])
    rank = {v: idx for idx, v in enumerate(order)}

    if not order:
        empty = ExtractionLedger(early=(), late=())
        return HostModel(host, Graph.from_edges(0, []), (), (), empty)

    # Roots of core blocks must be pairwise non-adjacent in the ambient graph.
    g = rep.model.ambient
    roots = [rep.model.roots[v] for v in order]
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            if g.has_edge(roots[a], roots[b]):
                raise ClaimViolation(
                    "basic",
                    f"roots {roots[a]} and {roots[b]} of blocks "
                    f"{order[a]} and {order[b]} are adjacent",
                )

    directed_edges = [
        (u, v) if pos[u] < pos[v] else (v, u) for u, v in sorted(core_edges)
    ]

    forward: dict[tuple[int, int], tuple[frozenset[int], int, Optional[tuple[int, int]]]] = {}
    for i, j in directed_edges:
        forward[(i, j)] = build_forward_piece(rep, (i, j))

    early: dict[int, frozenset[int]] = {}
    for v in order:
        parts = set(rep.regions.region(rep.model.roots[v]))
        for (i, j), (piece, _, _) in forward.items():
            if i == v:
                parts |= piece
        early[v] = frozenset(parts)
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            overlap = early[order[a]] & early[order[b]]
            if overlap:
                raise ClaimViolation(
                    "early-disjointness",
                    f"blocks {order[a]} and {order[b]} share host vertices {sorted(overlap)}",
                )
    for v in order:
        if not is_connected_within(host, early[v]):
            raise ClaimViolation("early-connected", f"block {v}: early part disconnected")

    built: dict[int, frozenset[int]] = {order[0]: early[order[0]]}
    late: dict[int, frozenset[int]] = {order[0]: frozenset()}
    backward: dict[tuple[int, int], tuple[frozenset[int], str]] = {}
    for jj in range(1, len(order)):
        v = order[jj]
        pieces: set[int] = set()
        for i, j in directed_edges:
            if j != v:
                continue
            piece, case = build_backward_piece(rep, built, (i, j), forward)
            backward[(j, i)] = (piece, case)
            pieces |= piece
        late[v] = frozenset(pieces)
        b_v = early[v] | late[v]
        if not is_connected_within(host, b_v):
            raise ClaimViolation("branch-connected", f"block {v}: branch set disconnected")
        for prev in order[:jj]:
            if b_v & built[prev]:
                raise ClaimViolation(
                    "first", f"blocks {prev} and {v}: {sorted(b_v & built[prev])} shared"
                )
        for later in order[jj + 1 :]:
            if b_v & early[later]:
                raise ClaimViolation(
                    "second",
                    f"block {v} hits the early part of {later}: "
                    f"{sorted(b_v & early[later])}",
                )
        built[v] = b_v

    core = Graph.from_edges(
        len(order), sorted((min(rank[u], rank[v]), max(rank[u], rank[v])) for u, v in core_edges)
    )
    sets = tuple(built[v] for v in order)
    ledger = ExtractionLedger(
        early=tuple(early[v] for v in order),
        late=tuple(late[v] for v in order),
        forward={
            (rank[i], rank[j]): (piece, case)
            for (i, j), (piece, case, _) in forward.items()
        },
        backward={
            (rank[j], rank[i]): value for (j, i), value in backward.items()
        },
    )
    result = HostModel(host, core, tuple(order), sets, ledger)
    problem = validate_model(result.as_model(), check_radius=False)
    if problem is not None:
        raise ClaimViolation("final-model", problem)
    return result

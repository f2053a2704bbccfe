"""Region systems over a host graph and the intersection graphs they induce.

A region system assigns to each prospective graph vertex a non-empty
connected set of host vertices, together with the canonical BFS spanning
tree of that set (rooted at its smallest vertex).  All in-region shortest
path queries are answered on the stored tree, whose paths are unique, so
downstream constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .geometry import Arrangement, crossing_point, position_along, segments_intersect
from .graphs import Graph, GraphFormatError, bfs_tree, format_graph, parse_graph


@dataclass(frozen=True)
class RegionSystem:
    """Host graph plus one region (connected vertex set) per induced vertex."""

    host: Graph
    region_sets: tuple[frozenset[int], ...]
    region_trees: tuple[dict[int, int], ...]  # parent maps of the canonical BFS trees

    @staticmethod
    def from_sets(host: Graph, regions: Sequence[frozenset[int] | set[int]]) -> "RegionSystem":
        sets = tuple(frozenset(r) for r in regions)
        trees = []
        for idx, region in enumerate(sets):
            if not region:
                raise ValueError(f"region {idx} is empty")
            if not all(0 <= h < host.n for h in region):
                raise ValueError(f"region {idx} has out-of-range host vertices")
            parent, _ = bfs_tree(host, min(region), region)
            trees.append(parent)
        return RegionSystem(host, sets, tuple(trees))

    def __len__(self) -> int:
        return len(self.region_sets)

    def region(self, v: int) -> frozenset[int]:
        return self.region_sets[v]

    def tree_parent(self, v: int) -> dict[int, int]:
        return self.region_trees[v]


def validate_regions(rs: RegionSystem) -> Optional[str]:
    """None when every invariant holds, else the first violation."""
    for idx, region in enumerate(rs.region_sets):
        if not region:
            return f"region {idx}: empty region"
        root = min(region)
        try:
            parent, _ = bfs_tree(rs.host, root, region)
        except ValueError:
            return f"region {idx}: disconnected region"
        stored = rs.region_trees[idx]
        if set(stored) != region - {root}:
            return f"region {idx}: tree does not span the region"
        if stored != parent:
            return f"region {idx}: tree is not the canonical BFS tree"
    return None


def rig(rs: RegionSystem) -> Graph:
    """The region intersection graph: uv is an edge iff the regions meet."""
    problem = validate_regions(rs)
    if problem is not None:
        raise ValueError(f"invalid region system: {problem}")
    edges = []
    for u in range(len(rs)):
        for v in range(u + 1, len(rs)):
            if rs.region_sets[u] & rs.region_sets[v]:
                edges.append((u, v))
    return Graph.from_edges(len(rs), edges)


def region_tree_path(rs: RegionSystem, v: int, a: int, b: int) -> list[int]:
    """Unique path from a to b in region v's stored spanning tree."""
    parent = rs.region_trees[v]
    root = min(rs.region_sets[v])

    def to_root(x: int) -> list[int]:
        chain = [x]
        while chain[-1] != root:
            chain.append(parent[chain[-1]])
        return chain

    up_a, up_b = to_root(a), to_root(b)
    seen = {x: i for i, x in enumerate(up_a)}
    for j, x in enumerate(up_b):
        if x in seen:
            return up_a[: seen[x]] + up_b[: j + 1][::-1]
    raise RuntimeError("tree path search failed")  # unreachable on a valid tree


def region_tree_path_between_sets(
    rs: RegionSystem, v: int, first: frozenset[int] | set[int], second: frozenset[int] | set[int]
) -> list[int]:
    """Shortest stored-tree path from `first` to `second` inside region v.

    Ties between equally close pairs are broken lexicographically by
    (vertex id in first, vertex id in second).  Endpoints are included; when
    the sets share a vertex the path is that single vertex.
    """
    if not first or not second:
        raise ValueError("set-to-set path requires non-empty sets")
    best: Optional[tuple[int, int, int]] = None
    best_path: Optional[list[int]] = None
    for a in sorted(first):
        for b in sorted(second):
            path = region_tree_path(rs, v, a, b)
            key = (len(path), a, b)
            if best is None or key < best:
                best = key
                best_path = path
    return best_path


def region_tree_set_distance(
    rs: RegionSystem, v: int, first: frozenset[int] | set[int], second: frozenset[int] | set[int]
) -> int:
    return len(region_tree_path_between_sets(rs, v, first, second)) - 1


def arrangement_to_rig(arr: Arrangement) -> RegionSystem:
    """Host-graph encoding of an arrangement.

    The host has one vertex per intersection point; consecutive points along
    a segment are host edges; region v is the set of points on segment v.
    Segments without intersections receive a fresh singleton host vertex, so
    the induced graph is always defined and equals the string graph
    vertex-for-vertex.  Host ids are assigned by (first incident segment,
    position along it).
    """
    n = len(arr)
    crossings: dict[int, list] = {i: [] for i in range(n)}
    point_ids: dict[tuple, int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if segments_intersect(arr.segments[i], arr.segments[j]):
                pt = crossing_point(arr.segments[i], arr.segments[j])
                crossings[i].append(pt)
                crossings[j].append(pt)

    next_id = 0
    host_edges: set[tuple[int, int]] = set()
    regions: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        if not crossings[i]:
            regions[i].add(next_id)  # fresh singleton host vertex
            next_id += 1
            continue
        along = sorted(set(crossings[i]), key=lambda pt: position_along(arr.segments[i], pt))
        ids = []
        for pt in along:
            if pt not in point_ids:
                point_ids[pt] = next_id
                next_id += 1
            ids.append(point_ids[pt])
            regions[i].add(point_ids[pt])
        for a, b in zip(ids, ids[1:]):
            if a != b:
                host_edges.add((a, b) if a < b else (b, a))
    host = Graph.from_edges(next_id, sorted(host_edges))
    return RegionSystem.from_sets(host, regions)


def parse_region_system(text: str) -> RegionSystem:
    """Parse a Graph block for the host followed by ``region <v>: <h1> ...`` lines."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    split_at = next((i for i, ln in enumerate(lines) if ln.startswith("region ")), len(lines))
    host = parse_graph("\n".join(lines[:split_at]))
    region_lines = lines[split_at:]
    regions: dict[int, frozenset[int]] = {}
    for ln in region_lines:
        head, _, tail = ln.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "region":
            raise GraphFormatError(f"bad region line: {ln!r}")
        try:
            v = int(parts[1])
            members = frozenset(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise GraphFormatError(f"bad region line: {ln!r}") from exc
        if v in regions:
            raise GraphFormatError(f"duplicate region {v}")
        regions[v] = members
    if sorted(regions) != list(range(len(regions))):
        raise GraphFormatError("region indices must be 0..count-1")
    return RegionSystem.from_sets(host, [regions[v] for v in sorted(regions)])


def format_region_system(rs: RegionSystem) -> str:
    out = format_graph(rs.host)
    for v, region in enumerate(rs.region_sets):
        out += f"region {v}: " + " ".join(str(h) for h in sorted(region)) + "\n"
    return out

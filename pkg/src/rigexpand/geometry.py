"""Exact segment arrangements, their intersection graphs, and cover certificates.

All predicates are integer sign tests; intersection points are exact
rationals.  Arrangements are required to be in general position: collinear
overlaps and any endpoint lying on another segment are rejected outright
rather than perturbed, so every incidence is a proper transversal crossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphFormatError, degeneracy_order


class DegenerateArrangementError(ValueError):
    """A segment pair violates the general-position requirements."""


class CoverCertificateError(RuntimeError):
    """The forward-neighbourhood cover failed to hit a charged edge."""


Point = tuple[int, int]


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError(f"degenerate segment at {self.p}")


def _cross_sign(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear."""
    val = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if val > 0:
        return 1
    if val < 0:
        return -1
    return 0


def _on_closed_segment(p: Point, q: Point, r: Point) -> bool:
    """Whether r lies on the closed segment pq (assumes collinear not required)."""
    if _cross_sign(p, q, r) != 0:
        return False
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def segments_intersect(a: Segment, b: Segment) -> bool:
    """True iff the closed segments share a point (a proper interior crossing).

    General position is a precondition: collinear overlaps and endpoint
    incidences (endpoint on the other segment, shared endpoints included)
    raise DegenerateArrangementError instead of being classified.
    """
    o1 = _cross_sign(a.p, a.q, b.p)
    o2 = _cross_sign(a.p, a.q, b.q)
    o3 = _cross_sign(b.p, b.q, a.p)
    o4 = _cross_sign(b.p, b.q, a.q)

    if o1 == 0 and o2 == 0:
        # Collinear pair: any shared point would be an overlap or endpoint contact.
        if (
            _on_closed_segment(a.p, a.q, b.p)
            or _on_closed_segment(a.p, a.q, b.q)
            or _on_closed_segment(b.p, b.q, a.p)
            or _on_closed_segment(b.p, b.q, a.q)
        ):
            raise DegenerateArrangementError(f"collinear contact between {a} and {b}")
        return False
    for seg, other_o, pt in ((a, o1, b.p), (a, o2, b.q), (b, o3, a.p), (b, o4, a.q)):
        if other_o == 0 and _on_closed_segment(seg.p, seg.q, pt):
            raise DegenerateArrangementError(f"endpoint {pt} lies on segment {seg}")
    return o1 * o2 < 0 and o3 * o4 < 0


def crossing_point(a: Segment, b: Segment) -> tuple[Fraction, Fraction]:
    """Exact rational crossing point of two properly crossing segments."""
    if not segments_intersect(a, b):
        raise ValueError("segments do not cross")
    dax, day = a.q[0] - a.p[0], a.q[1] - a.p[1]
    dbx, dby = b.q[0] - b.p[0], b.q[1] - b.p[1]
    denom = dax * dby - day * dbx
    t = Fraction((b.p[0] - a.p[0]) * dby - (b.p[1] - a.p[1]) * dbx, denom)
    return (a.p[0] + t * dax, a.p[1] + t * day)


def position_along(seg: Segment, point: tuple[Fraction, Fraction]) -> Fraction:
    """Parameter t in [0, 1] of a point on the segment's supporting line."""
    dax, day = seg.q[0] - seg.p[0], seg.q[1] - seg.p[1]
    if abs(dax) >= abs(day):
        return Fraction(point[0] - seg.p[0], dax)
    return Fraction(point[1] - seg.p[1], day)


@dataclass(frozen=True)
class Arrangement:
    """A general-position collection of segments (validated pairwise)."""

    segments: tuple[Segment, ...]

    def __post_init__(self):
        for i in range(len(self.segments)):
            for j in range(i + 1, len(self.segments)):
                try:
                    segments_intersect(self.segments[i], self.segments[j])
                except DegenerateArrangementError as exc:
                    raise DegenerateArrangementError(
                        f"segments {i} and {j}: {exc}"
                    ) from None

    def __len__(self) -> int:
        return len(self.segments)


def string_graph(arr: Arrangement) -> Graph:
    """Intersection graph: vertex i per segment, edge ij iff segments cross."""
    edges = []
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            if segments_intersect(arr.segments[i], arr.segments[j]):
                edges.append((i, j))
    return Graph.from_edges(len(arr), edges)


@dataclass(frozen=True)
class CoverCertificate:
    """Certified per-edge covers for the max-position bearing.

    For the potential-crossing relation (independent edges whose endpoint
    neighbourhoods can meet), each pair is charged to the edge with the
    smaller maximum position; ``cover[e]`` is the union of forward
    neighbourhoods of e's endpoints and hits every edge charged to e.
    """

    ordering: tuple[int, ...]
    cover: dict[tuple[int, int], frozenset[int]]
    bound: int
    charged: dict[tuple[int, int], tuple[tuple[int, int], ...]]


def _canonical(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def potential_bearing(g: Graph, order: list[int] | tuple[int, ...]) -> CoverCertificate:
    """Build and verify the forward-neighbourhood cover certificate.

    Edges e and f (independent, i.e. sharing no endpoint) potentially cross
    when some endpoint of one is adjacent to some endpoint of the other.
    Each such pair is charged to the edge whose endpoints' maximum position
    is smaller, except that the charge is flipped when that edge's cover
    would miss the pair: a potential crossing always has an adjacency
    between the two edges, and whichever way it points in the order, the
    forward-neighbourhood cover of one side catches the other.  Covers are
    the unions of the two endpoints' forward neighbourhoods, of size at
    most 2k for degeneracy k.
    """
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = {v: idx for idx, v in enumerate(order)}
    forward = {
        v: frozenset(w for w in g.adj[v] if pos[w] > pos[v]) for v in range(g.n)
    }
    k_order = max((len(s) for s in forward.values()), default=0)
    k_exact, _ = degeneracy_order(g)
    if k_order != k_exact:
        raise ValueError(
            f"not a degeneracy ordering: max forward degree {k_order} != degeneracy {k_exact}"
        )

    edges = g.edges()
    cover = {e: forward[e[0]] | forward[e[1]] for e in edges}
    charged: dict[tuple[int, int], list[tuple[int, int]]] = {e: [] for e in edges}
    for idx_e in range(len(edges)):
        for idx_f in range(idx_e + 1, len(edges)):
            e, f = edges[idx_e], edges[idx_f]
            if set(e) & set(f):
                continue  # only independent pairs enter the bearing
            if not any(g.has_edge(x, y) for x in e for y in f):
                continue  # endpoint neighbourhoods cannot meet
            if max(pos[f[0]], pos[f[1]]) > max(pos[e[0]], pos[e[1]]):
                earlier, later = e, f
            else:
                earlier, later = f, e
            if not (cover[earlier] & set(later)):
                earlier, later = later, earlier
            charged[earlier].append(later)
            if not (cover[earlier] & set(later)):
                raise CoverCertificateError(
                    f"neither direction of {{{e}, {f}}} is covered under order {order}"
                )
    return CoverCertificate(
        ordering=order,
        cover=cover,
        bound=2 * k_exact,
        charged={e: tuple(sorted(v)) for e, v in charged.items()},
    )


def parse_arrangement(text: str) -> Arrangement:
    """Parse ``segments <n>`` followed by n lines ``<x1> <y1> <x2> <y2>``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty arrangement block")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "segments":
        raise GraphFormatError(f"bad arrangement header: {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad arrangement header: {lines[0]!r}") from exc
    if len(lines) - 1 != n:
        raise GraphFormatError(f"expected {n} segment lines, found {len(lines) - 1}")
    segs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 4:
            raise GraphFormatError(f"bad segment line: {ln!r}")
        try:
            x1, y1, x2, y2 = (int(p) for p in parts)
        except ValueError as exc:
            raise GraphFormatError(f"bad segment line: {ln!r}") from exc
        segs.append(Segment((x1, y1), (x2, y2)))
    return Arrangement(tuple(segs))


def format_arrangement(arr: Arrangement) -> str:
    lines = [f"segments {len(arr)}"]
    for s in arr.segments:
        lines.append(f"{s.p[0]} {s.p[1]} {s.q[0]} {s.q[1]}")
    return "\n".join(lines) + "\n"

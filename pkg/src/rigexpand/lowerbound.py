"""Explicit segment families witnessing dense shallow cliques at bounded density.

The construction draws, for parameters d >= 2 and r >= 1, a grid of
(2r+1)-segment "columns" (each column's segments crossing consecutively, so
the column induces a path) and one layer of long horizontal segments per
row, each crossing exactly its row.  Orienting row segments into columns
and columns downwards certifies maximum density at most d; assigning one
row segment to each column by a fixed bijection yields a clique model with
one branch set per column.

The realisation below fixes concrete integer coordinates and then verifies
the intended crossing combinatorics programmatically instead of trusting
the drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import bound_lower
from .geometry import Arrangement, Segment, string_graph
from .graphs import Graph, Orientation, hakimi_orient, radius_and_centre
from .minors import MinorModel, validate_model


@dataclass(frozen=True)
class LowerBoundInstance:
    d: int
    r: int
    arrangement: Arrangement
    graph: Graph
    bijection: tuple[tuple[int, int], ...]  # column j (0-based) -> (row, layer), 1-based

    @property
    def d_prime(self) -> int:
        return self.d - 1

    @property
    def r_prime(self) -> int:
        return 2 * self.r + 1

    @property
    def columns(self) -> int:
        return self.d_prime * self.r_prime

    def alpha_id(self, row: int, col: int) -> int:
        """Segment id of the column segment at 1-based (row, col)."""
        return (col - 1) * self.r_prime + (row - 1)

    def gamma_id(self, row: int, layer: int) -> int:
        """Segment id of the 1-based (row, layer) horizontal segment."""
        return self.columns * self.r_prime + (row - 1) * self.d_prime + (layer - 1)


def generate(d: int, r: int) -> LowerBoundInstance:
    """Build the arrangement for (d, r) and verify its crossing structure.

    Column j occupies the x-band [100s*j, 100s*j + 10s] with s = d + 1;
    row i's segments live around y = 100s*i, slanting up for odd i and down
    for even i so that consecutive rows cross once.  Horizontal segments sit
    at y = 100s*i + (2k - d) for layer k, which keeps them strictly inside
    row i and clear of every crossing level and endpoint.
    """
    if d < 2 or r < 1:
        raise ValueError("need d >= 2 and r >= 1")
    d_prime, r_prime = d - 1, 2 * r + 1
    cols = d_prime * r_prime
    s = d_prime + 2
    segments: list[Segment] = []
    for col in range(1, cols + 1):
        x0 = 100 * s * col
        for row in range(1, r_prime + 1):
            yc = 100 * s * row
            if row % 2 == 1:
                segments.append(Segment((x0, yc - 55 * s), (x0 + 10 * s, yc + 55 * s)))
            else:
                segments.append(Segment((x0, yc + 55 * s), (x0 + 10 * s, yc - 55 * s)))
    x_left = -10 * s
    x_right = 100 * s * cols + 20 * s
    for row in range(1, r_prime + 1):
        for layer in range(1, d_prime + 1):
            y = 100 * s * row + (2 * layer - d_prime - 1)
            segments.append(Segment((x_left, y), (x_right, y)))

    arrangement = Arrangement(tuple(segments))
    graph = string_graph(arrangement)

    inst = LowerBoundInstance(
        d=d,
        r=r,
        arrangement=arrangement,
        graph=graph,
        bijection=tuple(((j - 1) % r_prime + 1, (j - 1) // r_prime + 1) for j in range(1, cols + 1)),
    )
    _verify_combinatorics(inst)
    return inst


def _verify_combinatorics(inst: LowerBoundInstance) -> None:
    """The string graph must match the intended crossings exactly."""
    expected: set[tuple[int, int]] = set()
    for col in range(1, inst.columns + 1):
        for row in range(1, inst.r_prime):
            a, b = inst.alpha_id(row, col), inst.alpha_id(row + 1, col)
            expected.add((min(a, b), max(a, b)))
    for row in range(1, inst.r_prime + 1):
        for layer in range(1, inst.d_prime + 1):
            gid = inst.gamma_id(row, layer)
            for col in range(1, inst.columns + 1):
                aid = inst.alpha_id(row, col)
                expected.add((min(aid, gid), max(aid, gid)))
    actual = set(inst.graph.edges())
    if actual != expected:
        raise RuntimeError(
            "realisation bug: unexpected crossings "
            f"{sorted(actual - expected)[:5]} / missing {sorted(expected - actual)[:5]}"
        )


def orient_instance(inst: LowerBoundInstance) -> Orientation:
    """Row segments point into their rows; columns point downwards.

    Every column segment receives at most d-1 row arcs plus one along-column
    arc, so the maximum indegree is d and the graph's maximum density is
    certified to be at most d.
    """
    direction: dict[tuple[int, int], tuple[int, int]] = {}
    for col in range(1, inst.columns + 1):
        for row in range(1, inst.r_prime):
            tail, head = inst.alpha_id(row, col), inst.alpha_id(row + 1, col)
            key = (min(tail, head), max(tail, head))
            direction[key] = (tail, head)
    for row in range(1, inst.r_prime + 1):
        for layer in range(1, inst.d_prime + 1):
            gid = inst.gamma_id(row, layer)
            for col in range(1, inst.columns + 1):
                aid = inst.alpha_id(row, col)
                key = (min(gid, aid), max(gid, aid))
                direction[key] = (gid, aid)
    orientation = Orientation(inst.graph, direction)
    assert orientation.max_indegree() <= inst.d
    return orientation


def clique_model(inst: LowerBoundInstance) -> MinorModel:
    """One branch set per column: its segments plus the assigned row segment.

    The root is the middle segment of the column path, re-centred when that
    choice does not realise the radius.
    """
    family = []
    roots = []
    for col in range(1, inst.columns + 1):
        row, layer = inst.bijection[col - 1]
        members = frozenset(
            {inst.alpha_id(i, col) for i in range(1, inst.r_prime + 1)}
            | {inst.gamma_id(row, layer)}
        )
        family.append(members)
        middle = inst.alpha_id(inst.r + 1, col)
        radius, centre = radius_and_centre(inst.graph, members)
        roots.append(middle if _ecc_at_most(inst.graph, middle, members, inst.r) else centre)
    n = inst.columns
    pattern = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return MinorModel(
        ambient=inst.graph,
        pattern=pattern,
        branch=tuple(family),
        roots=tuple(roots),
        depth_bound=inst.r,
    )


def _ecc_at_most(g: Graph, v: int, within: frozenset[int], bound: int) -> bool:
    from .graphs import eccentricity_within

    return eccentricity_within(g, v, within) <= bound


@dataclass(frozen=True)
class LowerBoundReport:
    d: int
    r: int
    segment_count: int
    hakimi_feasible: bool
    clique_order: int
    clique_density: Fraction
    closed_form: Fraction  # dr + d/2 - r - 1
    density_equals_closed_form: bool
    meets_lower_bound: bool
    model_problem: Optional[str]  # None when the model validates r-shallow
    model_valid_one_deeper: bool  # the same sets validate with depth r+1

    def to_lines(self) -> list[str]:
        return [
            f"d = {self.d}",
            f"r = {self.r}",
            f"segments = {self.segment_count}",
            f"hakimi_feasible = {str(self.hakimi_feasible).lower()}",
            f"clique_order = {self.clique_order}",
            f"clique_density = {self.clique_density}",
            f"closed_form = {self.closed_form}",
            f"density_equals_closed_form = {str(self.density_equals_closed_form).lower()}",
            f"meets_lower_bound = {str(self.meets_lower_bound).lower()}",
            f"shallow_model_valid = {str(self.model_problem is None).lower()}",
            f"shallow_model_problem = {self.model_problem or '-'}",
            f"shallow_model_valid_one_deeper = {str(self.model_valid_one_deeper).lower()}",
        ]


def verify_lower_bound(inst: LowerBoundInstance) -> LowerBoundReport:
    """Hakimi feasibility at d, clique-model validation, and the exact densities."""
    feasible = hakimi_orient(inst.graph, inst.d) is not None
    model = clique_model(inst)
    problem = validate_model(model)
    deeper = MinorModel(
        ambient=model.ambient,
        pattern=model.pattern,
        branch=model.branch,
        roots=model.roots,
        depth_bound=inst.r + 1,
    )
    deeper_ok = validate_model(deeper) is None
    density = Fraction(model.pattern.m, model.pattern.n)
    closed = bound_lower(inst.d, inst.r)
    expected = Fraction(inst.d_prime * inst.r_prime - 1, 2)
    return LowerBoundReport(
        d=inst.d,
        r=inst.r,
        segment_count=len(inst.arrangement),
        hakimi_feasible=feasible,
        clique_order=model.pattern.n,
        clique_density=density,
        closed_form=closed,
        density_equals_closed_form=(density == expected == closed),
        meets_lower_bound=density >= closed,
        model_problem=problem,
        model_valid_one_deeper=deeper_ok,
    )

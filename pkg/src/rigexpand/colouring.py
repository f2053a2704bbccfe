"""Strong reachability, strong colouring numbers, and acyclic colourings.

Exact searches are branch-and-bound over vertex orders (bitmask BFS for the
reach counts) and backtracking over colourings; both are capped and raise
rather than silently degrading.  A separate greedy order builder provides
upper bounds above the caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import bound_scol
from .graphs import Graph
from .minors import DEFAULT_NABLA_CAP, SizeCapExceeded, nabla_exact

VertexOrder = tuple[int, ...]

DEFAULT_SCOL_CAP = 8
DEFAULT_ACYCLIC_CAP = 10


def strong_reach(g: Graph, order: Sequence[int], v: int, r: int) -> frozenset[int]:
    """Vertices w at or before v joined to v by a path of length <= r whose
    internal vertices all come strictly after v.  Includes v itself (the
    length-0 path)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = {x: idx for idx, x in enumerate(order)}
    reach = {v}
    frontier = [v]
    seen_internal: set[int] = set()
    for step in range(r):
        nxt: list[int] = []
        for u in frontier:
            for w in g.adj[u]:
                if pos[w] <= pos[v]:
                    reach.add(w)
                elif w not in seen_internal:
                    seen_internal.add(w)
                    nxt.append(w)
        frontier = nxt
        if not frontier:
            break
    return frozenset(reach)


def _reach_count_masked(
    adj: Sequence[int], v: int, internal_mask: int, endpoint_mask: int, r: int
) -> int:
    """Bitmask version: endpoints from endpoint_mask (v included), internals
    restricted to internal_mask."""
    reach = 1 << v
    frontier = 1 << v
    visited = 0
    for _ in range(r):
        nbrs = 0
        f = frontier
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            nbrs |= adj[u]
        reach |= nbrs & endpoint_mask
        frontier = nbrs & internal_mask & ~visited
        visited |= frontier
        if not frontier:
            break
    return bin(reach).count("1")


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def scol_exact(g: Graph, r: int, cap: int = DEFAULT_SCOL_CAP) -> tuple[int, VertexOrder]:
    """Minimum over all vertex orders of the worst strong-reach size.

    Branch-and-bound on prefixes: the reach of a vertex is fixed the moment
    it is placed, so a prefix whose worst reach already ties the incumbent
    cannot improve.  Returns the lexicographically least optimal order.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"scol_exact cap is {cap}, graph has {g.n} vertices")
    if g.n == 0:
        return 0, ()
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    best_value = g.n + 1
    best_order: tuple[int, ...] = ()

    def backtrack(prefix: list[int], placed: int, worst: int):
        nonlocal best_value, best_order
        if len(prefix) == g.n:
            best_value = worst
            best_order = tuple(prefix)
            return
        for v in range(g.n):
            bit = 1 << v
            if placed & bit:
                continue
            endpoint_mask = placed | bit
            internal_mask = full & ~endpoint_mask
            cnt = _reach_count_masked(adj, v, internal_mask, endpoint_mask, r)
            new_worst = max(worst, cnt)
            if new_worst >= best_value:
                continue
            prefix.append(v)
            backtrack(prefix, placed | bit, new_worst)
            prefix.pop()

    backtrack([], 0, 0)
    return best_value, best_order


def scol_greedy(g: Graph, r: int) -> tuple[int, VertexOrder]:
    """Upper bound: build the order from the back, always placing next-to-last
    the vertex whose reach through the already-placed suffix is smallest
    (ties to the smallest id).  Never below the exact value."""
    if g.n == 0:
        return 0, ()
    adj = _adj_masks(g)
    unplaced = (1 << g.n) - 1
    suffix = 0
    order_rev: list[int] = []
    value = 0
    for _ in range(g.n):
        best: Optional[tuple[int, int]] = None
        for v in range(g.n):
            bit = 1 << v
            if not (unplaced & bit):
                continue
            cnt = _reach_count_masked(adj, v, suffix, unplaced, r)
            if best is None or (cnt, v) < best:
                best = (cnt, v)
        cnt, v = best
        value = max(value, cnt)
        order_rev.append(v)
        unplaced &= ~(1 << v)
        suffix |= 1 << v
    return value, tuple(reversed(order_rev))


def _pair_induces_forest(g: Graph, colours: Sequence[int], a: int, b: int) -> bool:
    members = [v for v in range(g.n) if colours[v] in (a, b)]
    parent = {v: v for v in members}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in members:
        for w in g.adj[u]:
            if w > u and colours[w] in (a, b):
                ru, rw = find(u), find(w)
                if ru == rw:
                    return False
                parent[ru] = rw
    return True


def verify_acyclic_colouring(g: Graph, colours: Sequence[int]) -> bool:
    """Proper, and every two colour classes induce a forest."""
    if len(colours) != g.n:
        return False
    for u, v in g.edges():
        if colours[u] == colours[v]:
            return False
    used = sorted(set(colours))
    for i in range(len(used)):
        for j in range(i + 1, len(used)):
            if not _pair_induces_forest(g, colours, used[i], used[j]):
                return False
    return True


def acyclic_chromatic_exact(
    g: Graph, cap: int = DEFAULT_ACYCLIC_CAP
) -> tuple[int, tuple[int, ...]]:
    """Minimum colours for a proper colouring whose class pairs induce forests.

    Exhaustive backtracking with the usual symmetry cap (a vertex may open
    at most one new colour).  The witness is re-verified before returning.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"acyclic chromatic cap is {cap}, graph has {g.n} vertices")
    if g.n == 0:
        return 0, ()

    def try_k(k: int) -> Optional[list[int]]:
        colours = [-1] * g.n

        def creates_bichromatic_cycle(v: int) -> bool:
            cv = colours[v]
            other = {colours[w] for w in g.adj[v] if colours[w] >= 0 and colours[w] != cv}
            return any(not _pair_induces_forest(g, colours, cv, c) for c in other)

        def assign(v: int, used: int) -> bool:
            if v == g.n:
                return True
            for c in range(min(used + 1, k)):
                if any(colours[w] == c for w in g.adj[v] if w < v):
                    continue
                colours[v] = c
                if not creates_bichromatic_cycle(v):
                    if assign(v + 1, max(used, c + 1)):
                        return True
                colours[v] = -1
            return False

        return list(colours) if assign(0, 0) else None

    for k in range(1, g.n + 1):
        witness = try_k(k)
        if witness is not None:
            assert verify_acyclic_colouring(g, witness)
            return k, tuple(witness)
    raise RuntimeError("no colouring found")  # unreachable: n colours always work


@dataclass(frozen=True)
class InequalityReport:
    r: int
    chi_a: int
    scol_2: int
    scol_r: int
    nabla_r_minus_1: Fraction
    eq1_pass: bool
    eq2_pass: bool

    def to_lines(self) -> list[str]:
        return [
            f"chi_a = {self.chi_a}",
            f"scol_2 = {self.scol_2}",
            f"scol_r = {self.scol_r}",
            f"nabla_{{r-1}} = {self.nabla_r_minus_1}",
            f"eq1_pass = {str(self.eq1_pass).lower()}",
            f"eq2_pass = {str(self.eq2_pass).lower()}",
        ]


def check_inequalities(
    g: Graph,
    r: int,
    scol_cap: int = DEFAULT_SCOL_CAP,
    acyclic_cap: int = DEFAULT_ACYCLIC_CAP,
    nabla_cap: int = DEFAULT_NABLA_CAP,
) -> InequalityReport:
    """Exact check of the two colouring inequalities for one graph.

    Asserts chi_a <= scol_2 and scol_r <= (6r)^r * nabla_{r-1}^(3r), all
    sides exact.  Raises SizeCapExceeded if the graph is above any cap.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    chi_a, _ = acyclic_chromatic_exact(g, cap=acyclic_cap)
    scol2, _ = scol_exact(g, 2, cap=scol_cap)
    scolr, _ = scol_exact(g, r, cap=scol_cap) if r != 2 else (scol2, None)
    nabla, _ = nabla_exact(g, r - 1, cap=nabla_cap)
    return InequalityReport(
        r=r,
        chi_a=chi_a,
        scol_2=scol2,
        scol_r=scolr,
        nabla_r_minus_1=nabla,
        eq1_pass=chi_a <= scol2,
        eq2_pass=Fraction(scolr) <= bound_scol(r, nabla),
    )

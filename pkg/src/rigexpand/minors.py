"""Shallow minor models: validation, exhaustive density oracles, generators.

A model carries its designated centres, so the radius condition is checked
against the stored root rather than recomputed.  The exhaustive oracle
``nabla_exact`` enumerates every family of disjoint connected branch sets of
radius at most r (a Bell-number search, hence the size cap) and reports the
densest pattern together with a lexicographically-least witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .graphs import (
    Graph,
    GraphFormatError,
    distances_within,
    edge_density,
    eccentricity_within,
    is_connected_within,
)
from .rng import SplitMix64


class SizeCapExceeded(ValueError):
    """An exhaustive search was asked to run above its configured cap."""


DEFAULT_NABLA_CAP = 9


@dataclass(frozen=True)
class MinorModel:
    """Branch sets (with roots) certifying `pattern` as a minor of `ambient`."""

    ambient: Graph
    pattern: Graph
    branch: tuple[frozenset[int], ...]
    roots: tuple[int, ...]
    depth_bound: int

    def branch_of(self) -> dict[int, int]:
        """Map each ambient vertex inside a branch set to its pattern vertex."""
        owner: dict[int, int] = {}
        for i, s in enumerate(self.branch):
            for v in s:
                owner[v] = i
        return owner


def validate_model(m: MinorModel, check_radius: bool = True) -> Optional[str]:
    """None if the model is valid, else the first violated condition.

    Checks, in order: branch sets non-empty and connected, pairwise
    disjointness, every pattern edge realised by an ambient edge, and (when
    `check_radius`) eccentricity of each root within its branch set at most
    `depth_bound`.
    """
    if len(m.branch) != m.pattern.n or len(m.roots) != m.pattern.n:
        return "branch/root count does not match the pattern"
    for i, s in enumerate(m.branch):
        if not s:
            return f"branch {i}: empty branch set"
        if not all(0 <= v < m.ambient.n for v in s):
            return f"branch {i}: vertex out of range"
        if not is_connected_within(m.ambient, s):
            return f"branch {i}: disconnected branch set"
    seen: dict[int, int] = {}
    for i, s in enumerate(m.branch):
        for v in s:
            if v in seen:
                return f"branches {seen[v]} and {i}: not disjoint (share {v})"
            seen[v] = i
    for i, j in m.pattern.edges():
        if not _touching(m.ambient, m.branch[i], m.branch[j]):
            return f"pattern edge ({i}, {j}): no ambient edge between branch sets"
    if check_radius:
        for i, s in enumerate(m.branch):
            if m.roots[i] not in s:
                return f"branch {i}: root {m.roots[i]} outside the branch set"
            ecc = eccentricity_within(m.ambient, m.roots[i], s)
            if ecc > m.depth_bound:
                return (
                    f"branch {i}: radius exceeded "
                    f"(eccentricity {ecc} > bound {m.depth_bound})"
                )
    return None


def _touching(g: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    smaller, larger = (a, b) if len(a) <= len(b) else (b, a)
    return any(w in larger for v in smaller for w in g.adj[v])


def pattern_density(m: MinorModel) -> Fraction:
    problem = validate_model(m)
    if problem is not None:
        raise ValueError(f"invalid model: {problem}")
    return edge_density(m.pattern)


def _connected_low_radius_subsets(g: Graph, r: int) -> list[tuple[int, frozenset[int]]]:
    """All (min_vertex, subset) pairs with G[subset] connected of radius <= r."""
    out = []
    for mask in range(1, 1 << g.n):
        subset = frozenset(v for v in range(g.n) if mask >> v & 1)
        if not is_connected_within(g, subset):
            continue
        radius = min(eccentricity_within(g, c, subset) for c in subset)
        if radius <= r:
            out.append((min(subset), subset))
    return out


def enumerate_shallow_families(g: Graph, r: int) -> Iterator[tuple[frozenset[int], ...]]:
    """Every non-empty family of disjoint connected radius-<=r subsets.

    Families are produced in a canonical order: blocks are discovered at
    their minimum vertex, scanning vertices in increasing id.
    """
    by_min: dict[int, list[frozenset[int]]] = {}
    for mn, subset in _connected_low_radius_subsets(g, r):
        by_min.setdefault(mn, []).append(subset)

    def rec(v: int, used: frozenset[int], family: tuple[frozenset[int], ...]):
        if v == g.n:
            if family:
                yield family
            return
        yield from rec(v + 1, used, family)  # v belongs to no branch set
        if v in used:
            return
        for subset in by_min.get(v, ()):
            if not (subset & used):
                yield from rec(v + 1, used | subset, family + (subset,))

    yield from rec(0, frozenset(), ())


def model_from_family(g: Graph, family: tuple[frozenset[int], ...], r: int) -> MinorModel:
    """The model on `family` whose pattern takes every touching pair as an edge."""
    edges = [
        (i, j)
        for i in range(len(family))
        for j in range(i + 1, len(family))
        if _touching(g, family[i], family[j])
    ]
    roots = []
    for s in family:
        best = min((eccentricity_within(g, c, s), c) for c in sorted(s))
        roots.append(best[1])
    return MinorModel(
        ambient=g,
        pattern=Graph.from_edges(len(family), edges),
        branch=family,
        roots=tuple(roots),
        depth_bound=r,
    )


def nabla_exact(
    g: Graph, r: int, cap: int = DEFAULT_NABLA_CAP
) -> tuple[Fraction, MinorModel]:
    """Exact maximum edge density over all r-shallow minors, with a witness.

    For a fixed family of branch sets the densest pattern takes every
    touching pair, so maximising over families with full touching patterns
    (including all sub-families) is exhaustive.  Ties prefer the
    lexicographically least family.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"nabla_exact cap is {cap}, graph has {g.n} vertices")
    if g.n == 0:
        raise ValueError("nabla_exact is undefined on the empty graph")
    best: Optional[tuple[Fraction, tuple, tuple[frozenset[int], ...]]] = None
    for family in enumerate_shallow_families(g, r):
        touch = sum(
            1
            for i in range(len(family))
            for j in range(i + 1, len(family))
            if _touching(g, family[i], family[j])
        )
        density = Fraction(touch, len(family))
        key = tuple(sorted(tuple(sorted(s)) for s in family))
        if best is None or density > best[0] or (density == best[0] and key < best[1]):
            best = (density, key, family)
    value, _, family = best
    return value, model_from_family(g, family, r)


def random_shallow_model(
    g: Graph, r: int, target_size: int, seed: int
) -> MinorModel:
    """Seeded r-shallow model grown by random BFS balls with collision avoidance.

    Returns fewer branch sets than requested when the graph runs out of
    unused vertices.  Deterministic per seed.
    """
    if target_size <= 0:
        raise ValueError("target_size must be positive")
    gen = SplitMix64(seed)
    unused = set(range(g.n))
    family: list[frozenset[int]] = []
    roots: list[int] = []
    while len(family) < target_size and unused:
        centre = gen.choice(sorted(unused))
        depth = gen.below(r + 1)
        dist = distances_within(g, centre, unused)
        ball = frozenset(v for v, dv in dist.items() if dv <= depth)
        family.append(ball)
        roots.append(centre)
        unused -= ball
    model = model_from_family(g, tuple(family), r)
    return MinorModel(
        ambient=model.ambient,
        pattern=model.pattern,
        branch=model.branch,
        roots=tuple(roots),
        depth_bound=r,
    )


def is_minor_bruteforce(pattern: Graph, host: Graph, cap: int = 9) -> bool:
    """Whether `pattern` is a minor of `host`, by exhaustive model search."""
    if host.n > cap:
        raise SizeCapExceeded(f"minor tester cap is {cap}, host has {host.n} vertices")
    if pattern.n == 0:
        return True
    if pattern.n > host.n:
        return False
    subsets = [
        subset
        for mask in range(1, 1 << host.n)
        if is_connected_within(
            host, subset := frozenset(v for v in range(host.n) if mask >> v & 1)
        )
    ]
    pattern_adj = pattern.adjacency_sets

    def rec(i: int, used: frozenset[int], placed: list[frozenset[int]]) -> bool:
        if i == pattern.n:
            return True
        if host.n - len(used) < pattern.n - i:
            return False
        for s in subsets:
            if s & used:
                continue
            ok = all(
                _touching(host, s, placed[j]) for j in pattern_adj[i] if j < i
            )
            if ok and rec(i + 1, used | s, placed + [s]):
                return True
        return False

    return rec(0, frozenset(), [])


def parse_model(text: str, ambient: Graph) -> MinorModel:
    """Parse the model text format against a given ambient graph."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty model block")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "model":
        raise GraphFormatError(f"bad model header: {lines[0]!r}")
    size = int(header[1])
    depth = -1 if header[2] == "-" else int(header[2])
    branch: dict[int, frozenset[int]] = {}
    roots: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "branch":
            head, _, tail = ln.partition(":")
            toks = head.split()
            if len(toks) != 4 or toks[2] != "root":
                raise GraphFormatError(f"bad branch line: {ln!r}")
            idx, root = int(toks[1]), int(toks[3])
            branch[idx] = frozenset(int(t) for t in tail.split())
            roots[idx] = root
        elif parts[0] == "pattern-edge":
            if len(parts) != 3:
                raise GraphFormatError(f"bad pattern-edge line: {ln!r}")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise GraphFormatError(f"unrecognised model line: {ln!r}")
    if sorted(branch) != list(range(size)):
        raise GraphFormatError("branch indices must be 0..size-1")
    return MinorModel(
        ambient=ambient,
        pattern=Graph.from_edges(size, edges),
        branch=tuple(branch[i] for i in range(size)),
        roots=tuple(roots[i] for i in range(size)),
        depth_bound=depth,
    )


def format_model(m: MinorModel, depth_text: Optional[str] = None) -> str:
    depth = depth_text if depth_text is not None else str(m.depth_bound)
    lines = [f"model {m.pattern.n} {depth}"]
    for i, s in enumerate(m.branch):
        members = " ".join(str(v) for v in sorted(s))
        lines.append(f"branch {i} root {m.roots[i]}: {members}")
    lines.extend(f"pattern-edge {i} {j}" for i, j in m.pattern.edges())
    return "\n".join(lines) + "\n"

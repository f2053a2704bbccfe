"""Seeded junction-free subsampling and its exact density accounting.

Keeping each pattern vertex with probability 1/(kd + 1) and dropping every
edge whose blocker set is hit yields a junction-free subgraph by
construction.  The accounting side turns that into a deterministic density
check: the pattern's density must stay below beta times the sharp factor
eta(kd), where beta bounds the density of every junction-free subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import E_LOWER, E_UPPER
from .graphs import Orientation
from .representation import (
    PatternSubgraph,
    Representation,
    all_junction_blockers,
)
from .rng import stream


@dataclass(frozen=True)
class SamplingParams:
    """Sampling configuration; the keep probability is exactly 1/(kd + 1)."""

    k: int  # max vertices on any connecting path
    d: int  # indegree bound of the orientation
    seed: int
    trials: int = 1

    def __post_init__(self):
        if self.k < 1 or self.d < 0 or self.trials < 1:
            raise ValueError("need k >= 1, d >= 0, trials >= 1")

    @property
    def p(self) -> Fraction:
        return Fraction(1, self.k * self.d + 1)


def eta(a: int) -> Fraction:
    """The sharp retention factor (a+1)^(a+1) / a^a, with 0^0 = 1.

    Strictly below e*(a+1); verified here against the rational lower bound
    on e, which is the sound direction for a strict upper comparison.
    """
    if a < 0:
        raise ValueError("eta needs a >= 0")
    value = Fraction((a + 1) ** (a + 1), a**a if a > 0 else 1)
    assert value < E_LOWER * (a + 1), f"eta({a}) >= e*(a+1)"
    return value


def _check_preconditions(rep: Representation, orient: Orientation, params: SamplingParams):
    if rep.max_path_vertices() > params.k:
        raise ValueError(
            f"a connecting path has {rep.max_path_vertices()} vertices > k={params.k}"
        )
    if orient.max_indegree() > params.d:
        raise ValueError(
            f"orientation indegree {orient.max_indegree()} exceeds d={params.d}"
        )


def sample_subgraph(
    rep: Representation,
    orient: Orientation,
    params: SamplingParams,
    trial: int,
    blockers: Optional[dict[tuple[int, int], frozenset[int]]] = None,
) -> PatternSubgraph:
    """One junction-free subsample, deterministic for (seed, trial).

    Vertices are kept independently with probability 1/(kd + 1), drawn in
    vertex order from the (seed, trial) substream; an edge survives when
    both ends are kept and none of its blockers is.
    """
    _check_preconditions(rep, orient, params)
    if blockers is None:
        blockers = all_junction_blockers(rep, orient)
    gen = stream(params.seed, trial)
    denom = params.k * params.d + 1
    chosen = frozenset(
        v for v in range(rep.model.pattern.n) if gen.below(denom) == 0
    )
    edges = frozenset(
        edge
        for edge, blocked_by in sorted(blockers.items())
        if edge[0] in chosen and edge[1] in chosen and not (blocked_by & chosen)
    )
    return PatternSubgraph(chosen, edges)


@dataclass(frozen=True)
class SamplingReport:
    n_pattern: int
    m_pattern: int
    density: Fraction
    beta: Fraction
    eta_bound: Fraction  # beta * eta(kd): the sharp deterministic ceiling
    e_bound: Fraction  # beta * e * (kd+1), reported via the rational upper bound on e
    emp_mean_vertices: Fraction
    emp_mean_edges: Fraction
    passed: bool

    def to_lines(self) -> list[str]:
        return [
            f"n_J = {self.n_pattern}",
            f"m_J = {self.m_pattern}",
            f"density_J = {self.density}",
            f"beta = {self.beta}",
            f"eta_bound = {self.eta_bound}",
            f"e_bound = {self.e_bound}",
            f"emp_mean_nV = {self.emp_mean_vertices}",
            f"emp_mean_mE = {self.emp_mean_edges}",
            f"pass = {str(self.passed).lower()}",
        ]


def density_bound_check(
    rep: Representation,
    orient: Orientation,
    params: SamplingParams,
    beta: Fraction | int,
) -> SamplingReport:
    """Deterministic density check plus Monte-Carlo means over `params.trials`.

    `beta` must be a density bound for junction-free subgraphs that the
    caller has certified; the pass verdict asserts density <= beta * eta(kd).
    """
    _check_preconditions(rep, orient, params)
    beta = Fraction(beta)
    pattern = rep.model.pattern
    blockers = all_junction_blockers(rep, orient)

    total_v = 0
    total_e = 0
    for trial in range(params.trials):
        sub = sample_subgraph(rep, orient, params, trial, blockers)
        total_v += len(sub.vertices)
        total_e += len(sub.edges)

    density = Fraction(pattern.m, pattern.n) if pattern.n else Fraction(0)
    kd = params.k * params.d
    eta_bound = beta * eta(kd)
    return SamplingReport(
        n_pattern=pattern.n,
        m_pattern=pattern.m,
        density=density,
        beta=beta,
        eta_bound=eta_bound,
        e_bound=beta * E_UPPER * (kd + 1),
        emp_mean_vertices=Fraction(total_v, params.trials),
        emp_mean_edges=Fraction(total_e, params.trials),
        passed=density <= eta_bound,
    )

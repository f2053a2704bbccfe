"""Command-line entry point.

Every subcommand is deterministic given (inputs, flags, seed) and emits
line-oriented ``key = value`` reports, identical bytes across platforms.
Exit status: 0 when all checks pass, 1 when a verified inequality or claim
fails (a bug, not a usage problem), 2 for usage errors, bad inputs and
exceeded caps.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import lowerbound as lb
from .colouring import (
    DEFAULT_ACYCLIC_CAP,
    DEFAULT_SCOL_CAP,
    acyclic_chromatic_exact,
    check_inequalities,
    scol_exact,
    scol_greedy,
)
from .extraction import ClaimViolation, JunctionPreconditionError, extract_host_model
from .geometry import format_arrangement, parse_arrangement, potential_bearing, string_graph
from .graphs import (
    GraphFormatError,
    degeneracy_order,
    edge_density,
    hakimi_orient,
    max_density,
    parse_graph,
)
from .minors import (
    DEFAULT_NABLA_CAP,
    SizeCapExceeded,
    format_model,
    nabla_exact,
    random_shallow_model,
    validate_model,
)
from .regions import parse_region_system, rig
from .representation import (
    PatternSubgraph,
    build_representation,
    find_junctions,
    format_paths,
)
from .rng import stream
from .sampling import SamplingParams, density_bound_check, sample_subgraph


class CheckFailed(Exception):
    """A verified inequality failed; the run exits with status 1.

    Carries any report lines already produced so they are still emitted.
    """

    def __init__(self, message: str, lines: list[str] | None = None):
        super().__init__(message)
        self.lines = lines or []


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(lines: list[str], output: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bool(x: bool) -> str:
    return str(x).lower()


def cmd_density(args) -> list[str]:
    g = parse_graph(_read(args.input))
    return [
        f"n = {g.n}",
        f"m = {g.m}",
        f"edge_density = {edge_density(g)}",
        f"max_density = {max_density(g) if g.n else 0}",
    ]


def cmd_hakimi(args) -> list[str]:
    g = parse_graph(_read(args.input))
    orient = hakimi_orient(g, args.d)
    lines = [f"d = {args.d}", f"feasible = {_bool(orient is not None)}"]
    if orient is not None:
        lines.append(f"max_indegree = {orient.max_indegree()}")
        lines.extend(f"arc = {a} {b}" for a, b in orient.arcs())
    return lines


def cmd_nabla(args) -> list[str]:
    g = parse_graph(_read(args.input))
    value, witness = nabla_exact(g, args.r, cap=args.cap)
    lines = [f"r = {args.r}", f"nabla = {value}", "witness:"]
    lines.extend(format_model(witness).rstrip("\n").splitlines())
    return lines


def _representation_from_args(args):
    rs = parse_region_system(_read(args.input))
    g = rig(rs)
    model = random_shallow_model(
        g, args.r, target_size=max(2, g.n), seed=stream(args.seed, 0).next64()
    )
    ordering = list(range(model.pattern.n))
    stream(args.seed, 1).shuffle(ordering)
    rep = build_representation(model, rs, tuple(ordering))
    d = math.ceil(max_density(g)) if g.m else 0
    orient = hakimi_orient(g, d)
    return rs, g, model, rep, orient, d


def cmd_represent(args) -> list[str]:
    _, g, model, rep, _, _ = _representation_from_args(args)
    lines = [f"n_G = {g.n}", f"n_J = {model.pattern.n}", f"m_J = {model.pattern.m}"]
    lines.extend(format_paths(rep).rstrip("\n").splitlines())
    return lines


def cmd_junctions(args) -> list[str]:
    _, g, model, rep, orient, d = _representation_from_args(args)
    full = PatternSubgraph.full(model.pattern)
    junctions = find_junctions(rep, orient, full)
    lines = [f"d = {d}", f"junction_count = {len(junctions)}"]
    lines.extend(
        f"junction = arc ({j.arc[0]}, {j.arc[1]}) edge ({j.pattern_edge[0]}, "
        f"{j.pattern_edge[1]}) block {j.witness_block}"
        for j in junctions
    )
    return lines


def cmd_sample(args) -> list[str]:
    _, g, model, rep, orient, d = _representation_from_args(args)
    k = max(rep.max_path_vertices(), 1)
    params = SamplingParams(k=k, d=d, seed=args.seed, trials=args.trials)
    lines = [f"k = {k}", f"d = {d}", f"p = {params.p}"]
    for trial in range(args.trials):
        sub = sample_subgraph(rep, orient, params, trial)
        verts = " ".join(str(v) for v in sorted(sub.vertices))
        lines.append(f"trial {trial}: vertices [{verts}] edges {len(sub.edges)}")
    return lines


def cmd_extract(args) -> list[str]:
    rs, g, model, rep, orient, d = _representation_from_args(args)
    host_model = extract_host_model(rep, orient)
    lines = [
        f"core_order = {host_model.core.n}",
        f"core_edges = {host_model.core.m}",
        f"core_vertices = {' '.join(str(v) for v in host_model.core_to_pattern)}",
    ]
    lines.extend(
        format_model(host_model.as_model(), depth_text="-").rstrip("\n").splitlines()
    )
    return lines


def cmd_lowerbound(args) -> list[str]:
    inst = lb.generate(args.d, args.r)
    report = lb.verify_lower_bound(inst)
    lines = report.to_lines()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(format_arrangement(inst.arrangement))
            fh.write(format_model(lb.clique_model(inst)))
        lines.append(f"written = {args.output}")
    if not (
        report.hakimi_feasible
        and report.density_equals_closed_form
        and report.meets_lower_bound
        and report.model_problem is None
    ):
        raise CheckFailed("lower bound verification failed (see report lines)", lines)
    return lines


def cmd_scol(args) -> list[str]:
    g = parse_graph(_read(args.input))
    if g.n <= args.cap:
        value, order = scol_exact(g, args.r, cap=args.cap)
        method = "exact"
    else:
        value, order = scol_greedy(g, args.r)
        method = "greedy"
    return [
        f"r = {args.r}",
        f"method = {method}",
        f"scol = {value}",
        f"order = {' '.join(str(v) for v in order)}",
    ]


def cmd_acyclic(args) -> list[str]:
    g = parse_graph(_read(args.input))
    value, colours = acyclic_chromatic_exact(g, cap=args.cap)
    return [
        f"chi_a = {value}",
        f"colouring = {' '.join(str(c) for c in colours)}",
    ]


def cmd_bounds(args) -> list[str]:
    t = Fraction(args.t)
    rig_bound = bounds_mod.bound_rig(args.d, args.r, t)
    lines = [
        f"d = {args.d}",
        f"r = {args.r}",
        f"g = {args.g}",
        f"t = {t}",
        f"rig_coefficient = {rig_bound.coefficient}",
        f"rig_bound = {rig_bound.value}",
        f"surface_bound = {bounds_mod.bound_surface(args.d, args.r, args.g)}",
        f"genus_density = {bounds_mod.genus_density(args.g)}",
    ]
    if args.d >= 2 and args.r >= 1:
        lines.append(f"lower_bound = {bounds_mod.bound_lower(args.d, args.r)}")
    return lines


def cmd_pipeline(args) -> list[str]:
    rs = parse_region_system(_read(args.input))
    g = rig(rs)
    d = math.ceil(max_density(g)) if g.m else 0
    orient = hakimi_orient(g, d)
    if orient is None:
        raise CheckFailed("orientation infeasible at d = ceil(max_density)")

    if g.n <= args.cap:
        _, model = nabla_exact(g, args.r, cap=args.cap)
    else:
        model = random_shallow_model(
            g, args.r, target_size=max(2, g.n // (args.r + 2)), seed=stream(args.seed, 0).next64()
        )
    ordering = list(range(model.pattern.n))
    stream(args.seed, 1).shuffle(ordering)
    rep = build_representation(model, rs, tuple(ordering))

    if args.t is not None:
        t = Fraction(args.t)
    elif rs.host.n <= args.cap:
        t, _ = nabla_exact(rs.host, rs.host.n, cap=args.cap)
        t = max(t, Fraction(1))
    else:
        raise GraphFormatError("host too large for exact t; pass --t")

    k = 2 * args.r + 2
    params = SamplingParams(k=k, d=d, seed=args.seed, trials=args.trials)
    for trial in range(args.trials):
        sub = sample_subgraph(rep, orient, params, trial)
        if find_junctions(rep, orient, sub):
            raise CheckFailed(f"stage sample: trial {trial} not junction-free")
        if sub.vertices:
            if Fraction(len(sub.edges), len(sub.vertices)) > t:
                raise CheckFailed(f"stage sample: trial {trial} density above t = {t}")
        try:
            host_model = extract_host_model(rep, orient, sub)
        except (JunctionPreconditionError, ClaimViolation) as exc:
            raise CheckFailed(f"stage extract: trial {trial}: {exc}") from exc
        problem = validate_model(host_model.as_model(), check_radius=False)
        if problem is not None:
            raise CheckFailed(f"stage extract: trial {trial}: {problem}")

    report = density_bound_check(rep, orient, params, beta=t)
    ceiling = bounds_mod.bound_rig(d, args.r, t)
    verdict = report.passed and report.density <= ceiling.value
    lines = [
        f"n_G = {g.n}",
        f"m_G = {g.m}",
        f"d = {d}",
        f"t = {t}",
        f"r = {args.r}",
        f"trials = {args.trials}",
    ]
    lines.extend(report.to_lines())
    lines.append(f"rig_bound = {ceiling.value}")
    lines.append(f"verdict = {'pass' if verdict else 'fail'}")
    if not verdict:
        raise CheckFailed("density exceeded the proven ceiling", lines)
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigexpand",
        description="Exact desk-scale checks for shallow minors over string and region graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn) -> argparse.ArgumentParser:
        p = sub.add_parser(name)
        p.add_argument("--output", default=None)
        p.set_defaults(fn=fn)
        return p

    p = add("density", cmd_density)
    p.add_argument("--input", required=True)

    p = add("hakimi", cmd_hakimi)
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("nabla", cmd_nabla)
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_NABLA_CAP)

    for name, fn in (
        ("represent", cmd_represent),
        ("junctions", cmd_junctions),
        ("extract", cmd_extract),
    ):
        p = add(name, fn)
        p.add_argument("--input", required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--seed", type=int, required=True)

    p = add("sample", cmd_sample)
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)

    p = add("lowerbound", cmd_lowerbound)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("scol", cmd_scol)
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_SCOL_CAP)

    p = add("acyclic", cmd_acyclic)
    p.add_argument("--input", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_ACYCLIC_CAP)

    p = add("bounds", cmd_bounds)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--t", default="1")

    p = add("pipeline", cmd_pipeline)
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--t", default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_NABLA_CAP)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines = args.fn(args)
    except CheckFailed as exc:
        if exc.lines:
            _emit(exc.lines, args.output)
        sys.stderr.write(f"check failed: {exc}\n")
        return 1
    except (ClaimViolation, JunctionPreconditionError) as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    except (GraphFormatError, SizeCapExceeded, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(lines, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

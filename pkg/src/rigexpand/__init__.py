"""Desk-scale exact toolkit for shallow minors over string and region graphs."""

from .bounds import (
    E_LOWER,
    E_UPPER,
    bound_lower,
    bound_rig,
    bound_scol,
    bound_surface,
    genus_density,
    sqrt_upper,
)
from .colouring import (
    acyclic_chromatic_exact,
    check_inequalities,
    scol_exact,
    scol_greedy,
    strong_reach,
    verify_acyclic_colouring,
)
from .extraction import (
    ClaimViolation,
    HostModel,
    JunctionPreconditionError,
    degree2_core,
    extract_host_model,
)
from .geometry import (
    Arrangement,
    CoverCertificate,
    CoverCertificateError,
    DegenerateArrangementError,
    Segment,
    potential_bearing,
    segments_intersect,
    string_graph,
)
from .graphs import (
    Graph,
    Orientation,
    bfs_tree,
    degeneracy_order,
    edge_density,
    hakimi_orient,
    max_density,
    parse_graph,
    radius_and_centre,
)
from .lowerbound import LowerBoundInstance, clique_model, generate, orient_instance, verify_lower_bound
from .minors import (
    MinorModel,
    SizeCapExceeded,
    is_minor_bruteforce,
    nabla_exact,
    pattern_density,
    random_shallow_model,
    validate_model,
)
from .regions import RegionSystem, arrangement_to_rig, rig, validate_regions
from .representation import (
    Junction,
    PatternSubgraph,
    Representation,
    build_representation,
    find_junctions,
    junction_blockers,
)
from .sampling import SamplingParams, density_bound_check, eta, sample_subgraph

__version__ = "0.1.0"

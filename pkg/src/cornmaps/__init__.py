"""Maps on surfaces as flag systems: corners, cornerations and split graphs.

The package models a map by its flags and the three side-swapping
involutions, derives every incidence cell as a flag orbit, and builds the
corner-based machinery on top: corneration enumeration, circuit
decompositions, symmetry-type graphs with their twelve-row classification,
and the four split-graph constructions.
"""

from .core import (
    Cell,
    Circuit,
    EulerData,
    FlagMap,
    Skeleton,
    ValidationReport,
    cells,
    euler_and_genus,
    face_bipartition,
    face_length,
    order_mod,
    rotation_at_vertex,
    skeleton,
    uniform_valence,
    valence,
    validate,
    vertex_bipartition,
)
from .builders import (
    build_antiprism,
    build_antiprism_corneration,
    build_cube,
    build_tetrahedron,
    build_theta,
    build_torus_grid,
    build_torus_grid_corneration,
    from_rotation_system,
)
from .operators import OperatorResult, dual, hole, is_isomorphic, opposite, petrie
from .symmetry import (
    LocalAction,
    SymGroup,
    automorphism_group,
    is_face_reflexible,
    is_half_reflexible,
    is_reflexible,
    local_action_group,
    orbits_on,
    subgroups_up_to_index,
)
from .cornerations import (
    CircuitDecomposition,
    Corner,
    Corneration,
    FacePatternReport,
    LocalCorneration,
    TransitiveCornerationRecord,
    alignment,
    all_j_corners,
    circuits_of,
    corner_from_darts,
    corner_orbits,
    corneration_of,
    corneration_stabilizer,
    enumerate_invariant_cornerations,
    enumerate_transitive_cornerations,
    face_patterns,
    is_corneration,
    is_transitive_on_corners,
    j_complement,
    local_corneration,
    symmetric_cornerations_from_coloring,
    transfer,
)
from .symtype import (
    CANONICAL_DIAGRAMS,
    ROW_ATTRIBUTES,
    ClassificationResult,
    Diagram,
    DiagramAttributes,
    classify,
    diagram_isomorphic,
    enumerate_valid_diagrams,
    satisfies_diagram_constraints,
    symmetry_type_graph,
)
from .splitgraph import (
    CubicReport,
    SplitGraph,
    cubic_filter,
    graph_A,
    graph_B,
    graph_Ci,
    graph_Cx,
    is_locally_connected,
    split,
    to_graph6,
    to_sparse6,
    verify_vertex_transitive,
)
from .fileio import export_dot, parse_corneration, parse_map, write_corneration, write_map
from .verify import run_suite

__version__ = "0.1.0"

"""Stacked simplicial complexes: unique gallery paths, scattered
partitions, and the correspondence between facet and vertex partitions,
with brute-force verification at desk scale."""

from .complexes import (
    SimplicialComplex,
    StackingOrder,
    build_complex,
    dual_adjacency,
    find_stacking_order,
    is_stacked,
    replay_stacking_order,
    restrict,
    subcomplex,
)
from .errors import InputError
from .natline import (
    PrefixPartition,
    check_colimit_compatibility,
    line_graph,
    make_prefix_partition,
    refine_iter,
    refine_once,
    restrict_prefix,
)
from .oracle import (
    BijectionReport,
    CensusReport,
    EnumerationSpec,
    bell,
    census,
    enumerate_partitions,
    facet_spec,
    prefix_spec,
    stirling2,
    verify_bijection,
    vertex_spec,
)
from .partitions import (
    GeneratorPair,
    Partition,
    check_theorem_instance,
    facet_to_vertex,
    facet_to_vertex_generators,
    is_scattered,
    make_partition,
    restrict_partition,
    vertex_to_facet,
    vertex_to_facet_generators,
)
from .paths import (
    DistanceNeighborhood,
    FacePath,
    FacetPath,
    distance_neighborhood,
    end_vertices,
    face_path,
    facet_distance,
    facet_path,
    reduce_walk,
    vertex_distance,
    wall_distance,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "CensusReport",
    "DistanceNeighborhood",
    "EnumerationSpec",
    "FacePath",
    "FacetPath",
    "GeneratorPair",
    "InputError",
    "Partition",
    "PrefixPartition",
    "SimplicialComplex",
    "StackingOrder",
    "bell",
    "build_complex",
    "census",
    "check_colimit_compatibility",
    "check_theorem_instance",
    "distance_neighborhood",
    "dual_adjacency",
    "end_vertices",
    "enumerate_partitions",
    "face_path",
    "facet_distance",
    "facet_path",
    "facet_spec",
    "facet_to_vertex",
    "facet_to_vertex_generators",
    "find_stacking_order",
    "is_scattered",
    "is_stacked",
    "line_graph",
    "make_partition",
    "make_prefix_partition",
    "prefix_spec",
    "reduce_walk",
    "refine_iter",
    "refine_once",
    "replay_stacking_order",
    "restrict",
    "restrict_partition",
    "restrict_prefix",
    "stirling2",
    "subcomplex",
    "verify_bijection",
    "vertex_distance",
    "vertex_spec",
    "vertex_to_facet",
    "vertex_to_facet_generators",
    "wall_distance",
]

"""Recognise basis exchange graphs of matroids and reconstruct the matroid.

Also an exact-rational toolkit for the vertex/facet combinatorics of small
polytopes (matroid polytopes, hypersimplices and perturbations of them).
"""

from .graph import (
    UNREACHABLE,
    CNSClass,
    DistanceTable,
    Graph,
    GraphError,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    classify_cns,
    common_neighbour_subgraph,
    is_isomorphic,
    neighbourhood_subgraph,
)
from .linegraph import (
    BipartiteRoot,
    NotBipartite,
    NotLineGraph,
    RootNotBipartite,
    bipartition,
    line_graph,
    recognize_root,
)
from .matroid import (
    ComponentDecomposition,
    ExchangeViolation,
    Matroid,
    MatroidError,
    beg,
    class_canonical,
    components,
    direct_sum,
    dual,
    exchange_bipartite,
    matroid_iso,
    polytope_vertices,
    uniform,
    validate_matroid,
)
from .polytope import (
    CellType,
    IncidencePolytope,
    NotAVertex,
    affine_dimension,
    cell_census,
    dual_graph,
    facet_enumeration,
    hypersimplex,
    polytope_graph,
    replace_point,
    verify_h_representation,
)
from .reconstruct import (
    LabellingFailure,
    MaurerReport,
    NotBEG,
    Reason,
    StepCounter,
    Success,
    extend_labelling,
    reconstruct,
    square_completion,
    verify_labelling,
    verify_maurer,
)

__all__ = [
    "UNREACHABLE",
    "CNSClass",
    "DistanceTable",
    "Graph",
    "GraphError",
    "all_pairs_distances",
    "build_graph",
    "cartesian_product",
    "classify_cns",
    "common_neighbour_subgraph",
    "is_isomorphic",
    "neighbourhood_subgraph",
    "BipartiteRoot",
    "NotBipartite",
    "NotLineGraph",
    "RootNotBipartite",
    "bipartition",
    "line_graph",
    "recognize_root",
    "ComponentDecomposition",
    "ExchangeViolation",
    "Matroid",
    "MatroidError",
    "beg",
    "class_canonical",
    "components",
    "direct_sum",
    "dual",
    "exchange_bipartite",
    "matroid_iso",
    "polytope_vertices",
    "uniform",
    "validate_matroid",
    "CellType",
    "IncidencePolytope",
    "NotAVertex",
    "affine_dimension",
    "cell_census",
    "dual_graph",
    "facet_enumeration",
    "hypersimplex",
    "polytope_graph",
    "replace_point",
    "verify_h_representation",
    "LabellingFailure",
    "MaurerReport",
    "NotBEG",
    "Reason",
    "StepCounter",
    "Success",
    "extend_labelling",
    "reconstruct",
    "square_completion",
    "verify_labelling",
    "verify_maurer",
]

__version__ = "0.1.0"

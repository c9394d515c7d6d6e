"""Exact small-n laboratory for triangle counts in graphs without disjoint odd cycles."""

from ._backend import kernels
from .census import (
    TriangleHypergraphView,
    count_cycles,
    count_triangles,
    edge_plus_triangle,
    heavy_threshold,
    heavy_vertices,
    triangle_degree,
    triangle_hypergraph,
    triangle_link,
)
from .constructions import (
    BlowUpSpec,
    blow_up,
    complete,
    cycle,
    extremal_construction,
    path,
    star,
    turan,
)
from .detection import (
    ForbiddenFamily,
    ForbiddenPath,
    PackingWitness,
    bipartite_deletion_distance,
    contains_cycle,
    contains_path,
    find_packing,
    is_family_free,
    max_cut,
    odd_cycle_family,
)
from .enumeration import EnumerationFilter, enumerate_count, enumerate_graphs
from .errors import (
    BudgetError,
    CapacityError,
    Graph6ParseError,
    InvalidEdgeError,
    InvalidParameterError,
    TuranLabError,
)
from .extremal import (
    ExtremalRecord,
    VerificationReport,
    exact_generalized_turan,
    formula_value,
    stability_probe,
    verify_alon_shikhelman,
    verify_erdos_gallai,
    verify_furedi_gunderson,
    verify_key_lemma,
    verify_main_theorem,
)
from .graph import (
    CanonicalCertificate,
    Graph,
    canonical_form,
    canonical_graph,
    disjoint_union,
    empty,
    induced_subgraph,
    is_isomorphic,
    join,
)
from .graph6 import decode_graph6, encode_graph6

BACKEND = kernels.NAME
__version__ = "0.1.0"

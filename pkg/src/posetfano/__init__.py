"""Lattice polytopes from finite posets.

Build the polytope spanned by the Hasse-edge vectors of a bounded
poset, decide terminal/Gorenstein/Q-factorial/smooth both by a
combinatorial walk criterion and by exact integer geometry, and
enumerate posets up to isomorphism and duality.
"""
from .classifier import (
    ClassificationReport,
    Walk,
    classify,
    cycle_levels_compatible,
    enumerate_cycles,
    enumerate_special_paths,
    is_balanced,
    is_very_special_cycle,
    iter_witnesses,
    level_labels,
    path_levels_compatible,
)
from .crosscheck import classify_geometric, find_disagreement, oracle_report
from .enumeration import (
    TableRow,
    build_table,
    enumerate_posets,
    poset_classes,
    quotient_by_duality,
)
from .errors import (
    CycleInInput,
    DegenerateInput,
    NotAMaximalChain,
    NotAnEdge,
    NotComparable,
    NotConsistent,
    OriginOnHyperplane,
    ParseError,
    PosetfanoError,
    WalkNotEligible,
)
from .geometry import (
    Facet,
    Hyperplane,
    det_fraction_free,
    enumerate_facets,
    is_fano,
    is_gorenstein,
    is_simplicial,
    is_smooth_geometric,
    is_terminal,
    witness_hyperplane,
)
from .polytope import (
    PolytopeVertexSet,
    build_vertex_set,
    edge_vector,
    maximal_chain_vector_sum,
)
from .poset import (
    HatPoset,
    Poset,
    load_poset,
    poset_from_text,
    poset_to_text,
    save_poset,
)

__version__ = "0.1.0"

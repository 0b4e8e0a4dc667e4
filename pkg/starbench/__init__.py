"""starbench: verification workbench for k-star-free 3-graphs and anti-Ramsey numbers of stars.

Public surface re-exports from core modules and the api module.
"""

__version__ = "0.1.0"

# API functions
from .api import (
    anti_ramsey,
    check_star_free,
    construct,
    exact_turan,
    load_coloring,
    load_three_graph,
    run_audit,
    save_coloring,
    save_three_graph,
)

# Anti-Ramsey search
from .core.ar_search import ArReport, StarCopyIndex, ar_exact, enumerate_star_copies, max_colors_no_rainbow

# Audits
from .core.audits import (
    AuditReport,
    audit_degree_critical_lemma,
    audit_formulas,
    audit_hamiltonian_lemma,
    audit_weight_corpus,
)

# Colorings
from .core.coloring import (
    EdgeColoring,
    GoodPairReport,
    disjoint_good_pairs,
    find_rainbow_star,
    good_pairs,
    lower_bound_coloring,
    rainbow_extension_coloring,
    rainbow_representative_subgraph,
    validate_rainbow_free,
    zc,
)

# Constructions and formulas
from .core.constructions import (
    ConstructionKind,
    ConstructionSpec,
    FormulaValue,
    ar_formula,
    build_gk,
    construct_even,
    construct_odd,
    f_formula,
)

# Errors
from .core.errors import (
    ConsistencyError,
    FormatError,
    InvalidParameterError,
    PreconditionError,
    SizeLimitError,
    StarbenchError,
)

# Hypergraph operations
from .core.hypergraph import (
    complete_three_graph,
    induced,
    link,
    pair_frequency,
    remove_edges,
    remove_vertices,
)

# Matchings
from .core.matching import (
    MatchingResult,
    hamiltonian_cycle,
    is_factor_critical,
    max_matching,
    tutte_witness,
)

# Search machinery
from .core.search import SearchOutcome, SearchStatus

# Serialization
from .core.serialization import (
    dump_coloring,
    dump_graph,
    dump_three_graph,
    parse_coloring,
    parse_graph,
    parse_three_graph,
)

# Stars
from .core.stars import StarWitness, find_k_star, is_star_free, max_star

# Exact Turan numbers
from .core.turan import exact_f

# Core types
from .core.types import Graph, ThreeGraph, triple_rank, triple_unrank

# Weights
from .core.weights import (
    PairClass,
    WitnessKind,
    audit_weight_lemma,
    classify_pairs,
    triple_weights,
    vertex_weights,
)

__all__ = [
    "__version__",
    # Types
    "ThreeGraph",
    "Graph",
    "triple_rank",
    "triple_unrank",
    # Errors
    "StarbenchError",
    "InvalidParameterError",
    "SizeLimitError",
    "PreconditionError",
    "ConsistencyError",
    "FormatError",
    # Hypergraph
    "complete_three_graph",
    "link",
    "pair_frequency",
    "induced",
    "remove_vertices",
    "remove_edges",
    # Serialization
    "dump_three_graph",
    "parse_three_graph",
    "dump_graph",
    "parse_graph",
    "dump_coloring",
    "parse_coloring",
    # Matchings
    "MatchingResult",
    "max_matching",
    "tutte_witness",
    "is_factor_critical",
    "hamiltonian_cycle",
    # Stars
    "StarWitness",
    "max_star",
    "find_k_star",
    "is_star_free",
    # Search
    "SearchOutcome",
    "SearchStatus",
    "exact_f",
    # Constructions
    "FormulaValue",
    "f_formula",
    "ar_formula",
    "ConstructionKind",
    "ConstructionSpec",
    "construct_odd",
    "construct_even",
    "build_gk",
    # Weights
    "PairClass",
    "WitnessKind",
    "classify_pairs",
    "triple_weights",
    "vertex_weights",
    "audit_weight_lemma",
    # Colorings
    "EdgeColoring",
    "GoodPairReport",
    "zc",
    "good_pairs",
    "disjoint_good_pairs",
    "find_rainbow_star",
    "validate_rainbow_free",
    "rainbow_extension_coloring",
    "lower_bound_coloring",
    "rainbow_representative_subgraph",
    # Anti-Ramsey
    "StarCopyIndex",
    "enumerate_star_copies",
    "max_colors_no_rainbow",
    "ar_exact",
    "ArReport",
    # Audits
    "AuditReport",
    "audit_degree_critical_lemma",
    "audit_hamiltonian_lemma",
    "audit_formulas",
    "audit_weight_corpus",
    # API
    "load_three_graph",
    "save_three_graph",
    "load_coloring",
    "save_coloring",
    "construct",
    "check_star_free",
    "exact_turan",
    "anti_ramsey",
    "run_audit",
]

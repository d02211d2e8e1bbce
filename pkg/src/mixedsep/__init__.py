"""mixedsep: exact conditional-independence engine for graphs with four
edge kinds (lines, arrows, arcs, dotted lines) under a single walk-based
separation criterion."""

from .classify import (
    ChainDecomposition,
    GraphClass,
    HIERARCHY,
    chain_components,
    classify,
    dg_to_ug,
    implied_classes,
)
from .errors import (
    ClassViolation,
    InvalidQuery,
    MalformedWalk,
    MixedSepError,
    NodeNotFound,
    NotAChainGraph,
    ParseError,
    SizeLimit,
    UnsatisfiableSpec,
)
from .generate import GenSpec, enumerate_graphs, node_labels, random_graph
from .graph import (
    Edge,
    EdgeKind,
    Graph,
    Mark,
    NodeRelations,
    Section,
    Walk,
    arc,
    arrow,
    dotted,
    is_collider_pair,
    line,
    sections_of,
)
from .independence import (
    ALL_AXIOMS,
    Axiom,
    AxiomViolation,
    IndependenceModel,
    check_axiom,
    check_axioms,
    closure,
    global_model,
    markov_equivalent,
    pairwise_model,
    satisfies_global,
)
from .maximality import (
    InducingWitness,
    find_primitive_inducing_walk,
    inducing_endpoint_flavours,
    is_maximal,
    maximalize,
    non_maximal_pair,
    separator_for,
)
from .separation import (
    brute_force_connected,
    connecting_walk,
    connecting_walk_exists,
    dag_d_separated,
    is_connecting_walk,
    m_separated,
    separated,
    ug_separated,
    z_separated,
)
from .textio import parse_graph, parse_model, serialize_graph, serialize_model

__version__ = "0.1.0"

__all__ = [
    "ALL_AXIOMS",
    "Axiom",
    "AxiomViolation",
    "ChainDecomposition",
    "ClassViolation",
    "Edge",
    "EdgeKind",
    "GenSpec",
    "Graph",
    "GraphClass",
    "HIERARCHY",
    "IndependenceModel",
    "InducingWitness",
    "InvalidQuery",
    "MalformedWalk",
    "Mark",
    "MixedSepError",
    "NodeNotFound",
    "NodeRelations",
    "NotAChainGraph",
    "ParseError",
    "Section",
    "SizeLimit",
    "UnsatisfiableSpec",
    "Walk",
    "arc",
    "arrow",
    "brute_force_connected",
    "chain_components",
    "check_axiom",
    "check_axioms",
    "classify",
    "closure",
    "connecting_walk",
    "connecting_walk_exists",
    "dag_d_separated",
    "dg_to_ug",
    "dotted",
    "enumerate_graphs",
    "find_primitive_inducing_walk",
    "global_model",
    "implied_classes",
    "inducing_endpoint_flavours",
    "is_collider_pair",
    "is_connecting_walk",
    "is_maximal",
    "line",
    "m_separated",
    "markov_equivalent",
    "maximalize",
    "node_labels",
    "non_maximal_pair",
    "pairwise_model",
    "parse_graph",
    "parse_model",
    "random_graph",
    "satisfies_global",
    "sections_of",
    "separated",
    "separator_for",
    "serialize_graph",
    "serialize_model",
    "ug_separated",
    "z_separated",
]

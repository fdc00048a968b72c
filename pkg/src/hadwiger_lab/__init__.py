"""Edge contraction, distance matrices and complete-minor search on small graphs."""

from .chromatic import (
    PartiteRepresentation,
    SeparatorPair,
    chromatic_number,
    find_separators,
    is_contraction_sensitive,
    is_essentially_singleton,
    is_k_critical,
    minimal_partite_representation,
)
from .contraction import (
    ContractionStep,
    replacement_count,
    update_exact,
    update_paper_literal,
    uses_edge_condition,
)
from .graph import Graph, Graph6Error, GraphError, NotAdjacentError, contract_edge, emit_graph6, parse_graph6
from .minors import ContractionTrace, MinorCertificate, greedy_contract, hadwiger_number, verify_certificate
from .transparency import UNREACHABLE, TransparencyMatrix, compute

__version__ = "0.1.0"

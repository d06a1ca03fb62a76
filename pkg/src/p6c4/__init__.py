"""Recognition, structure certificates and 5/4-bounded coloring for (P6, C4)-free graphs."""

from .blowup import BlowupMap, blowup_graph, match_blowup, validate_blowup
from .coloring import BoundReport, ColorResult, bound54, bounds, color, reed_bound
from .detect import find_induced_cycle, find_induced_path, find_special, is_p6c4_free
from .generators import GenSpec, generate
from .graph import Coloring, Graph, GraphError, Violation, build_graph
from .io import format_edge_list, from_graph6, parse_edge_list, read_graphs, to_graph6, write_graph
from .oracle import exact_chromatic, exact_clique, verify_coloring
from .structure import NotInClass, StructureCertificate, StructureFailure, classify, validate_certificate

__all__ = [
    "BlowupMap", "BoundReport", "ColorResult", "Coloring", "GenSpec", "Graph", "GraphError", "NotInClass",
    "StructureCertificate", "StructureFailure", "Violation", "blowup_graph", "bound54", "bounds", "build_graph",
    "classify", "color", "exact_chromatic", "exact_clique", "find_induced_cycle", "find_induced_path",
    "find_special", "format_edge_list", "from_graph6", "generate", "is_p6c4_free", "match_blowup",
    "parse_edge_list", "read_graphs", "reed_bound", "to_graph6", "validate_blowup", "validate_certificate",
    "verify_coloring", "write_graph",
]

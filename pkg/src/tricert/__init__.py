"""Certifying 3-connectivity toolkit.

Test graphs for 3-connectedness with a construction-sequence certificate
or a small-separator witness, verify certificates independently in linear
time, and convert certificates between representations.
"""

from .graph import (
    ContractError,
    GraphUsageError,
    MultiGraph,
    ParseError,
    SimplifyReport,
    connected_components,
    contract_edge,
    parse_graph,
    serialize_graph,
    simplify,
    smooth,
)
from .k4finder import Witness, find_k4_subdivision
from .oracle import gen_3_connected, is_3_connected_brute, mutate_certificate
from .sequencer import CertifyResult, InputError, PathCertificate, certify, find_next_path
from .sparsify import ForestDecomposition, sparsify3
from .subdivision import (
    ExpandStep,
    Link,
    PathStep,
    PathRejected,
    StructureError,
    Subdivision,
    apply_expand,
    apply_path,
    build_subdivision,
    path_violation,
    recompute_links,
)
from .transforms import (
    ContractionSequence,
    EdgeRep,
    OpA,
    OpB,
    OpC,
    OpD,
    ReplayError,
    TransformError,
    edge_to_path,
    from_basic,
    path_to_edge,
    replay_edge_rep,
    to_basic,
    to_contractions,
)
from .verifier import VerifyResult, verify_certificate, verify_witness

__version__ = "0.1.0"

__all__ = [
    "CertifyResult",
    "ContractError",
    "ContractionSequence",
    "EdgeRep",
    "ExpandStep",
    "ForestDecomposition",
    "GraphUsageError",
    "InputError",
    "Link",
    "MultiGraph",
    "OpA",
    "OpB",
    "OpC",
    "OpD",
    "ParseError",
    "PathCertificate",
    "PathRejected",
    "PathStep",
    "ReplayError",
    "SimplifyReport",
    "StructureError",
    "Subdivision",
    "TransformError",
    "VerifyResult",
    "Witness",
    "apply_expand",
    "apply_path",
    "build_subdivision",
    "certify",
    "connected_components",
    "contract_edge",
    "edge_to_path",
    "find_k4_subdivision",
    "find_next_path",
    "from_basic",
    "gen_3_connected",
    "is_3_connected_brute",
    "mutate_certificate",
    "parse_graph",
    "path_to_edge",
    "path_violation",
    "recompute_links",
    "replay_edge_rep",
    "serialize_graph",
    "simplify",
    "smooth",
    "sparsify3",
    "to_basic",
    "to_contractions",
    "verify_certificate",
    "verify_witness",
]

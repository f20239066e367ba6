"""Hypergraph Lagrangians: solvers, compression, named families,
freeness checks, symmetrization, and desk-scale verification suites."""

from .compression import (
    CompressionStep,
    CompressionTrace,
    compress_pair,
    dense_and_compress,
    is_left_compressed,
    potential,
)
from .core import (
    Hypergraph,
    blowup,
    covers_pairs,
    degree,
    equivalent,
    induced,
    link,
    link_diff,
    min_degree,
    same_links,
    uncovered_pairs,
)
from .errors import HgParseError, HlagError, NotFreeError, UnsupportedSizeError
from .families import (
    FamilySpec,
    case_family,
    complete,
    complete_lambda,
    extension,
    k53minus2,
    matching,
    split,
    split_part_size,
    star,
    star_lambda,
)
from .freeness import (
    FreenessReport,
    SearchResult,
    enumerate_left_compressed_free,
    extremal_lambda_search,
    hom_search,
    is_core_free,
    is_hom_free,
    is_matching_free,
    matching_number,
)
from .hgio import (
    emit_hg,
    emit_json,
    load_graph,
    parse_graph,
    parse_hg,
    parse_json,
)
from .partition import (
    MinSigmaResult,
    PartitionScore,
    classify_edges,
    min_sigma_partition,
    sigma_score,
)
from .solver import (
    KktReport,
    LagrangianResult,
    SolverConfig,
    densify,
    evaluate,
    gradient,
    kkt_report,
    kkt_residual,
    maximize,
    uncovered_reduce,
)
from .symmetrize import (
    AuditCheck,
    AuditReport,
    PointedHypergraph,
    SymStep,
    SymTrace,
    audit,
    clean,
    initial_pointed,
    merge,
    symmetrize,
)
from .verify import (
    TheoremRow,
    TheoremSummary,
    VerificationRow,
    golden_max,
    verify_cases,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CompressionStep",
    "CompressionTrace",
    "compress_pair",
    "dense_and_compress",
    "is_left_compressed",
    "potential",
    "Hypergraph",
    "blowup",
    "covers_pairs",
    "degree",
    "equivalent",
    "induced",
    "link",
    "link_diff",
    "min_degree",
    "same_links",
    "uncovered_pairs",
    "HgParseError",
    "HlagError",
    "NotFreeError",
    "UnsupportedSizeError",
    "FamilySpec",
    "case_family",
    "complete",
    "complete_lambda",
    "extension",
    "k53minus2",
    "matching",
    "split",
    "split_part_size",
    "star",
    "star_lambda",
    "FreenessReport",
    "SearchResult",
    "enumerate_left_compressed_free",
    "extremal_lambda_search",
    "hom_search",
    "is_core_free",
    "is_hom_free",
    "is_matching_free",
    "matching_number",
    "emit_hg",
    "emit_json",
    "load_graph",
    "parse_graph",
    "parse_hg",
    "parse_json",
    "MinSigmaResult",
    "PartitionScore",
    "classify_edges",
    "min_sigma_partition",
    "sigma_score",
    "KktReport",
    "LagrangianResult",
    "SolverConfig",
    "densify",
    "evaluate",
    "gradient",
    "kkt_report",
    "kkt_residual",
    "maximize",
    "uncovered_reduce",
    "AuditCheck",
    "AuditReport",
    "PointedHypergraph",
    "SymStep",
    "SymTrace",
    "audit",
    "clean",
    "initial_pointed",
    "merge",
    "symmetrize",
    "TheoremRow",
    "TheoremSummary",
    "VerificationRow",
    "golden_max",
    "verify_cases",
    "verify_theorem",
]

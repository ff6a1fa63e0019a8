"""Kirkman triple/quadruple systems with maximum min-sum, 1-factorizations of
complete graphs, and popularity-aware data placement."""

from .core import (
    ResolvableDesign,
    StatsReport,
    block_sum,
    canonical_block,
    design_stats,
    make_design,
    min_sum,
    min_sum_upper_bound,
)
from .factorization import (
    OneFactorization,
    double_factorization,
    factorize_2mod4,
    factorize_even,
    verify_factorization,
)
from .kts import base_kts3, build_kts, triple_kts
from .kqs import base_kqs4, build_kqs, double_kqs
from .oracle import oracle_search_kts, oracle_subset_count
from .placement import ChunkCatalog, PlacementPlan, export_plan, plan_from_design, rank_chunks
from .verify import (
    VerificationReport,
    verify_admissible,
    verify_coverage,
    verify_design,
    verify_max_min_sum,
    verify_resolution,
)

__all__ = [
    "ResolvableDesign",
    "StatsReport",
    "OneFactorization",
    "ChunkCatalog",
    "PlacementPlan",
    "VerificationReport",
    "block_sum",
    "canonical_block",
    "design_stats",
    "make_design",
    "min_sum",
    "min_sum_upper_bound",
    "base_kts3",
    "build_kts",
    "triple_kts",
    "base_kqs4",
    "build_kqs",
    "double_kqs",
    "factorize_2mod4",
    "factorize_even",
    "double_factorization",
    "verify_factorization",
    "oracle_search_kts",
    "oracle_subset_count",
    "plan_from_design",
    "rank_chunks",
    "export_plan",
    "verify_admissible",
    "verify_coverage",
    "verify_design",
    "verify_max_min_sum",
    "verify_resolution",
]

__version__ = "0.1.0"

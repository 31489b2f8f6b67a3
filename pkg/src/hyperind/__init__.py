"""Independent sets in locally sparse uniform hypergraphs under a shadow-weighted measure."""

__version__ = "0.1.0"

from .algorithms import BoundsTable, bounds_table, dlr_reduce, randomized_greedy
from .errors import HyperindError
from .exact import (
    DistributionTable,
    claim1_sweep,
    claim3_sweep,
    conditional_quantities,
    enumerate_independent_sets,
    exact_distribution,
    expectation_report,
    independence_number,
    verify_claim3,
)
from .generators import GenSpec, generate
from .hgr import parse_hgr, read_hgr, serialize_hgr, write_hgr
from .hypergraph import (
    Hypergraph,
    ShadowProfile,
    SparsityReport,
    VertexSubset,
    build,
    classify_sparsity,
    induced,
    is_independent,
    neighborhood_k,
    shadow_profile,
)
from .measure import MeasureEvaluation, MeasureParams, claim1_bound, derive_params, log_weight, uniform_limit, x_value
from .sampler import ChainConfig, SampleReport, glauber_step, run_chain, tv_distance

__all__ = [
    "BoundsTable",
    "ChainConfig",
    "DistributionTable",
    "GenSpec",
    "Hypergraph",
    "HyperindError",
    "MeasureEvaluation",
    "MeasureParams",
    "SampleReport",
    "ShadowProfile",
    "SparsityReport",
    "VertexSubset",
    "bounds_table",
    "build",
    "claim1_bound",
    "claim1_sweep",
    "claim3_sweep",
    "classify_sparsity",
    "conditional_quantities",
    "derive_params",
    "dlr_reduce",
    "enumerate_independent_sets",
    "exact_distribution",
    "expectation_report",
    "generate",
    "glauber_step",
    "independence_number",
    "induced",
    "is_independent",
    "log_weight",
    "neighborhood_k",
    "parse_hgr",
    "randomized_greedy",
    "read_hgr",
    "run_chain",
    "serialize_hgr",
    "shadow_profile",
    "tv_distance",
    "uniform_limit",
    "verify_claim3",
    "write_hgr",
    "x_value",
]

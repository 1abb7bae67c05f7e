"""Inhomogeneous random K-out graphs from heterogeneous pairwise key
predistribution: generation, connectivity analysis, exact finite-n
analytics, enumeration oracles, and a reproducible Monte-Carlo harness."""

from ._backend import backend_name
from .analytics import (
    PairPickProbs,
    ScalingPoint,
    degree_pmf,
    edge_probability,
    expected_count_Z,
    gamma_from_scaling,
    joint_degree_prob_type1,
    mean_degree,
    mean_selection,
    pair_pick_probs,
    psi,
    quantity_A,
    quantity_B,
    second_moment_ratio,
    threshold_k2,
)
from .connectivity import (
    ConnectivityReport,
    brute_force_k_connected,
    connectivity_report,
    degree_sequence,
    is_connected,
    is_k_vertex_connected,
    min_degree,
)
from .experiment import (
    ExperimentConfig,
    SweepRow,
    run_point,
    run_sweep,
    write_csv,
)
from .model import (
    Graph,
    KeyRingTable,
    ModelParams,
    NodeType,
    ParamError,
    SelectionTable,
    assign_keyrings,
    build_graph,
    draw_selection_table,
    generate,
    read_edgelist,
    shared_key_graph,
    validate_params,
    write_dot,
    write_edgelist,
)
from .oracle import (
    EnumerationBudget,
    enumerate_event_prob,
    enumerate_joint_degree_prob,
    enumerate_kconn_prob,
    enumerate_min_degree_prob,
)
from .rng import SplitMix64, derive_seed

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "PairPickProbs",
    "ScalingPoint",
    "degree_pmf",
    "edge_probability",
    "expected_count_Z",
    "gamma_from_scaling",
    "joint_degree_prob_type1",
    "mean_degree",
    "mean_selection",
    "pair_pick_probs",
    "psi",
    "quantity_A",
    "quantity_B",
    "second_moment_ratio",
    "threshold_k2",
    "ConnectivityReport",
    "brute_force_k_connected",
    "connectivity_report",
    "degree_sequence",
    "is_connected",
    "is_k_vertex_connected",
    "min_degree",
    "ExperimentConfig",
    "SweepRow",
    "run_point",
    "run_sweep",
    "write_csv",
    "Graph",
    "KeyRingTable",
    "ModelParams",
    "NodeType",
    "ParamError",
    "SelectionTable",
    "assign_keyrings",
    "build_graph",
    "draw_selection_table",
    "generate",
    "read_edgelist",
    "shared_key_graph",
    "validate_params",
    "write_dot",
    "write_edgelist",
    "EnumerationBudget",
    "enumerate_event_prob",
    "enumerate_joint_degree_prob",
    "enumerate_kconn_prob",
    "enumerate_min_degree_prob",
    "SplitMix64",
    "derive_seed",
    "__version__",
]

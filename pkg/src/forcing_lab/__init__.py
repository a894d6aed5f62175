"""Exact forcing, domination and power-domination numbers of small graphs."""

from .graph import (
    INF,
    BlockDecomposition,
    Graph,
    GraphError,
    GraphFormatError,
    GraphMetrics,
    UnsupportedSizeError,
    block_decomposition,
    compute_metrics,
    emit_edge_list,
    emit_graph6,
    enumerate_connected_labeled_graphs,
    parse_edge_list,
    parse_graph6,
)
from .forcing import (
    ForceEvent,
    ForcingTrace,
    PowerDominationTrace,
    closed_neighborhood,
    forcing_closure,
    is_connected_forcing_set,
    is_dominating_set,
    is_forcing_set,
    is_power_dominating_set,
    power_domination_closure,
)
from .solvers import (
    AUDIT_CONFIG,
    KINDS,
    BudgetExhausted,
    SolverConfig,
    SolverResult,
    connected_forcing_number,
    domination_number,
    forcing_number,
    oracle_minimum_set,
    power_domination_number,
    solve,
)

__version__ = "0.1.0"

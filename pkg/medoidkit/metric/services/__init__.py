"""度量空间服务."""

from medoidkit.metric.services.energy import (
    all_energies,
    brute_force_medoid,
    energy,
    exact_column_sums,
    exact_sum,
    row_energy,
)
from medoidkit.metric.services.loader import load_graph, load_vectors
from medoidkit.metric.services.oracle import (
    DistanceOracle,
    EuclideanOracle,
    GraphOracle,
    euclidean_row,
    graph_row,
    make_oracle,
    validate_connectivity,
)

__all__ = [
    "DistanceOracle",
    "EuclideanOracle",
    "GraphOracle",
    "euclidean_row",
    "graph_row",
    "make_oracle",
    "validate_connectivity",
    "energy",
    "row_energy",
    "exact_sum",
    "exact_column_sums",
    "all_energies",
    "brute_force_medoid",
    "load_vectors",
    "load_graph",
]

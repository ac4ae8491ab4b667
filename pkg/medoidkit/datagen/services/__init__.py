"""数据生成服务."""

from medoidkit.datagen.services.generators import (
    gen_sensor_graph,
    generate,
    largest_component,
    sample_ball_skewed,
    sample_ball_uniform,
    sample_uniform_cube,
)
from medoidkit.datagen.services.writer import (
    read_sidecar,
    write_dataset,
    write_edge_list,
    write_sidecar,
    write_vectors,
)

__all__ = [
    "sample_uniform_cube",
    "sample_ball_uniform",
    "sample_ball_skewed",
    "gen_sensor_graph",
    "generate",
    "largest_component",
    "write_vectors",
    "write_edge_list",
    "write_sidecar",
    "read_sidecar",
    "write_dataset",
]

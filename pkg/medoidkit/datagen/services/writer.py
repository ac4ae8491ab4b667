"""生成数据的落盘：向量文件、边列表与元数据文件."""

import logging
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Tuple, Union

import numpy as np

from medoidkit.datagen.models.spec import GenSpec
from medoidkit.metric.models.dataset import VectorDataset, WeightedGraph

logger = logging.getLogger(__name__)

# 17 位有效数字保证读回后逐位一致
FLOAT_FORMAT = "%.17g"


def write_vectors(
    dataset: VectorDataset, path: Union[str, Path], delimiter: Literal["comma", "whitespace"] = "whitespace"
) -> Path:
    """写出向量文件，每行一个点."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savetxt(path, dataset.values, fmt=FLOAT_FORMAT, delimiter="," if delimiter == "comma" else " ")
    return path


def write_edge_list(graph: WeightedGraph, path: Union[str, Path]) -> Path:
    """写出 ``u v w`` 边列表，首行为注释."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        handle.write(f"# n_nodes={graph.n_nodes} directed={str(graph.directed).lower()}\n")
        for u, v, w in graph.edges:
            handle.write(f"{u} {v} {FLOAT_FORMAT % w}\n")
    return path


def write_sidecar(spec: GenSpec, path: Union[str, Path], extra: Optional[Dict[str, Any]] = None) -> Path:
    """写出 ``key: value`` 形式的元数据文件."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fields = dict(spec.to_dict())
    fields.update(extra or {})
    with path.open("w", encoding="utf-8") as handle:
        for key, value in fields.items():
            handle.write(f"{key}: {value}\n")
    return path


def read_sidecar(path: Union[str, Path]) -> Dict[str, str]:
    """读取元数据文件，值保持为字符串."""
    result: Dict[str, str] = {}
    with Path(path).open("r", encoding="utf-8") as handle:
        for line in handle:
            if ":" in line:
                key, value = line.split(":", 1)
                result[key.strip()] = value.strip()
    return result


def write_dataset(
    data: Union[VectorDataset, WeightedGraph], spec: GenSpec, out_dir: Union[str, Path]
) -> Tuple[Path, Path]:
    """按规格标识写出数据文件与元数据文件.

    Returns:
        (数据文件路径, 元数据文件路径)
    """
    out_dir = Path(out_dir)
    stem = spec.label()
    if isinstance(data, WeightedGraph):
        data_path = write_edge_list(data, out_dir / f"{stem}.edges")
        extra = {"n_edges": data.n_edges, **{k: v for k, v in data.metadata.items() if k != "spec"}}
    else:
        data_path = write_vectors(data, out_dir / f"{stem}.txt")
        extra = {}
    sidecar_path = write_sidecar(spec, out_dir / f"{stem}.meta", extra)
    logger.info(f"数据集已写出: {data_path}, 元数据: {sidecar_path}")
    return data_path, sidecar_path

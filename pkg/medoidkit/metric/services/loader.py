"""数据集加载服务.

支持两种纯文本格式：
    - 向量文件：每行一个点，逗号或空白分隔，``#`` 开头的行为注释
    - 边列表：每行 ``u v`` 或 ``u v w``，缺省权重为 1，``#`` 开头的行为注释
"""

import logging
import math
from pathlib import Path
from typing import Iterator, List, Literal, Tuple, Union

import numpy as np

from medoidkit.infrastructure.exceptions import DataParseError
from medoidkit.metric.models.dataset import Edge, VectorDataset, WeightedGraph

logger = logging.getLogger(__name__)

Delimiter = Literal["comma", "whitespace"]
DELIMITERS = ("comma", "whitespace")


def _content_lines(path: Path) -> Iterator[Tuple[int, str]]:
    """逐行产出非空、非注释行及其行号（从 1 开始）."""
    with path.open("r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield line_number, line


def load_vectors(path: Union[str, Path], delimiter: Delimiter = "whitespace") -> VectorDataset:
    """加载向量文件.

    Args:
        path: 文件路径
        delimiter: 分隔符，``comma`` 或 ``whitespace``

    Returns:
        VectorDataset: 每行一个点，保持文件顺序

    Raises:
        DataParseError: 文件为空、行长度不一致或字段非数值时，错误信息包含行号
    """
    path = Path(path)
    if not path.exists():
        raise DataParseError("文件不存在", path=path)

    rows: List[List[float]] = []
    width = None
    for line_number, line in _content_lines(path):
        fields = [f.strip() for f in line.split(",")] if delimiter == "comma" else line.split()
        try:
            row = [float(f) for f in fields]
        except ValueError as e:
            raise DataParseError(f"非数值字段: {e}", path=path, line_number=line_number) from e
        if not all(math.isfinite(x) for x in row):
            raise DataParseError("坐标必须是有限值", path=path, line_number=line_number)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DataParseError(f"字段数 {len(row)} 与首行字段数 {width} 不一致", path=path, line_number=line_number)
        rows.append(row)

    if not rows:
        raise DataParseError("文件中没有数据行", path=path, line_number=1)

    dataset = VectorDataset(values=np.asarray(rows, dtype=np.float64), source=str(path))
    logger.info(f"向量数据加载完成: {path}, n_points={dataset.n_points}, dim={dataset.dim}")
    return dataset


def load_graph(path: Union[str, Path], directed: bool = False) -> WeightedGraph:
    """加载边列表文件.

    Args:
        path: 文件路径
        directed: 是否按有向图解释

    Returns:
        WeightedGraph: 节点数为出现过的最大编号加一

    Raises:
        DataParseError: 行格式错误、编号非法或权重为负时
    """
    path = Path(path)
    if not path.exists():
        raise DataParseError("文件不存在", path=path)

    edges: List[Edge] = []
    max_id = -1
    for line_number, line in _content_lines(path):
        fields = line.split()
        if len(fields) not in (2, 3):
            raise DataParseError(f"应为 'u v' 或 'u v w'，实际 {len(fields)} 个字段", path=path, line_number=line_number)
        try:
            u, v = int(fields[0]), int(fields[1])
            w = float(fields[2]) if len(fields) == 3 else 1.0
        except ValueError as e:
            raise DataParseError(f"无法解析边: {e}", path=path, line_number=line_number) from e
        if u < 0 or v < 0:
            raise DataParseError("节点编号不能为负", path=path, line_number=line_number)
        if not math.isfinite(w) or w < 0:
            raise DataParseError(f"权重必须是非负有限值: {w}", path=path, line_number=line_number)
        edges.append((u, v, w))
        max_id = max(max_id, u, v)

    if not edges:
        raise DataParseError("文件中没有边", path=path, line_number=1)

    graph = WeightedGraph(n_nodes=max_id + 1, edges=edges, directed=directed)
    logger.info(f"边列表加载完成: {path}, n_nodes={graph.n_nodes}, n_edges={graph.n_edges}, directed={directed}")
    return graph

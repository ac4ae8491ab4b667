"""RunRecord 的 CSV 读写与汇总.

CSV 约定：UTF-8，首行为表头，列顺序与 ``RunRecord`` 字段顺序一致，小数点为 ``.``，
每行一条记录。读取时忽略未知列，缺失列取缺省值。
"""

import logging
import math
import threading
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import numpy as np
import pandas as pd

from medoidkit.bench.models.records import RunRecord
from medoidkit.infrastructure.exceptions import DataParseError

logger = logging.getLogger(__name__)

_FIELD_TYPES = {f.name: f.type for f in fields(RunRecord)}


def _coerce(name: str, raw: str) -> Any:
    kind = _FIELD_TYPES[name]
    if kind is str:
        return raw
    if raw == "":
        if kind is int or kind is float:
            raise ValueError(f"字段 {name} 为空")
        return None
    if kind is int:
        return int(raw)
    return float(raw)


def records_to_frame(records: Iterable[RunRecord]) -> pd.DataFrame:
    """记录列表转为按固定列顺序排列的 DataFrame."""
    return pd.DataFrame([r.to_dict() for r in records], columns=RunRecord.columns())


def write_records(records: Iterable[RunRecord], path: Union[str, Path], append: bool = True) -> Path:
    """写出记录；追加模式下文件已存在时不再写表头."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = records_to_frame(records)
    exists = path.exists() and path.stat().st_size > 0
    mode = "a" if append and exists else "w"
    frame.to_csv(path, mode=mode, header=mode == "w", index=False, encoding="utf-8")
    return path


def read_records(path: Union[str, Path]) -> List[RunRecord]:
    """读取记录文件.

    Raises:
        DataParseError: 字段无法转换为对应类型时，错误信息包含行号（表头为第 1 行）
    """
    path = Path(path)
    if not path.exists():
        raise DataParseError("文件不存在", path=path)
    frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    known = [c for c in frame.columns if c in _FIELD_TYPES]
    unknown = [c for c in frame.columns if c not in _FIELD_TYPES]
    if unknown:
        logger.debug(f"忽略未知列: {unknown}")

    records: List[RunRecord] = []
    for offset, row in enumerate(frame[known].to_dict(orient="records")):
        try:
            values = {name: _coerce(name, raw) for name, raw in row.items()}
            records.append(RunRecord(**values))
        except (TypeError, ValueError) as e:
            raise DataParseError(f"无法解析记录: {e}", path=path, line_number=offset + 2) from e
    return records


class CsvRecordWriter:
    """串行化多个工作线程的追加写入."""

    def __init__(self, path: Optional[Union[str, Path]]) -> None:
        self.path = Path(path) if path is not None else None
        self._lock = threading.Lock()
        self.n_written = 0

    def append(self, record: RunRecord) -> None:
        if self.path is None:
            return
        with self._lock:
            write_records([record], self.path, append=True)
            self.n_written += 1


def fit_loglog_slope(ns: Iterable[float], values: Iterable[float]) -> float:
    """最小二乘拟合 log(value) 对 log(n) 的斜率，需要至少两个不同的 n."""
    ns = np.asarray(list(ns), dtype=np.float64)
    values = np.asarray(list(values), dtype=np.float64)
    mask = (ns > 0) & (values > 0)
    if np.unique(ns[mask]).size < 2:
        return math.nan
    slope, _ = np.polyfit(np.log(ns[mask]), np.log(values[mask]), 1)
    return float(slope)


def summarize(records: Iterable[RunRecord]) -> pd.DataFrame:
    """按 (algorithm, n) 汇总成功记录的均值，并附上每个算法的 log-log 斜率."""
    frame = records_to_frame([r for r in records if r.ok])
    if frame.empty:
        return pd.DataFrame(columns=["algorithm", "n", "runs", "n_computed", "distance_evals", "objective", "slope"])

    summary = (
        frame.groupby(["algorithm", "n"], sort=True)
        .agg(
            runs=("seed", "count"),
            n_computed=("n_computed", "mean"),
            distance_evals=("distance_evals", "mean"),
            objective=("objective", "mean"),
        )
        .reset_index()
    )
    slopes: Dict[str, float] = {
        algorithm: fit_loglog_slope(group["n"], group["n_computed"])
        for algorithm, group in summary.groupby("algorithm")
    }
    summary["slope"] = summary["algorithm"].map(slopes)
    return summary


def format_summary(summary: pd.DataFrame) -> str:
    """对齐的文本汇总."""
    if summary.empty:
        return "(无成功记录)"
    return summary.to_string(index=False, float_format=lambda x: f"{x:.4g}")

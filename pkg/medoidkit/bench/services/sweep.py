"""扫描实验：在 (算法, N, 种子) 网格上运行并汇总.

每个单元格独立生成数据、构造自己的预言机和随机数生成器；单元格可以并行执行，
CSV 追加由同一个写入器串行化。单元格失败时记录 status=error 并继续。
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from tqdm import tqdm

from medoidkit.bench.models.records import (
    KMEDOIDS_ALGORITHMS,
    KMedoidsRunConfig,
    MedoidRunConfig,
    RunRecord,
    SweepSpec,
)
from medoidkit.bench.services.report import CsvRecordWriter, summarize
from medoidkit.bench.services.runner import Dataset, run_kmedoids, run_medoid
from medoidkit.datagen.models.spec import GenSpec
from medoidkit.datagen.services.generators import generate
from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.infrastructure.utils.metrics import MetricsCollector
from medoidkit.metric.models.dataset import VectorDataset
from medoidkit.metric.services.loader import load_graph, load_vectors

logger = logging.getLogger(__name__)


class SweepRunner:
    """扫描实验执行器.

    Args:
        spec: 扫描规格
        out: CSV 输出路径（可选）
        collector: 指标收集器（可选）
        show_progress: 是否显示进度条
    """

    def __init__(
        self,
        spec: SweepSpec,
        out: Optional[Union[str, Path]] = None,
        collector: Optional[MetricsCollector] = None,
        show_progress: bool = True,
    ) -> None:
        self.spec = spec
        self.writer = CsvRecordWriter(out)
        self.collector = collector or MetricsCollector()
        self.show_progress = show_progress
        self._source: Optional[Dataset] = None
        if spec.input_path is not None:
            self._source = (
                load_graph(spec.input_path, directed=spec.directed)
                if spec.input_kind == "graph"
                else load_vectors(spec.input_path, delimiter=spec.delimiter)
            )

    def dataset(self, n: int, seed: int) -> Tuple[Dataset, str]:
        """单元格的数据集及其标识."""
        if self._source is None:
            gen_spec = GenSpec(
                kind=self.spec.generator,
                n=n,
                dim=self.spec.dim,
                p_keep=self.spec.p_keep,
                radius_const=self.spec.radius_const,
                directed=self.spec.directed,
                keep_largest=self.spec.keep_largest,
                seed=seed,
            )
            return generate(gen_spec), gen_spec.label()

        if isinstance(self._source, VectorDataset):
            if n > self._source.n_points:
                raise InvalidParameterError(f"N={n} 超过输入文件的点数 {self._source.n_points}")
            rows = np.sort(np.random.default_rng(seed).choice(self._source.n_points, size=n, replace=False))
            return VectorDataset(values=self._source.values[rows], source=self._source.source), (
                f"{self.spec.input_path}#n{n}-s{seed}"
            )

        if n != self._source.n_nodes:
            raise InvalidParameterError(f"图输入只能以其节点数 {self._source.n_nodes} 运行，N={n}")
        return self._source, str(self.spec.input_path)

    def run_cell(self, algorithm: str, n: int, seed: int) -> RunRecord:
        """运行一个单元格，异常转换为 status=error 的记录."""
        params = self.spec.params
        try:
            data, label = self.dataset(n, seed)
            if algorithm in KMEDOIDS_ALGORITHMS:
                config = KMedoidsRunConfig(
                    algorithm=algorithm,
                    K=int(params.get("K", 10)),
                    seed=seed,
                    epsilon=float(params.get("trikmeds_epsilon", 0.0)) if algorithm == "trikmeds" else 0.0,
                    init=str(params.get("init", "uniform")),
                    max_iters=int(params.get("max_iters", 10_000)),
                )
                record = run_kmedoids(data, config, label, collector=self.collector)
            else:
                config = MedoidRunConfig(
                    algorithm=algorithm,
                    seed=seed,
                    epsilon=float(params.get("trimed_epsilon", 0.0)),
                    k=int(params.get("k", 1)),
                    alpha_prime=float(params.get("alpha_prime", 1.0)),
                    anchor_constant=float(params.get("anchor_constant", 1.0)),
                )
                record = run_medoid(data, config, label, collector=self.collector)
        except Exception as e:
            logger.error(f"单元格失败: algorithm={algorithm}, n={n}, seed={seed}: {e}", exc_info=True)
            record = RunRecord(algorithm=algorithm, dataset="", n=n, d=self.spec.dim, seed=seed, status="error", error=str(e))
        self.writer.append(record)
        return record

    def run(self) -> List[RunRecord]:
        """执行全部单元格，返回按 (n, seed, 算法) 排序的记录."""
        cells = self.spec.cells()
        records: List[RunRecord] = []
        progress = tqdm(total=len(cells), desc="扫描实验", disable=not self.show_progress)

        if self.spec.workers == 1:
            for algorithm, n, seed in cells:
                records.append(self.run_cell(algorithm, n, seed))
                progress.update(1)
        else:
            with ThreadPoolExecutor(max_workers=self.spec.workers) as executor:
                futures = {executor.submit(self.run_cell, *cell): cell for cell in cells}
                for future in as_completed(futures):
                    records.append(future.result())
                    progress.update(1)
        progress.close()

        order: Dict[str, int] = {a: i for i, a in enumerate(self.spec.algorithms)}
        records.sort(key=lambda r: (r.n, r.seed, order.get(r.algorithm, len(order))))
        failed = sum(1 for r in records if not r.ok)
        logger.info(f"扫描实验完成: {len(records)} 个单元格, 失败 {failed} 个")
        return records


def sweep(
    spec: SweepSpec,
    out: Optional[Union[str, Path]] = None,
    collector: Optional[MetricsCollector] = None,
    show_progress: bool = True,
) -> Tuple[List[RunRecord], pd.DataFrame]:
    """运行扫描实验并返回 (记录, 汇总表).

    汇总表按 (algorithm, n) 给出平均 n_computed 等，``slope`` 列为 n_computed 对 N 的 log-log 斜率。

    Examples:
        >>> spec = SweepSpec(algorithms=["trimed", "brute"], n_grid=[256, 1024], seeds=2)
        >>> records, summary = sweep(spec, show_progress=False)
    """
    records = SweepRunner(spec, out=out, collector=collector, show_progress=show_progress).run()
    return records, summarize(records)

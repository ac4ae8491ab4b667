"""命令行入口.

子命令：
    - gen: 生成合成数据并写出数据文件与元数据文件
    - medoid: 运行一次 medoid 算法（trimed、brute、rand、toprank、toprank2）
    - kmedoids: 运行一次 K-medoids 算法（kmeds、trikmeds）
    - sweep: 在 (算法, N, 种子) 网格上运行并汇总

退出码：成功为 0；参数或数据错误为 2；其他异常为 1。
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pydantic import ValidationError

from medoidkit import __version__
from medoidkit.bench.models.records import (
    INIT_METHODS,
    KMEDOIDS_ALGORITHMS,
    MEDOID_ALGORITHMS,
    KMedoidsRunConfig,
    MedoidRunConfig,
    RunRecord,
    SweepSpec,
)
from medoidkit.bench.services.report import format_summary, read_records, write_records
from medoidkit.bench.services.runner import Dataset, run_kmedoids, run_medoid
from medoidkit.bench.services.sweep import sweep
from medoidkit.datagen.models.spec import GENERATOR_KINDS, SKEWED_PRESETS, GenSpec
from medoidkit.datagen.services.generators import generate
from medoidkit.datagen.services.writer import write_dataset
from medoidkit.infrastructure.config.settings import Settings, get_settings
from medoidkit.infrastructure.exceptions import InvalidParameterError, MedoidKitError
from medoidkit.infrastructure.utils.logger import setup_logger
from medoidkit.infrastructure.utils.metrics import get_metrics_collector, reset_metrics_collector
from medoidkit.metric.services.loader import DELIMITERS, load_graph, load_vectors


def _add_generator_arguments(parser: argparse.ArgumentParser, settings: Settings, kind_flag: str = "--gen") -> None:
    parser.add_argument(kind_flag, dest="kind", choices=GENERATOR_KINDS, default="uniform_cube", help="生成器类型")
    parser.add_argument("--dim", type=int, default=2, help="向量维数")
    parser.add_argument("--p-keep", type=float, default=settings.skewed_p_keep, help="偏斜球内层保留概率")
    parser.add_argument("--preset", choices=sorted(SKEWED_PRESETS), default=None, help="偏斜球预设（覆盖 --p-keep）")
    parser.add_argument("--radius-const", type=float, default=None, help="传感器图半径常数 c（半径 c/√n）")
    parser.add_argument("--directed", action="store_true", help="有向图（传感器图或 --format graph 输入）")
    parser.add_argument("--largest-component", action="store_true", help="传感器图保留最大（强）连通分量，不要求整体连通")


def _add_input_arguments(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument("--input", type=Path, default=None, help="输入文件；缺省时按生成器参数生成数据")
    parser.add_argument("--format", choices=("vectors", "graph"), default="vectors", help="输入文件格式")
    parser.add_argument("--delimiter", choices=DELIMITERS, default="whitespace", help="向量文件分隔符")
    parser.add_argument("--n", type=int, default=1000, help="生成数据的规模")
    parser.add_argument("--data-seed", type=int, default=None, help="生成数据的种子（缺省同 --seed）")
    _add_generator_arguments(parser, settings)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """构造参数解析器，缺省值取自配置."""
    parser = argparse.ArgumentParser(prog="medoidkit", description="medoid 与 K-medoids 工具集")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=settings.default_seed, help="随机种子")
    parser.add_argument("--out", type=Path, default=None, help="输出路径（gen 为目录，其余为 CSV 文件）")
    parser.add_argument("--quiet", action="store_true", help="只输出警告及以上级别的日志")
    parser.add_argument("--log-file", type=Path, default=None, help="日志文件")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="生成合成数据")
    gen.add_argument("--n", type=int, required=True, help="元素个数")
    _add_generator_arguments(gen, settings, kind_flag="--kind")

    medoid = subparsers.add_parser("medoid", help="运行一次 medoid 算法")
    medoid.add_argument("--algorithm", choices=MEDOID_ALGORITHMS, default="trimed")
    _add_input_arguments(medoid, settings)
    medoid.add_argument("--trimed-epsilon", type=float, default=settings.trimed_epsilon)
    medoid.add_argument("--toprank-alpha-prime", type=float, default=settings.toprank_alpha_prime)
    medoid.add_argument("--toprank-anchor-constant", type=float, default=settings.toprank_anchor_constant)
    medoid.add_argument("--toprank-k", type=int, default=1)
    medoid.add_argument("--toprank2-l0", type=int, default=None)
    medoid.add_argument("--toprank2-q-incr", type=int, default=None)
    medoid.add_argument("--anchors", type=int, default=None, help="直接指定 RAND / TOPRANK 的锚点数")
    medoid.add_argument("--rand-epsilon", type=float, default=settings.rand_epsilon)
    medoid.add_argument("--no-symmetrize", action="store_true", help="有向图使用原始出向距离（trimed 不可用）")
    medoid.add_argument("--check-bounds", action="store_true", help="trimed 每步校验下界（参考值为平方级，适合 N ≤ 2000）")

    kmedoids = subparsers.add_parser("kmedoids", help="运行一次 K-medoids 算法")
    kmedoids.add_argument("--algorithm", choices=KMEDOIDS_ALGORITHMS, default="trikmeds")
    _add_input_arguments(kmedoids, settings)
    kmedoids.add_argument("--K", dest="K", type=int, required=True, help="簇数")
    kmedoids.add_argument("--trikmeds-epsilon", type=float, default=settings.trikmeds_epsilon)
    kmedoids.add_argument("--init", choices=INIT_METHODS, default="uniform")
    kmedoids.add_argument("--max-iters", type=int, default=settings.trikmeds_max_iters)
    kmedoids.add_argument("--baseline", type=Path, default=None, help="含 ε=0 基线记录的 CSV 文件")
    kmedoids.add_argument("--paired", action="store_true", help="先运行 ε=0 的 trikmeds 作为基线")
    kmedoids.add_argument("--check-bounds", action="store_true", help="trikmeds 每步校验下界（参考值为平方级，适合 N ≤ 2000）")

    sweep_parser = subparsers.add_parser("sweep", help="扫描实验")
    sweep_parser.add_argument("--algorithms", nargs="+", required=True, choices=MEDOID_ALGORITHMS + KMEDOIDS_ALGORITHMS)
    sweep_parser.add_argument("--n-grid", nargs="+", type=int, required=True, help="严格递增的规模序列")
    sweep_parser.add_argument("--seeds", type=int, default=5, help="每个规模的种子数")
    sweep_parser.add_argument("--workers", type=int, default=settings.sweep_workers)
    sweep_parser.add_argument("--input", type=Path, default=None)
    sweep_parser.add_argument("--format", choices=("vectors", "graph"), default="vectors")
    sweep_parser.add_argument("--delimiter", choices=DELIMITERS, default="whitespace", help="向量文件分隔符")
    _add_generator_arguments(sweep_parser, settings)
    sweep_parser.add_argument("--trimed-epsilon", type=float, default=settings.trimed_epsilon)
    sweep_parser.add_argument("--toprank-alpha-prime", type=float, default=settings.toprank_alpha_prime)
    sweep_parser.add_argument("--toprank-anchor-constant", type=float, default=settings.toprank_anchor_constant)
    sweep_parser.add_argument("--K", dest="K", type=int, default=10)
    sweep_parser.add_argument("--trikmeds-epsilon", type=float, default=settings.trikmeds_epsilon)
    sweep_parser.add_argument("--init", choices=INIT_METHODS, default="uniform")
    sweep_parser.add_argument("--max-iters", type=int, default=settings.trikmeds_max_iters)
    return parser


def _p_keep(args: argparse.Namespace) -> float:
    return SKEWED_PRESETS[args.preset] if args.preset else args.p_keep


def _gen_spec(args: argparse.Namespace, n: int, seed: int, settings: Settings) -> GenSpec:
    return GenSpec(
        kind=args.kind,
        n=n,
        dim=args.dim,
        p_keep=_p_keep(args),
        radius_const=args.radius_const,
        directed=args.directed,
        seed=seed,
        max_retries=settings.sensor_max_retries,
        keep_largest=args.largest_component,
    )


def load_input(args: argparse.Namespace, settings: Settings) -> Tuple[Dataset, str]:
    """读取输入文件或按生成器参数生成数据，返回 (数据集, 标识)."""
    if args.input is not None:
        if args.format == "graph":
            return load_graph(args.input, directed=args.directed), str(args.input)
        return load_vectors(args.input, delimiter=args.delimiter), str(args.input)
    seed = args.data_seed if args.data_seed is not None else args.seed
    spec = _gen_spec(args, args.n, seed, settings)
    data = generate(spec, settings.sensor_radius_undirected, settings.sensor_radius_directed)
    return data, spec.label()


def print_record(record: RunRecord) -> None:
    """以对齐的 ``key: value`` 形式打印记录."""
    values = record.to_dict()
    width = max(len(key) for key in values)
    for key, value in values.items():
        print(f"{key.ljust(width)} : {'' if value is None else value}")


def _emit(records: Sequence[RunRecord], out: Optional[Path]) -> None:
    for record in records:
        print_record(record)
        print()
    if out is not None:
        write_records(records, out, append=True)


def _find_baseline(path: Path, record_filter: KMedoidsRunConfig, dataset: str) -> RunRecord:
    candidates = [
        r
        for r in read_records(path)
        if r.ok and r.epsilon == 0.0 and r.k == record_filter.K and r.seed == record_filter.seed and r.dataset == dataset
    ]
    if not candidates:
        raise InvalidParameterError(f"{path} 中没有与本次运行匹配的 ε=0 基线记录")
    return candidates[-1]


def cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    spec = _gen_spec(args, args.n, args.seed, settings)
    data = generate(spec, settings.sensor_radius_undirected, settings.sensor_radius_directed)
    data_path, sidecar_path = write_dataset(data, spec, args.out or Path("data"))
    print(data_path)
    print(sidecar_path)
    return 0


def cmd_medoid(args: argparse.Namespace, settings: Settings) -> int:
    data, label = load_input(args, settings)
    config = MedoidRunConfig(
        algorithm=args.algorithm,
        seed=args.seed,
        epsilon=args.trimed_epsilon,
        k=args.toprank_k,
        alpha_prime=args.toprank_alpha_prime,
        anchor_constant=args.toprank_anchor_constant,
        n_anchors=args.anchors,
        l0=args.toprank2_l0,
        q_incr=args.toprank2_q_incr,
        rand_epsilon=args.rand_epsilon,
        symmetrize=not args.no_symmetrize,
        check_tolerance=settings.bound_check_tolerance if args.check_bounds else None,
    )
    record = run_medoid(data, config, label)
    _emit([record], args.out)
    return 0


def cmd_kmedoids(args: argparse.Namespace, settings: Settings) -> int:
    data, label = load_input(args, settings)
    config = KMedoidsRunConfig(
        algorithm=args.algorithm,
        K=args.K,
        seed=args.seed,
        epsilon=args.trikmeds_epsilon if args.algorithm == "trikmeds" else 0.0,
        init=args.init,
        max_iters=args.max_iters,
        check_tolerance=settings.bound_check_tolerance if args.check_bounds else None,
    )
    records: List[RunRecord] = []
    baseline = None
    if args.paired:
        baseline_config = KMedoidsRunConfig(
            algorithm="trikmeds",
            K=args.K,
            seed=args.seed,
            epsilon=0.0,
            init=args.init,
            max_iters=args.max_iters,
            check_tolerance=config.check_tolerance,
        )
        baseline = run_kmedoids(data, baseline_config, label)
        records.append(baseline)
    elif args.baseline is not None:
        baseline = _find_baseline(args.baseline, config, label)
    records.append(run_kmedoids(data, config, label, baseline=baseline))
    _emit(records, args.out)
    return 0


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    spec = SweepSpec(
        algorithms=args.algorithms,
        n_grid=args.n_grid,
        seeds=args.seeds,
        generator=args.kind,
        dim=args.dim,
        p_keep=_p_keep(args),
        radius_const=args.radius_const,
        directed=args.directed,
        keep_largest=args.largest_component,
        input_path=str(args.input) if args.input is not None else None,
        input_kind=args.format,
        delimiter=args.delimiter,
        base_seed=args.seed,
        params={
            "trimed_epsilon": args.trimed_epsilon,
            "trikmeds_epsilon": args.trikmeds_epsilon,
            "alpha_prime": args.toprank_alpha_prime,
            "anchor_constant": args.toprank_anchor_constant,
            "K": args.K,
            "init": args.init,
            "max_iters": args.max_iters,
        },
        workers=args.workers,
    )
    collector = get_metrics_collector()
    records, summary = sweep(spec, out=args.out, collector=collector, show_progress=not args.quiet)
    print(format_summary(summary))
    for metric, title in (("wall_time", "单次运行耗时（秒）"), ("distance_evals", "单次运行距离计算次数")):
        print(f"\n{title}:")
        print(format_summary(collector.stats_frame(metric)))
    failed = [r for r in records if not r.ok]
    if failed:
        print(f"\n{len(failed)} 个单元格失败", file=sys.stderr)
    return 0


COMMANDS = {"gen": cmd_gen, "medoid": cmd_medoid, "kmedoids": cmd_kmedoids, "sweep": cmd_sweep}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """命令行主函数.

    Args:
        argv: 参数列表（缺省取 sys.argv）

    Returns:
        int: 退出码
    """
    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"配置错误: {e}", file=sys.stderr)
        return 2

    args = build_parser(settings).parse_args(argv)
    logger = setup_logger(
        name="medoidkit",
        settings=settings,
        log_file=args.log_file or (Path(settings.log_file) if settings.log_file else None),
        level="WARNING" if args.quiet else None,
    )
    logger.debug(f"命令: {args.command}, seed={args.seed}")
    reset_metrics_collector()

    try:
        return COMMANDS[args.command](args, settings)
    except (MedoidKitError, ValidationError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"未预期的错误: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())

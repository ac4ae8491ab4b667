"""CSV 报告与汇总测试."""

import math
from pathlib import Path

import pytest

from medoidkit.bench.models.records import RunRecord
from medoidkit.bench.services.report import (
    CsvRecordWriter,
    fit_loglog_slope,
    format_summary,
    read_records,
    summarize,
    write_records,
)
from medoidkit.infrastructure.exceptions import DataParseError


def make_record(algorithm: str = "trimed", n: int = 100, seed: int = 0, n_computed: int = 10, **kwargs) -> RunRecord:
    return RunRecord(algorithm=algorithm, dataset="uniform_cube", n=n, d=2, seed=seed, n_computed=n_computed, **kwargs)


class TestCsvRoundTrip:
    """测试 CSV 读写."""

    def test_fields_identical(self, tmp_path: Path) -> None:
        """测试写出再读回后字段一致."""
        records = [
            make_record(objective=0.123456789012345, wall_time=0.5, result="3", distance_evals=1234),
            make_record(
                algorithm="trikmeds",
                k=5,
                epsilon=0.1,
                result="1;4;7",
                objective=1.0 / 3.0,
                phi_c=0.25,
                phi_E=1.0001,
                iterations=4,
            ),
            make_record(algorithm="brute", status="error", error="K=5 超过元素个数 3"),
        ]

        path = write_records(records, tmp_path / "runs.csv")

        assert read_records(path) == records

    def test_header_written_once(self, tmp_path: Path) -> None:
        """测试追加写入时只写一次表头."""
        path = tmp_path / "runs.csv"
        write_records([make_record(seed=0)], path)
        write_records([make_record(seed=1)], path)

        lines = path.read_text(encoding="utf-8").splitlines()

        assert len(lines) == 3
        assert lines[0].split(",") == RunRecord.columns()
        assert [r.seed for r in read_records(path)] == [0, 1]

    def test_overwrite(self, tmp_path: Path) -> None:
        """测试非追加模式覆盖文件."""
        path = tmp_path / "runs.csv"
        write_records([make_record(seed=0)], path)
        write_records([make_record(seed=5)], path, append=False)

        assert [r.seed for r in read_records(path)] == [5]

    def test_unknown_columns_ignored(self, tmp_path: Path) -> None:
        """测试忽略未知列，缺失列取缺省值."""
        path = tmp_path / "runs.csv"
        path.write_text("algorithm,dataset,n,d,seed,extra\ntrimed,x,10,2,3,foo\n", encoding="utf-8")

        [record] = read_records(path)

        assert record.algorithm == "trimed"
        assert record.seed == 3
        assert record.status == "ok"
        assert record.phi_c is None

    def test_parse_error_line_number(self, tmp_path: Path) -> None:
        """测试字段无法解析时报告行号."""
        path = tmp_path / "runs.csv"
        path.write_text("algorithm,dataset,n,d,seed\ntrimed,x,10,2,0\ntrimed,x,abc,2,1\n", encoding="utf-8")

        with pytest.raises(DataParseError) as exc_info:
            read_records(path)

        assert exc_info.value.line_number == 3

    def test_missing_file(self, tmp_path: Path) -> None:
        """测试文件不存在."""
        with pytest.raises(DataParseError):
            read_records(tmp_path / "missing.csv")

    def test_writer_without_path(self) -> None:
        """测试未指定路径时不写文件."""
        writer = CsvRecordWriter(None)
        writer.append(make_record())

        assert writer.n_written == 0

    def test_writer_appends(self, tmp_path: Path) -> None:
        """测试写入器逐条追加."""
        writer = CsvRecordWriter(tmp_path / "out" / "runs.csv")
        writer.append(make_record(seed=0))
        writer.append(make_record(seed=1))

        assert writer.n_written == 2
        assert len(read_records(writer.path)) == 2


class TestSlope:
    """测试 log-log 斜率拟合."""

    def test_square_root(self) -> None:
        """测试 n^0.5 的斜率为 0.5."""
        ns = [256, 1024, 4096, 16384]

        assert fit_loglog_slope(ns, [n**0.5 for n in ns]) == pytest.approx(0.5)

    def test_scaled_power(self) -> None:
        """测试常数倍不影响斜率."""
        ns = [10, 100, 1000]

        assert fit_loglog_slope(ns, [3.0 * n**1.5 for n in ns]) == pytest.approx(1.5)

    def test_single_n(self) -> None:
        """测试只有一个 n 时返回 nan."""
        assert math.isnan(fit_loglog_slope([100, 100], [5.0, 6.0]))


class TestSummarize:
    """测试汇总表."""

    def test_means_and_slope(self) -> None:
        """测试按 (algorithm, n) 取均值并给出斜率."""
        records = [
            make_record(n=100, seed=0, n_computed=8),
            make_record(n=100, seed=1, n_computed=12),
            make_record(n=10000, seed=0, n_computed=100),
            make_record(algorithm="brute", n=100, n_computed=100),
            make_record(algorithm="brute", n=10000, n_computed=10000),
            make_record(algorithm="brute", n=10000, seed=1, status="error"),
        ]

        summary = summarize(records)

        trimed_rows = summary[summary["algorithm"] == "trimed"]
        assert list(trimed_rows["n_computed"]) == [10.0, 100.0]
        assert list(trimed_rows["runs"]) == [2, 1]
        assert trimed_rows["slope"].iloc[0] == pytest.approx(0.5)
        brute_rows = summary[summary["algorithm"] == "brute"]
        assert list(brute_rows["runs"]) == [1, 1]
        assert brute_rows["slope"].iloc[0] == pytest.approx(1.0)

    def test_empty(self) -> None:
        """测试没有成功记录."""
        summary = summarize([make_record(status="error")])

        assert summary.empty
        assert format_summary(summary) == "(无成功记录)"

    def test_format(self) -> None:
        """测试文本汇总包含算法名."""
        text = format_summary(summarize([make_record(n=100), make_record(n=400, n_computed=20)]))

        assert "trimed" in text
        assert "slope" in text

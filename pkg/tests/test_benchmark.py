"""
Tests for the Grover depth benchmark
"""
import pytest

from routing.benchmark import DEPTH_COLUMNS, DepthReport, benchmark_grover, default_contention, run_point
from utils.batch_processor import BatchProcessor
from utils.errors import ConfigurationError


SERIAL = BatchProcessor(max_workers=1)


class TestRunPoint:
    def test_row_fields(self):
        row = run_point(3, "heavyhex", seed=0)
        assert row.verified
        assert row.depth >= row.depth_2q_only > 0
        assert not row.contention
        assert len(row.as_list()) == len(DEPTH_COLUMNS)

    def test_hybrid_defaults_to_contention(self):
        row = run_point(4, "hybrid", seed=0)
        assert row.contention
        assert row.swaps == 0
        assert row.depth >= row.depth_alt_contention

    def test_contention_override(self):
        assert not run_point(4, "hybrid", seed=0, contention=False).contention
        assert default_contention("hybrid")
        assert not default_contention("heavyhex")


class TestBenchmarkGrover:
    def test_two_qubits_are_equivalent(self):
        report = benchmark_grover(n_range=[2], seeds=range(2), processor=SERIAL)
        assert report.reduction_pct()[2] == pytest.approx(0.0)

    def test_rows_are_ordered_and_verified(self):
        report = benchmark_grover(n_range=[2, 3], seeds=range(2), processor=SERIAL)
        keys = [(r.n, r.topology, r.seed) for r in report.rows]
        assert keys == sorted(keys, key=lambda k: (k[0], ["hybrid", "heavyhex"].index(k[1]), k[2]))
        assert all(r.verified for r in report.rows)

    def test_summary_and_document(self):
        report = benchmark_grover(n_range=[3], seeds=range(3), processor=SERIAL)
        summary = {(s["n"], s["topology"]): s for s in report.summary()}
        assert summary[(3, "hybrid")]["seeds"] == 3
        assert summary[(3, "heavyhex")]["min_depth"] == report.min_depth(3, "heavyhex")
        document = report.to_dict()
        assert document["reference_topology"] == "heavyhex"
        assert set(document["reduction_pct"]) == {"3"}
        assert len(document["rows"]) == 6

    def test_no_reference_no_reduction(self):
        report = benchmark_grover(n_range=[3], topologies=["hybrid"], seeds=[0], processor=SERIAL)
        assert report.reduction_pct() == {}

    @pytest.mark.parametrize("kwargs", [{"topologies": []}, {"seeds": []}, {"n_range": []}])
    def test_empty_axes(self, kwargs):
        with pytest.raises(ConfigurationError):
            benchmark_grover(**kwargs)

    @pytest.mark.slow
    def test_hybrid_is_shallower(self):
        report = benchmark_grover(n_range=range(2, 7), seeds=range(8))
        assert all(r.verified for r in report.rows)
        for n in range(4, 7):
            assert report.min_depth(n, "hybrid") <= report.min_depth(n, "heavyhex")
        assert 10.0 <= report.reduction_pct()[6] <= 35.0


class TestDepthReport:
    def test_empty_report(self):
        report = DepthReport()
        assert report.summary() == []
        assert report.reduction_pct() == {}

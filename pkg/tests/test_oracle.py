"""Tests for the brute-force enumerators.

Core claims:
    - oracle totals equal the DP tables for NCP / NCPWS / ORDERED (n <= 9
      here; the acceptance suite pushes to 10)
    - the stream and the counting pass agree class by class, and the stream
      has no duplicates
    - role counts of point 1 reproduce the g(n-1) / f(n) / h(n) split
    - the path-count histogram is consistent
    - guards refuse oversized requests and honor the override variable
    - the compiled 2-ordered counter matches the pure predicate route
"""

import pytest

from crossfree.geometry import PartitionClass, classify_partition, is_ordered2
from crossfree.oracle import (
    GuardLimitError,
    all_class_reports,
    enumerate_partitions,
    enumeration_report,
    estimate_ordered2_growth,
    ordered2_count,
    role_counts,
)
from crossfree.recurrences import gfh_tables, go_tables, gs_tables


class TestTotals:
    def test_tables_match_oracle(self):
        g = gfh_tables(9)[0]
        gs = gs_tables(9)[0]
        go = go_tables(9)[0]
        for n in range(1, 10):
            reports = all_class_reports(n)
            assert reports[PartitionClass.NCP].total == g[n]
            assert reports[PartitionClass.NCPWS].total == gs[n]
            assert reports[PartitionClass.ORDERED].total == go[n]

    def test_published_spot_values(self):
        assert enumeration_report(3, PartitionClass.NCP).total == 7
        assert enumeration_report(6, PartitionClass.NCPWS).total == 128
        assert enumeration_report(5, PartitionClass.ORDERED).total == 77


class TestStream:
    def test_stream_matches_report_and_is_duplicate_free(self):
        for n in range(1, 9):
            for cls in PartitionClass:
                parts = list(enumerate_partitions(n, cls))
                assert len(set(parts)) == len(parts)
                assert len(parts) == enumeration_report(n, cls).total

    def test_stream_is_canonical_and_classified(self):
        for part in enumerate_partitions(6, PartitionClass.ORDERED):
            assert PartitionClass.ORDERED in classify_partition(part)

    def test_ordered_subset_of_ncp(self):
        ncp = set(enumerate_partitions(8))
        ordered = set(enumerate_partitions(8, PartitionClass.ORDERED))
        ncpws = set(enumerate_partitions(8, PartitionClass.NCPWS))
        assert ordered <= ncp
        assert ncpws <= ncp
        assert all(not p.has_singleton() for p in ncpws)


class TestRoles:
    def test_role_split_matches_recurrence_terms(self):
        g, f, h = gfh_tables(9)
        for n in range(1, 10):
            singles, ends, middles = role_counts(n)
            assert singles == g[n - 1]
            assert ends == f[n]
            assert middles == h[n]

    def test_small_cases(self):
        assert role_counts(1) == (1, 0, 0)
        assert role_counts(2) == (1, 1, 0)
        assert role_counts(3) == (2, 4, 1)

    def test_role_sum_equals_total_per_class(self):
        for n in range(1, 9):
            for cls in (PartitionClass.NCP, PartitionClass.NCPWS, PartitionClass.ORDERED):
                report = enumeration_report(n, cls)
                assert sum(report.by_role_of_1.values()) == report.total


class TestHistograms:
    def test_path_count_histogram(self):
        for n in range(1, 9):
            report = enumeration_report(n)
            assert sum(report.by_path_count.values()) == report.total
            assert report.by_path_count[n] == 1  # all singletons
            assert max(report.by_path_count) <= n


class TestGuards:
    def test_refusal(self):
        with pytest.raises(GuardLimitError, match="guard limit"):
            enumeration_report(13)
        with pytest.raises(GuardLimitError):
            list(enumerate_partitions(13))
        with pytest.raises(GuardLimitError):
            estimate_ordered2_growth(15)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            enumeration_report(0)

    def test_override(self, monkeypatch):
        monkeypatch.setenv("CROSSFREE_GUARD_OVERRIDE", "13")
        # still enumerates (n=4 is tiny); the point is the env hook parses
        assert enumeration_report(4).total == 29
        monkeypatch.setenv("CROSSFREE_GUARD_OVERRIDE", "2")
        # an override never lowers the built-in guard
        assert enumeration_report(4).total == 29


class TestOrdered2:
    def test_small_counts_variant_a(self):
        growth = estimate_ordered2_growth(8, "A")
        assert [growth.counts[n] for n in range(1, 9)] == [1, 1, 2, 8, 37, 163, 675, 2674]

    def test_counts_match_literal_predicate(self):
        for variant in ("A", "B", "C"):
            for n in range(1, 9):
                filtered = sum(
                    1 for p in enumerate_partitions(n) if is_ordered2(p, variant)
                )
                assert ordered2_count(n, variant) == filtered

    def test_growth_report_shape(self):
        growth = estimate_ordered2_growth(9, "A")
        assert growth.variant == "A"
        assert set(growth.counts) == set(range(1, 10))
        assert growth.last_ratio == growth.ratios[9]
        data = growth.to_json()
        assert data["counts"]["9"] == str(growth.counts[9])

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            ordered2_count(4, "Z")

    def test_pure_python_fallback(self, monkeypatch):
        from crossfree import _fastcount

        monkeypatch.setattr(_fastcount, "HAVE_NUMBA", False)
        assert _fastcount.count_ordered2(6, "A") is None
        assert ordered2_count(6, "A") == 163  # pure scan takes over


class TestReportJson:
    def test_shape(self):
        report = enumeration_report(4)
        data = report.to_json()
        assert data["total"] == "29"
        assert data["class"] == "ncp"
        assert data["by_path_count"]["4"] == "1"

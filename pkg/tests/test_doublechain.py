"""Tests for double-chain realization, predicate, and constructions.

Core claims:
    - the built-in realization passes exact validation; broken configurations
      fail with the right first-violation message
    - the combinatorial crossing predicate agrees 100% with exact rational
      segment intersection on realizations, for all n, m <= 6
    - gluing two equal-k partitions in slot order reproduces every
      polygonization exactly once (injective decomposition, round-trip)
    - the pair-gluing count equals the geometric brute force
    - ordered pairs glue to distinct non-crossing Hamiltonian paths and every
      path closes into a polygonization on two more points per chain
    - the alternating-edge families track the a/b recurrences and contain
      only valid no-singleton partitions
"""

import itertools
from fractions import Fraction

import pytest

from crossfree.geometry import PartitionClass, PathPartition
from crossfree.doublechain import (
    ChainGraph,
    ChainRealization,
    CompositionStatus,
    DoubleChainConfig,
    ab_family,
    build_hamiltonian_path,
    close_to_polygonization,
    compose_pair,
    count_polygonizations_exact,
    count_polygonizations_geometric,
    decompose_polygonization,
    edge_kind,
    edges_cross_dc,
    enumerate_polygonizations,
    is_polygonization,
    realize,
    segments_properly_cross,
    validate_double_chain,
)
from crossfree.oracle import GuardLimitError, enumerate_partitions
from crossfree.recurrences import ab_tables


def all_edges(config):
    labels = range(1, config.total + 1)
    return [(a, b) for a in labels for b in labels if a < b]


class TestRealizeAndValidate:
    @pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 3), (8, 8), (2, 5), (6, 3)])
    def test_built_in_realization_validates(self, n, m):
        config = DoubleChainConfig(n, m)
        real = realize(config)
        assert validate_double_chain(real, config) == (True, None)

    def test_flat_chains_fail(self):
        # H = 0 collapses the gap; separation must fail
        config = DoubleChainConfig(3, 3)
        coords = {}
        for i in range(1, 4):
            coords[i] = (Fraction(i), Fraction((2 * i - 4) ** 2, 4))
            coords[3 + i] = (Fraction(i), -Fraction((2 * i - 4) ** 2, 4))
        ok, reason = validate_double_chain(ChainRealization(config, coords), config)
        assert not ok
        assert "strictly" in reason

    def test_same_concavity_fails(self):
        # both "chains" on one circular arc of the same concavity
        config = DoubleChainConfig(2, 2)
        coords = {
            1: (Fraction(0), Fraction(0)),
            2: (Fraction(1), Fraction(2)),
            3: (Fraction(2), Fraction(3)),
            4: (Fraction(3), Fraction(7, 2)),
        }
        ok, reason = validate_double_chain(ChainRealization(config, coords), config)
        assert not ok

    def test_unordered_chain_fails(self):
        config = DoubleChainConfig(2, 2)
        good = realize(config).coordinates
        coords = dict(good)
        coords[1], coords[2] = coords[2], coords[1]
        ok, reason = validate_double_chain(ChainRealization(config, coords), config)
        assert not ok
        assert "left to right" in reason

    def test_missing_coordinates(self):
        config = DoubleChainConfig(2, 2)
        with pytest.raises(ValueError, match="no coordinates"):
            validate_double_chain(ChainRealization(config, {1: (Fraction(0), Fraction(0))}), config)


class TestCrossingPredicate:
    def test_two_layer_inversion(self):
        config = DoubleChainConfig(2, 2)
        assert edges_cross_dc((1, 4), (2, 3), config) is True

    def test_order_preserving(self):
        config = DoubleChainConfig(2, 2)
        assert edges_cross_dc((1, 3), (2, 4), config) is False

    def test_within_chain_interleave(self):
        config = DoubleChainConfig(4, 4)
        assert edges_cross_dc((1, 3), (2, 4), config) is True
        assert edges_cross_dc((5, 7), (6, 8), config) is True
        assert edges_cross_dc((1, 4), (2, 3), config) is False

    def test_chain_chord_never_crosses_alternating(self):
        # both alternating endpoints sit strictly below any U-pair line
        config = DoubleChainConfig(3, 3)
        assert edges_cross_dc((1, 3), (2, 4), config) is False
        assert edges_cross_dc((1, 3), (2, 6), config) is False
        assert edges_cross_dc((4, 6), (2, 5), config) is False

    def test_shared_endpoint(self):
        config = DoubleChainConfig(3, 3)
        assert edges_cross_dc((1, 4), (1, 6), config) is False

    def test_label_validation(self):
        config = DoubleChainConfig(2, 2)
        with pytest.raises(ValueError):
            edges_cross_dc((1, 5), (2, 3), config)
        with pytest.raises(ValueError):
            edges_cross_dc((1, 1), (2, 3), config)

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("m", range(1, 7))
    def test_agreement_with_exact_geometry(self, n, m):
        config = DoubleChainConfig(n, m)
        real = realize(config)
        edges = all_edges(config)
        for e1, e2 in itertools.combinations(edges, 2):
            assert edges_cross_dc(e1, e2, config) == segments_properly_cross(
                real, e1, e2
            ), (n, m, e1, e2)


class TestComposition:
    def test_hull_on_two_by_two(self):
        pu = PathPartition.from_paths(2, [[1, 2]])
        pl = PathPartition.from_paths(2, [[1, 2]])
        outcome = compose_pair(pu, pl)
        assert outcome.status is CompositionStatus.POLYGONIZATION
        assert outcome.graph.edges == {(1, 2), (3, 4), (1, 3), (2, 4)}

    def test_k_mismatch_refused(self):
        pu = PathPartition.from_paths(2, [[1, 2]])
        pl = PathPartition.from_paths(2, [[1], [2]])
        with pytest.raises(ValueError, match="path counts differ"):
            compose_pair(pu, pl)

    def test_duplicated_edge_on_singletons(self):
        outcome = compose_pair(
            PathPartition.from_paths(1, [[1]]), PathPartition.from_paths(1, [[1]])
        )
        assert outcome.status is CompositionStatus.DUPLICATED_EDGE
        assert outcome.duplicated_edges == ((1, 2),)

    def test_two_cycles_with_duplicate(self):
        # a long path plus a trailing singleton on both chains: the paths close
        # into one cycle, the facing singletons close into a repeated edge
        pu = PathPartition.from_paths(8, [[1, 2, 3, 4, 5, 6, 7], [8]])
        pl = PathPartition.from_paths(8, [[1, 2, 3, 4, 5, 6, 7], [8]])
        outcome = compose_pair(pu, pl)
        assert outcome.status is CompositionStatus.MULTI_CYCLE
        assert outcome.cycle_count == 2
        assert outcome.duplicated_edges == ((8, 16),)

    def test_multi_cycle_without_duplicate(self):
        # two aligned 2-point paths per chain close into two 4-cycles
        pu = PathPartition.from_paths(4, [[1, 2], [3, 4]])
        pl = PathPartition.from_paths(4, [[1, 2], [3, 4]])
        outcome = compose_pair(pu, pl)
        assert outcome.status is CompositionStatus.MULTI_CYCLE
        assert outcome.cycle_count == 2
        assert outcome.duplicated_edges == ()

    @pytest.mark.parametrize("n,m", [(2, 2), (3, 3), (2, 3), (4, 3), (4, 4)])
    def test_round_trip_and_injectivity(self, n, m):
        config = DoubleChainConfig(n, m)
        seen = set()
        total = 0
        for graph in enumerate_polygonizations(config):
            pu, pl, k = decompose_polygonization(graph)
            assert pu.k == pl.k == k
            assert 2 * k == len(graph.alternating_edges())
            key = (pu.paths, pl.paths)
            assert key not in seen
            seen.add(key)
            outcome = compose_pair(pu, pl)
            assert outcome.status is CompositionStatus.POLYGONIZATION
            assert outcome.graph.edges == graph.edges
            total += 1
        assert total == count_polygonizations_exact(config)

    def test_decompose_rejects_non_polygonization(self):
        config = DoubleChainConfig(2, 2)
        graph = ChainGraph.from_edges(config, [(1, 2), (3, 4)])
        with pytest.raises(ValueError, match="Hamiltonian cycle"):
            decompose_polygonization(graph)

    def test_decompose_relabels_lower_chain(self):
        config = DoubleChainConfig(2, 2)
        graph = ChainGraph.from_edges(config, [(1, 2), (3, 4), (1, 3), (2, 4)])
        pu, pl, k = decompose_polygonization(graph)
        assert pu.paths == ((1, 2),)
        assert pl.paths == ((1, 2),)
        assert k == 1


class TestCounts:
    @pytest.mark.parametrize(
        "n,m,expected",
        [(1, 1, 0), (2, 2, 1), (2, 3, 4), (3, 3, 13)],
    )
    def test_small_counts(self, n, m, expected):
        config = DoubleChainConfig(n, m)
        assert count_polygonizations_geometric(config) == expected
        assert count_polygonizations_exact(config) == expected

    def test_cross_oracle_agreement_four_four(self):
        config = DoubleChainConfig(4, 4)
        assert count_polygonizations_exact(config) == count_polygonizations_geometric(config)

    def test_upper_bound_by_partition_product(self):
        # the gluing injects polygonizations into partition pairs
        from crossfree.recurrences import gfh_tables

        g = gfh_tables(5)[0]
        for n, m in [(2, 2), (2, 3), (3, 3), (4, 4)]:
            count = count_polygonizations_exact(DoubleChainConfig(n, m))
            assert count <= g[n] * g[m]

    def test_guards(self):
        with pytest.raises(GuardLimitError):
            count_polygonizations_exact(DoubleChainConfig(7, 6))
        with pytest.raises(GuardLimitError):
            count_polygonizations_geometric(DoubleChainConfig(6, 5))


class TestOrderedGluing:
    @staticmethod
    def ordered_by_k(n):
        grouped = {}
        for part in enumerate_partitions(n, PartitionClass.ORDERED):
            grouped.setdefault(part.k, []).append(part)
        return grouped

    @pytest.mark.parametrize("n", [3, 4])
    def test_all_pairs_build_distinct_paths(self, n):
        grouped = self.ordered_by_k(n)
        built = set()
        for k, parts in grouped.items():
            for pu in parts:
                for pl in parts:
                    graph = build_hamiltonian_path(pu, pl)
                    assert graph.edges not in built
                    built.add(graph.edges)

    def test_k_one_trivial_shape(self):
        pu = PathPartition.from_paths(3, [[1, 2, 3]])
        pl = PathPartition.from_paths(3, [[1, 2, 3]])
        graph = build_hamiltonian_path(pu, pl)
        # one alternating edge joins the right end of U to the left end of L
        assert graph.alternating_edges() == [(3, 4)]

    def test_rejects_unordered_input(self):
        bad = PathPartition.from_paths(3, [[1, 3], [2]])
        good = PathPartition.from_paths(3, [[1, 2], [3]])
        with pytest.raises(ValueError, match="ordered"):
            build_hamiltonian_path(bad, good)

    def test_rejects_k_mismatch(self):
        pu = PathPartition.from_paths(3, [[1, 2, 3]])
        pl = PathPartition.from_paths(3, [[1, 2], [3]])
        with pytest.raises(ValueError, match="equal k"):
            build_hamiltonian_path(pu, pl)

    def test_closure_of_trivial_path(self):
        pu = PathPartition.from_paths(2, [[1, 2]])
        pl = PathPartition.from_paths(2, [[1, 2]])
        closed = close_to_polygonization(build_hamiltonian_path(pu, pl))
        assert closed.config == DoubleChainConfig(4, 4)
        assert is_polygonization(closed)

    def test_closure_of_single_point_chains(self):
        pu = PathPartition.from_paths(1, [[1]])
        pl = PathPartition.from_paths(1, [[1]])
        graph = build_hamiltonian_path(pu, pl)
        assert graph.edges == {(1, 2)}
        closed = close_to_polygonization(graph)
        assert closed.config == DoubleChainConfig(3, 3)
        assert is_polygonization(closed)

    def test_closure_handles_wrapped_middles(self):
        # U path 2-1-3 has a chain edge jumping over the free end's position
        pu = PathPartition.from_paths(3, [[2, 1, 3]])
        pl = PathPartition.from_paths(3, [[1, 2, 3]])
        graph = build_hamiltonian_path(pu, pl)
        closed = close_to_polygonization(graph)
        assert is_polygonization(closed)

    def test_closure_rejects_foreign_paths(self):
        # valid Hamiltonian path l1-u1-l2-u2 whose free ends are not extreme
        # among the alternating attachments; the hull routing cannot close it
        config = DoubleChainConfig(2, 2)
        graph = ChainGraph.from_edges(config, [(1, 3), (1, 4), (2, 4)])
        with pytest.raises(ValueError, match="free ends"):
            close_to_polygonization(graph)

    def test_closure_rejects_cycles_and_non_paths(self):
        config = DoubleChainConfig(2, 2)
        hull = ChainGraph.from_edges(config, [(1, 2), (3, 4), (1, 3), (2, 4)])
        with pytest.raises(ValueError, match="Hamiltonian path"):
            close_to_polygonization(hull)

    def test_closure_distinctness(self):
        grouped = self.ordered_by_k(4)
        closed = set()
        for k, parts in grouped.items():
            for pu in parts:
                for pl in parts:
                    graph = close_to_polygonization(build_hamiltonian_path(pu, pl))
                    assert graph.edges not in closed
                    closed.add(graph.edges)


class TestAbFamily:
    def test_base_step(self):
        fam_a, fam_b = ab_family(1)
        assert len(fam_a) == 1 and not fam_b
        assert fam_a[0].edges == {(1, 2)}

    def test_sizes_match_tables(self):
        a, b = ab_tables(10)
        for i in range(1, 11):
            fam_a, fam_b = ab_family(i)
            assert len(fam_a) == a[i]
            assert len(fam_b) == b[i]

    def test_members_are_valid_ncpws_partitions(self):
        config = DoubleChainConfig(5, 5)
        fam_a, fam_b = ab_family(5, config)
        for kind, members in (("A", fam_a), ("B", fam_b)):
            for graph in members:
                graph.check()  # non-crossing, labels valid
                assert all(
                    edge_kind(e, config) == "alternating" for e in graph.edges
                )
                deg = graph.degrees()
                # every point of the first 5 on each chain is covered: no singleton
                for v in list(range(1, 6)) + list(range(6, 11)):
                    assert 1 <= deg[v] <= 2
                # point 5 joined to point 10, endpoint condition per family
                assert (5, 10) in graph.edges
                ends = (deg[5] == 1) + (deg[10] == 1)
                assert ends == (2 if kind == "A" else 1)

    def test_member_components_are_paths(self):
        # degree <= 2 and acyclic: walk every component
        fam_a, fam_b = ab_family(6)
        for graph in fam_a + fam_b:
            adj = {}
            for a_, b_ in graph.edges:
                adj.setdefault(a_, []).append(b_)
                adj.setdefault(b_, []).append(a_)
            seen = set()
            for start in adj:
                if start in seen or len(adj[start]) == 2:
                    continue
                prev, cur = None, start
                seen.add(cur)
                while True:
                    nxt = [w for w in adj[cur] if w != prev]
                    if not nxt:
                        break
                    prev, cur = cur, nxt[0]
                    assert cur not in seen  # a revisit would be a cycle
                    seen.add(cur)
            assert seen == set(adj)  # no pure-cycle component remains

    def test_guard_and_config_validation(self):
        with pytest.raises(GuardLimitError):
            ab_family(17)
        with pytest.raises(ValueError):
            ab_family(4, DoubleChainConfig(3, 5))
        with pytest.raises(ValueError):
            ab_family(0)


class TestChainGraphJson:
    def test_round_trip(self):
        config = DoubleChainConfig(2, 2)
        graph = ChainGraph.from_edges(config, [(1, 2), (1, 3)])
        data = graph.to_json()
        assert data == {"n_upper": 2, "n_lower": 2, "edges": [[1, 2], [1, 3]]}
        assert ChainGraph.from_json(data) == graph

    def test_rejects_crossing_edges(self):
        config = DoubleChainConfig(2, 2)
        with pytest.raises(ValueError, match="cross"):
            ChainGraph.from_edges(config, [(1, 4), (2, 3)])

    def test_rejects_missing_field(self):
        with pytest.raises(ValueError, match="missing"):
            ChainGraph.from_json({"n_upper": 2, "edges": []})

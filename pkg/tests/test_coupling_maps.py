"""
Tests for the hybrid king-graph, heavy-hex and all-to-all coupling maps
"""
import networkx as nx
import pytest

from lattice.coupling_maps import (
    Cluster,
    CouplingMap,
    all_to_all_map,
    build_topology,
    heavy_hex_map,
    hybrid_grid_map,
    hybrid_map_for,
)
from utils.errors import ConfigurationError, DisconnectedMapError


def _assert_well_formed(cmap):
    graph = cmap.to_networkx()
    assert nx.is_connected(graph)
    assert nx.number_of_selfloops(graph) == 0


class TestHybridGrid:
    @pytest.mark.parametrize("rows, cols, n_edges", [(1, 2, 1), (2, 2, 6), (3, 3, 20), (4, 5, 55)])
    def test_edge_counts(self, rows, cols, n_edges):
        cmap = hybrid_grid_map(rows, cols)
        assert len(cmap.edges) == n_edges
        _assert_well_formed(cmap)

    def test_unit_cell_is_one_full_cluster(self):
        cmap = hybrid_grid_map(2, 2)
        assert len(cmap.clusters) == 1
        assert len(cmap.clusters[0].edges) == 6
        assert cmap.clusters[0].members == (0, 1, 2, 3)

    def test_degrees(self):
        cmap = hybrid_grid_map(3, 3)
        assert cmap.degree(4) == 8
        for corner in (0, 2, 6, 8):
            assert cmap.degree(corner) == 3
        for side in (1, 3, 5, 7):
            assert cmap.degree(side) == 5

    def test_every_edge_in_exactly_one_cluster(self):
        cmap = hybrid_grid_map(3, 4)
        owners = cmap.cluster_of_edge()
        assert set(owners) == set(cmap.edges)
        assert len(cmap.clusters) == 2 * 3

    def test_shared_edge_goes_to_first_plaquette(self):
        cmap = hybrid_grid_map(2, 3)
        # (1, 4) sits between plaquettes 0 and 1
        assert cmap.cluster_of_edge()[(1, 4)] == 0

    @pytest.mark.parametrize("n, n_edges", [(2, 1), (3, 3), (4, 6), (6, 11)])
    def test_benchmark_sizing(self, n, n_edges):
        cmap = hybrid_map_for(n)
        assert cmap.n_qubits == n
        assert len(cmap.edges) == n_edges
        _assert_well_formed(cmap)

    def test_invalid_size(self):
        with pytest.raises(ConfigurationError):
            hybrid_grid_map(0, 3)


class TestHeavyHex:
    def test_two_qubits(self):
        assert heavy_hex_map(2).edges == ((0, 1),)

    def test_five_qubits(self):
        cmap = heavy_hex_map(5)
        assert len(cmap.edges) >= 4
        assert cmap.max_degree() <= 3
        _assert_well_formed(cmap)

    @pytest.mark.parametrize("n", range(2, 41))
    def test_degree_bound(self, n):
        cmap = heavy_hex_map(n)
        assert cmap.n_qubits == n
        assert cmap.max_degree() <= 3
        _assert_well_formed(cmap)

    def test_large_patch_has_rings(self):
        cmap = heavy_hex_map(40)
        assert len(nx.cycle_basis(cmap.to_networkx())) >= 1

    def test_deterministic(self):
        assert heavy_hex_map(12) == heavy_hex_map(12)

    def test_out_of_range(self):
        with pytest.raises(ConfigurationError):
            heavy_hex_map(1)


class TestAllToAll:
    @pytest.mark.parametrize("n, n_edges", [(3, 3), (6, 15)])
    def test_edge_counts(self, n, n_edges):
        assert len(all_to_all_map(n).edges) == n_edges


class TestCouplingMap:
    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedMapError):
            CouplingMap(3, ((0, 1),))

    def test_self_loop_rejected(self):
        with pytest.raises(ConfigurationError):
            CouplingMap(2, ((0, 0), (0, 1)))

    def test_cluster_edges_must_exist(self):
        with pytest.raises(ConfigurationError):
            CouplingMap(3, ((0, 1), (1, 2)), (Cluster(0, (0, 2), ((0, 2),)),))

    def test_document_round_trip(self):
        cmap = hybrid_grid_map(3, 3)
        assert CouplingMap.from_dict(cmap.to_dict()) == cmap

    def test_malformed_document(self):
        with pytest.raises(ConfigurationError):
            CouplingMap.from_dict({"edges": [[0, 1]]})

    def test_build_topology(self):
        assert build_topology("all2all", 4).name == "all2all"
        with pytest.raises(ConfigurationError):
            build_topology("ring", 4)

"""
Coupling-map generators
Hybrid coupler-cluster lattice (king graph), heavy-hex reference, all-to-all
"""
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Tuple

import networkx as nx

from utils.errors import ConfigurationError, DisconnectedMapError


HEAVY_HEX_ROW_WIDTH = 15
HEAVY_HEX_ROWS = 8
HEAVY_HEX_MAX_QUBITS = 133


def _edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Cluster:
    """Qubits sharing one physical coupler and the map edges it mediates"""

    coupler_id: int
    members: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    def to_dict(self):
        return {
            "coupler_id": self.coupler_id,
            "members": list(self.members),
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class CouplingMap:
    """
    Undirected qubit connectivity with optional coupler-cluster annotations
    """

    n_qubits: int
    edges: Tuple[Tuple[int, int], ...]
    clusters: Tuple[Cluster, ...] = ()
    name: str = "custom"

    def __post_init__(self):
        edges = tuple(sorted({_edge(int(u), int(v)) for u, v in self.edges}))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "clusters", tuple(self.clusters))

        if self.n_qubits < 1:
            raise ConfigurationError("a coupling map needs at least one qubit")
        for u, v in edges:
            if u == v:
                raise ConfigurationError(f"self-loop on qubit {u}")
            if not (0 <= u < self.n_qubits and 0 <= v < self.n_qubits):
                raise ConfigurationError(f"edge ({u}, {v}) outside {self.n_qubits}-qubit map")

        edge_set = set(edges)
        claimed = set()
        for cluster in self.clusters:
            for e in cluster.edges:
                if e not in edge_set:
                    raise ConfigurationError(f"cluster {cluster.coupler_id} edge {e} is not a map edge")
                if e in claimed:
                    raise ConfigurationError(f"edge {e} belongs to more than one cluster")
                claimed.add(e)

        if not nx.is_connected(self.to_networkx()):
            raise DisconnectedMapError(f"{self.name} map with {self.n_qubits} qubits is not connected")

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_qubits))
        graph.add_edges_from(self.edges)
        return graph

    def has_edge(self, u, v):
        return _edge(u, v) in self.edge_index

    @cached_property
    def edge_index(self):
        return {e: i for i, e in enumerate(self.edges)}

    def cluster_of_edge(self):
        """Dict edge -> coupler id for clustered edges"""
        return {e: c.coupler_id for c in self.clusters for e in c.edges}

    def degree(self, qubit):
        return sum(1 for e in self.edges if qubit in e)

    def max_degree(self):
        return max((self.degree(q) for q in range(self.n_qubits)), default=0)

    def induced(self, n_qubits, name=None):
        """Sub-map on qubits 0..n_qubits-1"""
        keep = set(range(n_qubits))
        edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        clusters = []
        for c in self.clusters:
            c_edges = tuple(e for e in c.edges if e[0] in keep and e[1] in keep)
            if c_edges:
                members = tuple(m for m in c.members if m in keep)
                clusters.append(Cluster(c.coupler_id, members, c_edges))
        return CouplingMap(n_qubits, tuple(edges), tuple(clusters), name or self.name)

    def to_dict(self):
        return {
            "name": self.name,
            "n": self.n_qubits,
            "edges": [list(e) for e in self.edges],
            "clusters": [c.to_dict() for c in self.clusters],
        }

    @classmethod
    def from_dict(cls, payload):
        try:
            clusters = tuple(
                Cluster(
                    int(c["coupler_id"]),
                    tuple(int(m) for m in c["members"]),
                    tuple(_edge(int(u), int(v)) for u, v in c["edges"])
                )
                for c in payload.get("clusters", [])
            )
            return cls(
                int(payload["n"]),
                tuple((int(u), int(v)) for u, v in payload["edges"]),
                clusters,
                payload.get("name", "custom")
            )
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ConfigurationError):
                raise
            raise ConfigurationError(f"malformed coupling map document: {e}") from e


# ============== Generators ==============

def hybrid_grid_map(rows, cols):
    """
    King-graph lattice with one shared coupler per 2x2 plaquette

    Qubit (r, c) has index r * cols + c. Each plaquette's cluster holds
    the 6 edges among its 4 qubits; an edge shared by two plaquettes goes
    to the lexicographically first.

    Args:
        rows: Grid rows (>= 1)
        cols: Grid columns (>= 1)

    Returns:
        CouplingMap
    """
    if rows < 1 or cols < 1:
        raise ConfigurationError(f"grid needs rows, cols >= 1, got {rows}x{cols}")

    def index(r, c):
        return r * cols + c

    edges = set()
    for r in range(rows):
        for c in range(cols):
            for dr, dc in ((0, 1), (1, -1), (1, 0), (1, 1)):
                rr, cc = r + dr, c + dc
                if 0 <= rr < rows and 0 <= cc < cols:
                    edges.add(_edge(index(r, c), index(rr, cc)))

    clusters = []
    claimed = set()
    for r in range(rows - 1):
        for c in range(cols - 1):
            members = (index(r, c), index(r, c + 1), index(r + 1, c), index(r + 1, c + 1))
            own = tuple(
                e for e in sorted(_edge(u, v) for u, v in combinations(members, 2))
                if e not in claimed
            )
            claimed.update(own)
            clusters.append(Cluster(len(clusters), tuple(sorted(members)), own))

    return CouplingMap(rows * cols, tuple(edges), tuple(clusters), "hybrid")


def hybrid_map_for(n_qubits):
    """Two-row hybrid lattice trimmed to the first n_qubits indices"""
    if n_qubits < 2:
        raise ConfigurationError(f"hybrid map needs at least 2 qubits, got {n_qubits}")
    grid = hybrid_grid_map(2, math.ceil(n_qubits / 2))
    return grid.induced(n_qubits, "hybrid")


def _heavy_hex_lattice():
    """
    Full heavy-hex pattern: rows of HEAVY_HEX_ROW_WIDTH qubits joined by
    bridge qubits, bridges every 4 columns, offset by 2 on alternate rows
    """
    graph = nx.Graph()
    width = HEAVY_HEX_ROW_WIDTH
    for r in range(HEAVY_HEX_ROWS):
        for c in range(width - 1):
            graph.add_edge(r * width + c, r * width + c + 1)

    bridge = HEAVY_HEX_ROWS * width
    for r in range(HEAVY_HEX_ROWS - 1):
        offset = 0 if r % 2 == 0 else 2
        for c in range(offset, width, 4):
            graph.add_edge(r * width + c, bridge)
            graph.add_edge(bridge, (r + 1) * width + c)
            bridge += 1
    return graph


def heavy_hex_map(n_qubits):
    """
    Breadth-first n-qubit patch of the heavy-hex lattice, reindexed in visit order

    Args:
        n_qubits: 2..133

    Returns:
        Connected CouplingMap with maximum degree 3
    """
    if not 2 <= n_qubits <= HEAVY_HEX_MAX_QUBITS:
        raise ConfigurationError(f"heavy-hex size must be in 2..{HEAVY_HEX_MAX_QUBITS}, got {n_qubits}")

    lattice = _heavy_hex_lattice()
    order = [0] + [v for _, v in nx.bfs_edges(lattice, 0, sort_neighbors=sorted)]
    relabel = {node: i for i, node in enumerate(order[:n_qubits])}
    edges = [
        (relabel[u], relabel[v])
        for u, v in lattice.subgraph(relabel).edges()
    ]
    return CouplingMap(n_qubits, tuple(edges), (), "heavyhex")


def all_to_all_map(n_qubits):
    if n_qubits < 2:
        raise ConfigurationError(f"all-to-all map needs at least 2 qubits, got {n_qubits}")
    return CouplingMap(n_qubits, tuple(combinations(range(n_qubits), 2)), (), "all2all")


TOPOLOGIES = {
    "hybrid": hybrid_map_for,
    "heavyhex": heavy_hex_map,
    "all2all": all_to_all_map,
}


def build_topology(name, n_qubits):
    """Coupling map by topology name: hybrid, heavyhex or all2all"""
    if name not in TOPOLOGIES:
        raise ConfigurationError(f"unknown topology {name!r}, choose from {sorted(TOPOLOGIES)}")
    return TOPOLOGIES[name](n_qubits)

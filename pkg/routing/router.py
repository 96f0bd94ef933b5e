"""
SWAP-insertion router
Look-ahead greedy routing of {1q, CX} circuits onto a coupling map
"""
from dataclasses import dataclass
from typing import Tuple

import networkx as nx
import numpy as np

from lattice.circuit import Circuit, Gate
from utils.errors import CapacityError, ConfigurationError, DisconnectedMapError
from utils.seeding import substream


LOOKAHEAD_GATES = 20
LOOKAHEAD_WEIGHT = 0.5
ESCAPE_FACTOR = 3


@dataclass(frozen=True)
class Layout:
    """physical[l] is the physical qubit holding logical qubit l"""

    physical: Tuple[int, ...]

    def __post_init__(self):
        physical = tuple(int(p) for p in self.physical)
        object.__setattr__(self, "physical", physical)
        if sorted(physical) != list(range(len(physical))):
            raise ConfigurationError(f"layout {physical} is not a permutation")

    def __len__(self):
        return len(self.physical)

    def __getitem__(self, logical):
        return self.physical[logical]

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    def inverse(self):
        """logical[p] for every physical qubit p"""
        logical = [0] * len(self.physical)
        for l, p in enumerate(self.physical):
            logical[p] = l
        return tuple(logical)

    def swapped(self, p1, p2):
        """Layout after exchanging the contents of physical qubits p1 and p2"""
        swap = {p1: p2, p2: p1}
        return Layout(tuple(swap.get(p, p) for p in self.physical))


@dataclass(frozen=True)
class RoutedCircuit:
    """Circuit over physical qubits plus the layouts it starts and ends in"""

    circuit: Circuit
    initial_layout: Layout
    final_layout: Layout
    swaps_inserted: int

    def to_dict(self):
        return {
            "circuit": self.circuit.to_dict(),
            "initial_layout": list(self.initial_layout.physical),
            "final_layout": list(self.final_layout.physical),
            "swaps_inserted": self.swaps_inserted,
        }


def distance_matrix(cmap):
    """
    All-pairs hop counts by breadth-first search

    Args:
        cmap: CouplingMap

    Returns:
        n x n integer array
    """
    graph = cmap.to_networkx()
    if not nx.is_connected(graph):
        raise DisconnectedMapError(f"{cmap.name} map is not connected")
    n = cmap.n_qubits
    dist = np.zeros((n, n), dtype=int)
    for source, lengths in nx.all_pairs_shortest_path_length(graph):
        for target, d in lengths.items():
            dist[source, target] = d
    return dist


def _initial_layout(n_physical, initial_layout, seed):
    if initial_layout is not None:
        physical = tuple(initial_layout.physical if isinstance(initial_layout, Layout) else initial_layout)
        if len(physical) < n_physical:
            # unlisted logical qubits take the unused physical qubits in order
            free = [p for p in range(n_physical) if p not in set(physical)]
            physical = physical + tuple(free)
        if len(physical) != n_physical:
            raise ConfigurationError(f"layout has {len(physical)} entries for a {n_physical}-qubit map")
        return Layout(physical)
    if seed == 0:
        return Layout.identity(n_physical)
    return Layout(tuple(int(p) for p in substream(seed, "initial-layout").permutation(n_physical)))


class _DependencyTracker:
    """Gate DAG from per-qubit order, with a ready front"""

    def __init__(self, gates, n_qubits):
        self.gates = gates
        self.pending = [0] * len(gates)
        self.successors = [[] for _ in gates]
        last = [None] * n_qubits
        for i, gate in enumerate(gates):
            preds = {last[q] for q in gate.qubits if last[q] is not None}
            self.pending[i] = len(preds)
            for p in preds:
                self.successors[p].append(i)
            for q in gate.qubits:
                last[q] = i
        self.front = sorted(i for i, n in enumerate(self.pending) if n == 0)
        self.done = [False] * len(gates)
        self.cursor = 0

    def retire(self, i):
        self.front.remove(i)
        self.done[i] = True
        for s in self.successors[i]:
            self.pending[s] -= 1
            if self.pending[s] == 0:
                self.front.append(s)
        self.front.sort()
        while self.cursor < len(self.gates) and self.done[self.cursor]:
            self.cursor += 1

    def lookahead(self, limit):
        """First `limit` unexecuted two-qubit gates outside the front"""
        front = set(self.front)
        picked = []
        for i in range(self.cursor, len(self.gates)):
            if len(picked) >= limit:
                break
            if not self.done[i] and i not in front and self.gates[i].is_two_qubit:
                picked.append(i)
        return picked


def _hop_toward(graph, dist, source, target):
    """Edge from source to its lowest-index neighbour on a shortest path to target"""
    step = min(x for x in graph.neighbors(source) if dist[x, target] == dist[source, target] - 1)
    return tuple(sorted((source, step)))


def route(circuit, cmap, initial_layout=None, seed=0):
    """
    Insert SWAPs so every two-qubit gate acts on a map edge

    The lowest-index executable front gate is emitted first. When the whole
    front is blocked, the SWAP on an edge touching a front operand that
    minimizes sum_front d + 0.5 * sum_lookahead d is inserted (ties to the
    lowest edge index), but only if it strictly lowers that cost; undoing the
    previous SWAP is never a candidate. Otherwise the oldest blocked gate's
    first operand (second, if that hop would undo the previous SWAP) moves
    one hop along a shortest path. After 3 * n_physical
    such forced hops without an executed gate, only forced hops are taken
    until that gate executes.

    Args:
        circuit: Decomposed Circuit with n_qubits <= map size
        cmap: CouplingMap
        initial_layout: Optional Layout or logical -> physical sequence
        seed: Seeds the initial layout when none is given (0 = identity)

    Returns:
        RoutedCircuit over cmap.n_qubits physical qubits
    """
    n_physical = cmap.n_qubits
    if circuit.n_qubits > n_physical:
        raise CapacityError(f"circuit needs {circuit.n_qubits} qubits, map has {n_physical}")
    if not circuit.is_decomposed():
        raise ConfigurationError("route() takes circuits decomposed to {1q, CX}")

    layout = _initial_layout(n_physical, initial_layout, seed)
    dist = distance_matrix(cmap)
    graph = cmap.to_networkx()
    edges = cmap.edges

    l2p = list(layout.physical)
    p2l = list(layout.inverse())
    dag = _DependencyTracker(circuit.gates, n_physical)

    routed = []
    swaps = 0
    stalled = 0
    last_swap = None
    escape_after = ESCAPE_FACTOR * n_physical

    def executable(i):
        gate = circuit.gates[i]
        if not gate.is_two_qubit:
            return True
        a, b = gate.qubits
        return dist[l2p[a], l2p[b]] == 1

    def apply_swap(p1, p2):
        l1, l2 = p2l[p1], p2l[p2]
        p2l[p1], p2l[p2] = l2, l1
        l2p[l1], l2p[l2] = p2, p1
        routed.append(Gate("SWAP", (p1, p2)))

    def cost(front, ahead, p1=None, p2=None):
        swap = {p1: p2, p2: p1} if p1 is not None else {}

        def where(l):
            p = l2p[l]
            return swap.get(p, p)

        total = 0.0
        for i in front:
            a, b = circuit.gates[i].qubits
            total += dist[where(a), where(b)]
        extra = 0.0
        for i in ahead:
            a, b = circuit.gates[i].qubits
            extra += dist[where(a), where(b)]
        return total + LOOKAHEAD_WEIGHT * extra

    while dag.front:
        ready = next((i for i in dag.front if executable(i)), None)
        if ready is not None:
            routed.append(circuit.gates[ready].remapped(l2p))
            dag.retire(ready)
            stalled = 0
            last_swap = None
            continue

        front = list(dag.front)
        best = None
        if stalled < escape_after:
            ahead = dag.lookahead(LOOKAHEAD_GATES)
            touched = {l2p[q] for i in front for q in circuit.gates[i].qubits}
            best_cost = cost(front, ahead)
            for p1, p2 in edges:
                if (p1, p2) == last_swap or (p1 not in touched and p2 not in touched):
                    continue
                candidate = cost(front, ahead, p1, p2)
                if candidate < best_cost:
                    best, best_cost = (p1, p2), candidate

        if best is None:
            # no strict improvement: move an operand of the oldest blocked gate one hop closer
            a, b = circuit.gates[front[0]].qubits
            best = _hop_toward(graph, dist, l2p[a], l2p[b])
            if best == last_swap:
                best = _hop_toward(graph, dist, l2p[b], l2p[a])
            stalled += 1

        apply_swap(*best)
        last_swap = best
        swaps += 1

    return RoutedCircuit(
        circuit=Circuit(n_physical, tuple(routed)),
        initial_layout=layout,
        final_layout=Layout(tuple(l2p)),
        swaps_inserted=swaps
    )

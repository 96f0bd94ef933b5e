"""
ASAP depth scheduling with optional coupler contention
"""
from collections import defaultdict

from routing.router import RoutedCircuit


def schedule_layers(circuit, cmap, coupler_contention=False, two_qubit_only=False):
    """
    Layer index of every scheduled gate

    A gate lands in the first layer after the last gate on any of its
    qubits. With coupler_contention, a two-qubit gate on a clustered edge
    also skips layers where its cluster already hosts a two-qubit gate.

    Args:
        circuit: Circuit over the map's physical qubits
        cmap: CouplingMap
        coupler_contention: Enforce one two-qubit gate per cluster per layer
        two_qubit_only: Ignore single-qubit gates

    Returns:
        List of layer indices (None for skipped gates)
    """
    cluster_of = cmap.cluster_of_edge() if coupler_contention else {}
    next_free = [0] * circuit.n_qubits
    busy_clusters = defaultdict(set)
    layers = []

    for gate in circuit.gates:
        if two_qubit_only and not gate.is_two_qubit:
            layers.append(None)
            continue

        layer = max(next_free[q] for q in gate.qubits)
        cluster = None
        if gate.is_two_qubit:
            u, v = gate.qubits
            cluster = cluster_of.get((u, v) if u < v else (v, u))
        if cluster is not None:
            while layer in busy_clusters[cluster]:
                layer += 1
            busy_clusters[cluster].add(layer)

        for q in gate.qubits:
            next_free[q] = layer + 1
        layers.append(layer)
    return layers


def schedule_depth(routed, cmap, coupler_contention=False, two_qubit_only=False):
    """
    Number of ASAP layers of a routed circuit

    Args:
        routed: RoutedCircuit or Circuit
        cmap: CouplingMap the circuit was routed onto
        coupler_contention: Serialize two-qubit gates sharing a coupler
        two_qubit_only: Count two-qubit layers only

    Returns:
        Depth (int)
    """
    circuit = routed.circuit if isinstance(routed, RoutedCircuit) else routed
    layers = [l for l in schedule_layers(circuit, cmap, coupler_contention, two_qubit_only) if l is not None]
    return max(layers) + 1 if layers else 0

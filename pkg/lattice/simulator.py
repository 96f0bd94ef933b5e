"""
Dense statevector / unitary simulator for verification

Qubit q lives on tensor axis n - 1 - q, so flattening the C-ordered
tensor gives little-endian basis indices.
"""
import numpy as np

from lattice.circuit import MCX
from utils.errors import ConfigurationError, ResourceLimitError


MAX_STATEVECTOR_QUBITS = 20
MAX_UNITARY_QUBITS = 8

_SQRT_HALF = 1.0 / np.sqrt(2.0)

SINGLE_QUBIT_MATRICES = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT_HALF,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "T": np.diag([1.0, np.exp(1j * np.pi / 4)]),
    "Tdg": np.diag([1.0, np.exp(-1j * np.pi / 4)]),
}

# Basis order |first operand, second operand>, first operand most significant
TWO_QUBIT_MATRICES = {
    "CX": np.array([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ], dtype=complex),
    "SWAP": np.array([
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ], dtype=complex),
}


def rz_matrix(theta):
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def gate_matrix(gate):
    """Dense matrix of a 1q or 2q gate"""
    if gate.kind == "RZ":
        return rz_matrix(gate.theta)
    if gate.kind in SINGLE_QUBIT_MATRICES:
        return SINGLE_QUBIT_MATRICES[gate.kind]
    return TWO_QUBIT_MATRICES[gate.kind]


def _axis(qubit, n_qubits):
    return n_qubits - 1 - qubit


def _apply_single(state, matrix, qubit, n_qubits):
    axis = _axis(qubit, n_qubits)
    state = np.tensordot(matrix, state, axes=([1], [axis]))
    return np.moveaxis(state, 0, axis)


def _apply_two(state, matrix, qubits, n_qubits):
    axes = [_axis(q, n_qubits) for q in qubits]
    tensor = matrix.reshape(2, 2, 2, 2)
    state = np.tensordot(tensor, state, axes=([2, 3], axes))
    return np.moveaxis(state, [0, 1], axes)


def _apply_mcx(state, qubits, n_qubits):
    *controls, target = qubits
    index = [slice(None)] * state.ndim
    for c in controls:
        index[_axis(c, n_qubits)] = 1
    low, high = list(index), list(index)
    low[_axis(target, n_qubits)] = 0
    high[_axis(target, n_qubits)] = 1
    state = state.copy()
    flipped = state[tuple(high)].copy()
    state[tuple(high)] = state[tuple(low)]
    state[tuple(low)] = flipped
    return state


def apply_gate(state, gate, n_qubits):
    """
    Apply one gate to a (2,)*n tensor, optionally with extra trailing batch axes
    """
    if gate.kind == MCX:
        return _apply_mcx(state, gate.qubits, n_qubits)
    if gate.is_two_qubit:
        return _apply_two(state, gate_matrix(gate), gate.qubits, n_qubits)
    return _apply_single(state, gate_matrix(gate), gate.qubits[0], n_qubits)


def _run(circuit, state):
    for gate in circuit.gates:
        state = apply_gate(state, gate, circuit.n_qubits)
    return state


def simulate_statevector(circuit, initial=None):
    """
    Final state of a circuit

    Args:
        circuit: Circuit
        initial: Optional starting basis index or statevector (default |0...0>)

    Returns:
        Complex vector of length 2**n, little-endian
    """
    n = circuit.n_qubits
    if n > MAX_STATEVECTOR_QUBITS:
        raise ResourceLimitError(f"statevector simulation capped at {MAX_STATEVECTOR_QUBITS} qubits, got {n}")

    dim = 2 ** n
    if initial is None or np.isscalar(initial):
        state = np.zeros(dim, dtype=complex)
        state[int(initial or 0)] = 1.0
    else:
        state = np.asarray(initial, dtype=complex).copy()
        if state.shape != (dim,):
            raise ConfigurationError(f"initial state must have length {dim}")
    return _run(circuit, state.reshape((2,) * n)).reshape(dim)


def unitary_of(circuit):
    """
    Full unitary, column j = final state from basis state |j>

    Args:
        circuit: Circuit on at most 8 qubits

    Returns:
        2**n x 2**n complex matrix
    """
    n = circuit.n_qubits
    if n > MAX_UNITARY_QUBITS:
        raise ResourceLimitError(f"unitary construction capped at {MAX_UNITARY_QUBITS} qubits, got {n}")

    dim = 2 ** n
    batch = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
    return _run(circuit, batch).reshape(dim, dim)

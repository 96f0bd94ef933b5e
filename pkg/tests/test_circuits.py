"""
Tests for gates, the statevector simulator, MCX decompositions and Grover circuits
"""
import numpy as np
import pytest

from lattice.circuit import SINGLE_QUBIT_KINDS, Circuit, Gate
from lattice.grover import (
    default_iterations,
    expand_mcx,
    grover_circuit,
    mcx_decompose,
    success_probability,
)
from lattice.simulator import simulate_statevector, unitary_of
from utils.errors import ConfigurationError, ResourceLimitError


def random_circuit(rng, n_qubits, n_gates):
    gates = []
    for _ in range(n_gates):
        choice = rng.integers(0, 4)
        if choice == 0 and n_qubits >= 2:
            a, b = rng.choice(n_qubits, size=2, replace=False)
            gates.append(Gate(str(rng.choice(["CX", "SWAP"])), (int(a), int(b))))
        elif choice == 1:
            gates.append(Gate("RZ", (int(rng.integers(n_qubits)),), float(rng.uniform(-np.pi, np.pi))))
        else:
            kind = str(rng.choice(["H", "X", "Z", "T", "Tdg"]))
            gates.append(Gate(kind, (int(rng.integers(n_qubits)),)))
    return Circuit(n_qubits, tuple(gates))


def assert_equal_up_to_phase(actual, expected, atol=1e-9):
    pivot = np.unravel_index(np.argmax(np.abs(expected)), expected.shape)
    phase = actual[pivot] / expected[pivot]
    assert abs(abs(phase) - 1.0) < atol
    np.testing.assert_allclose(actual, phase * expected, atol=atol)


class TestGate:
    def test_arity_checked(self):
        with pytest.raises(ConfigurationError):
            Gate("CX", (0,))

    def test_distinct_operands(self):
        with pytest.raises(ConfigurationError):
            Gate("CX", (1, 1))

    def test_rz_needs_angle(self):
        with pytest.raises(ConfigurationError):
            Gate("RZ", (0,))

    def test_unknown_kind(self):
        with pytest.raises(ConfigurationError):
            Gate("CCZ", (0, 1, 2))

    def test_out_of_register(self):
        with pytest.raises(ConfigurationError):
            Circuit(2, (Gate("H", (2,)),))

    def test_document_round_trip(self):
        circuit = Circuit(3, (Gate("H", (0,)), Gate("RZ", (1,), 0.25), Gate("MCX", (0, 1, 2))))
        assert Circuit.from_dict(circuit.to_dict()) == circuit


class TestSimulator:
    def test_empty_circuit(self):
        state = simulate_statevector(Circuit(3))
        expected = np.zeros(8)
        expected[0] = 1.0
        np.testing.assert_allclose(state, expected)

    def test_hadamard(self):
        state = simulate_statevector(Circuit(1, (Gate("H", (0,)),)))
        np.testing.assert_allclose(state, [1 / np.sqrt(2), 1 / np.sqrt(2)])

    def test_little_endian(self):
        assert np.argmax(np.abs(simulate_statevector(Circuit(3, (Gate("X", (0,)),))))) == 1
        assert np.argmax(np.abs(simulate_statevector(Circuit(3, (Gate("X", (2,)),))))) == 4

    def test_cx_permutation(self):
        U = unitary_of(Circuit(2, (Gate("CX", (0, 1)),)))
        expected = np.zeros((4, 4))
        expected[0, 0] = expected[2, 2] = 1.0
        expected[3, 1] = expected[1, 3] = 1.0
        np.testing.assert_allclose(U, expected)

    def test_swap_permutation(self):
        U = unitary_of(Circuit(2, (Gate("SWAP", (0, 1)),)))
        expected = np.zeros((4, 4))
        expected[0, 0] = expected[3, 3] = 1.0
        expected[1, 2] = expected[2, 1] = 1.0
        np.testing.assert_allclose(U, expected)

    def test_unitary_columns_are_statevectors(self):
        circuit = random_circuit(np.random.default_rng(3), 3, 15)
        U = unitary_of(circuit)
        for j in range(8):
            np.testing.assert_allclose(U[:, j], simulate_statevector(circuit, j), atol=1e-12)

    @pytest.mark.parametrize("seed", range(5))
    def test_circuit_then_inverse(self, seed):
        circuit = random_circuit(np.random.default_rng(seed), 4, 30)
        U = unitary_of(circuit.extended(circuit.inverse().gates))
        np.testing.assert_allclose(U, np.eye(16), atol=1e-9)

    @pytest.mark.slow
    def test_norm_preserved(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            n = int(rng.integers(1, 6))
            state = simulate_statevector(random_circuit(rng, n, 20))
            assert abs(np.linalg.norm(state) - 1.0) < 1e-10

    def test_mcx_marker(self):
        state = simulate_statevector(Circuit(3, (Gate("MCX", (0, 1, 2)),)), initial=0b011)
        assert abs(state[0b111]) == pytest.approx(1.0)

    def test_unitary_size_guard(self):
        with pytest.raises(ResourceLimitError):
            unitary_of(Circuit(9))

    def test_initial_state_shape(self):
        with pytest.raises(ConfigurationError):
            simulate_statevector(Circuit(2), initial=np.ones(3))


class TestMCXDecompose:
    def test_single_control(self):
        assert mcx_decompose(1) == [Gate("CX", (0, 1))]

    @pytest.mark.parametrize("n_controls", [2, 3, 4, 5, 6])
    def test_matches_ideal_mcx(self, n_controls):
        n = n_controls + 1
        ideal = unitary_of(Circuit(n, (Gate("MCX", tuple(range(n))),)))
        ours = unitary_of(Circuit(n, tuple(mcx_decompose(n_controls))))
        assert_equal_up_to_phase(ours, ideal)

    def test_toffoli_is_exact(self):
        ideal = unitary_of(Circuit(3, (Gate("MCX", (0, 1, 2)),)))
        ours = unitary_of(Circuit(3, tuple(mcx_decompose(2))))
        np.testing.assert_allclose(ours, ideal, atol=1e-9)

    @pytest.mark.parametrize("n_controls", [3, 4, 5])
    def test_cx_count(self, n_controls):
        gates = mcx_decompose(n_controls)
        assert sum(1 for g in gates if g.kind == "CX") == 2 ** (n_controls + 1) - 2

    def test_custom_wires(self):
        ideal = unitary_of(Circuit(4, (Gate("MCX", (3, 1, 0)),)))
        ours = unitary_of(Circuit(4, tuple(mcx_decompose(2, controls=(3, 1), target=0))))
        np.testing.assert_allclose(ours, ideal, atol=1e-9)

    def test_expand_mcx(self):
        marked = Circuit(4, (Gate("H", (0,)), Gate("MCX", (0, 1, 2, 3))))
        expanded = expand_mcx(marked)
        assert expanded.is_decomposed()
        assert_equal_up_to_phase(unitary_of(expanded), unitary_of(marked))

    @pytest.mark.parametrize("n_controls", [0, 10])
    def test_range(self, n_controls):
        with pytest.raises(ConfigurationError):
            mcx_decompose(n_controls)


class TestGrover:
    def test_two_qubits_certain(self):
        state = simulate_statevector(grover_circuit(2, "11", 1))
        assert abs(state[3]) ** 2 == pytest.approx(1.0, abs=1e-9)

    def test_three_qubits(self):
        state = simulate_statevector(grover_circuit(3, "101", 2))
        assert abs(state[0b101]) ** 2 == pytest.approx(0.9453, abs=1e-3)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_zero_iterations_is_uniform(self, n):
        state = simulate_statevector(grover_circuit(n, iterations=0))
        np.testing.assert_allclose(np.abs(state) ** 2, 2.0 ** -n, atol=1e-12)

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("k", range(0, 5))
    def test_matches_analytic_success(self, n, k):
        state = simulate_statevector(grover_circuit(n, iterations=k))
        assert abs(state[2 ** n - 1]) ** 2 == pytest.approx(success_probability(n, k), abs=1e-6)

    def test_decomposed_gate_set(self):
        for n in range(2, 7):
            kinds = set(grover_circuit(n).count_ops())
            assert kinds <= set(SINGLE_QUBIT_KINDS) | {"CX"}

    def test_default_iterations(self):
        assert [default_iterations(n) for n in range(2, 7)] == [1, 2, 3, 4, 6]

    def test_marked_bitstring_checked(self):
        with pytest.raises(ConfigurationError):
            grover_circuit(3, "12")

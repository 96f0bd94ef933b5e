"""
Routed-circuit checks: edge validity and unitary equivalence
"""
from dataclasses import dataclass

import numpy as np

from lattice.simulator import MAX_UNITARY_QUBITS, simulate_statevector, unitary_of
from utils.errors import VerificationError
from utils.seeding import substream


EQUIVALENCE_TOLERANCE = 1e-9
STATEVECTOR_SAMPLES = 50


@dataclass(frozen=True)
class VerificationResult:
    passed: bool
    max_deviation: float
    method: str

    def to_dict(self):
        return {"passed": self.passed, "max_deviation": self.max_deviation, "method": self.method}


def check_on_map(routed, cmap):
    """Raise VerificationError for the first two-qubit gate off the map's edges"""
    for position, gate in enumerate(routed.circuit.gates):
        if gate.is_two_qubit and not cmap.has_edge(*gate.qubits):
            raise VerificationError(
                f"gate {position} {gate.kind}{gate.qubits} is not on a {cmap.name} map edge"
            )


def _physical_indices(layout, n_qubits):
    """Physical basis index for every logical basis index"""
    logical = np.arange(2 ** n_qubits)
    physical = np.zeros_like(logical)
    for l in range(n_qubits):
        physical |= ((logical >> l) & 1) << layout[l]
    return physical


def _phase_aligned_deviation(actual, expected):
    pivot = np.unravel_index(np.argmax(np.abs(expected)), expected.shape)
    phase = actual[pivot] / expected[pivot]
    phase = phase / abs(phase) if abs(phase) > 0 else 1.0
    return float(np.max(np.abs(actual - phase * expected)))


def verify_routed(original, routed, tolerance=EQUIVALENCE_TOLERANCE, seed=0):
    """
    Check U_routed = P_final U_original P_initial^-1 up to global phase

    Up to 8 physical qubits the full unitaries are compared; beyond that,
    50 random basis states drawn from the "verify" sub-stream.

    Args:
        original: Logical Circuit
        routed: RoutedCircuit
        tolerance: Max element deviation
        seed: Run seed for the sampled fallback

    Returns:
        VerificationResult
    """
    n = routed.circuit.n_qubits
    padded = original.widened(n)
    initial = _physical_indices(routed.initial_layout, n)
    final = _physical_indices(routed.final_layout, n)

    if n <= MAX_UNITARY_QUBITS:
        u_original = unitary_of(padded)
        expected = np.zeros_like(u_original)
        expected[np.ix_(final, initial)] = u_original
        deviation = _phase_aligned_deviation(unitary_of(routed.circuit), expected)
        return VerificationResult(deviation <= tolerance, deviation, "unitary")

    rng = substream(seed, "verify")
    samples = rng.integers(0, 2 ** n, size=STATEVECTOR_SAMPLES)
    deviation = 0.0
    phase = None
    for x in samples:
        logical_out = simulate_statevector(padded, int(x))
        expected = np.zeros_like(logical_out)
        expected[final] = logical_out
        actual = simulate_statevector(routed.circuit, int(initial[x]))
        if phase is None:
            pivot = int(np.argmax(np.abs(expected)))
            phase = actual[pivot] / expected[pivot]
            phase = phase / abs(phase) if abs(phase) > 0 else 1.0
        deviation = max(deviation, float(np.max(np.abs(actual - phase * expected))))
    return VerificationResult(deviation <= tolerance, deviation, "statevector")

"""
Grover search circuits and ancilla-free multi-controlled X
"""
import math

from lattice.circuit import MCX, Circuit, Gate
from utils.errors import ConfigurationError


MAX_CONTROLS = 9
MIN_GROVER_QUBITS = 2
MAX_GROVER_QUBITS = 10


def _toffoli(c1, c2, target):
    return [
        Gate("H", (target,)),
        Gate("CX", (c2, target)),
        Gate("Tdg", (target,)),
        Gate("CX", (c1, target)),
        Gate("T", (target,)),
        Gate("CX", (c2, target)),
        Gate("Tdg", (target,)),
        Gate("CX", (c1, target)),
        Gate("T", (c2,)),
        Gate("T", (target,)),
        Gate("H", (target,)),
        Gate("CX", (c1, c2)),
        Gate("T", (c1,)),
        Gate("Tdg", (c2,)),
        Gate("CX", (c1, c2)),
    ]


def _gray_flip(k):
    """Bit that changes between Gray codes k-1 and k"""
    return (k & -k).bit_length() - 1


def phase_polynomial_mcz(qubits):
    """
    Multi-controlled Z on `qubits` as a CX + RZ phase polynomial

    The phase pi * x_0 x_1 ... x_{m-1} expands over the parities of every
    nonempty subset S with weight pi (-1)^(|S|-1) / 2^(m-1). Subsets are
    grouped by their highest member, the anchor, and the anchor wire walks
    through the parities of the lower wires in Gray-code order. Exact up to
    a global phase; uses 2^m - 2 CX.

    Args:
        qubits: Wires, m >= 2

    Returns:
        List of Gate
    """
    m = len(qubits)
    scale = math.pi / 2 ** (m - 1)

    def weight(size):
        return scale if size % 2 == 1 else -scale

    gates = []
    for t, anchor in enumerate(qubits):
        gates.append(Gate("RZ", (anchor,), weight(1)))
        if t == 0:
            continue
        subset = 0
        for k in range(1, 2 ** t):
            j = _gray_flip(k)
            subset ^= 1 << j
            gates.append(Gate("CX", (qubits[j], anchor)))
            gates.append(Gate("RZ", (anchor,), weight(1 + bin(subset).count("1"))))
        # Gray sequence ends on the top bit alone
        gates.append(Gate("CX", (qubits[t - 1], anchor)))
    return gates


def mcx_decompose(n_controls, controls=None, target=None):
    """
    Ancilla-free multi-controlled X over {1q, CX}

    Args:
        n_controls: Number of controls (1..9)
        controls: Control wires (default 0..n_controls-1)
        target: Target wire (default n_controls)

    Returns:
        List of Gate; unitary equals MCX up to a global phase
    """
    if not 1 <= n_controls <= MAX_CONTROLS:
        raise ConfigurationError(f"n_controls must be in 1..{MAX_CONTROLS}, got {n_controls}")
    controls = tuple(range(n_controls)) if controls is None else tuple(controls)
    target = n_controls if target is None else target
    if len(controls) != n_controls:
        raise ConfigurationError(f"expected {n_controls} controls, got {len(controls)}")

    if n_controls == 1:
        return [Gate("CX", (controls[0], target))]
    if n_controls == 2:
        return _toffoli(controls[0], controls[1], target)

    return (
        [Gate("H", (target,))]
        + phase_polynomial_mcz(controls + (target,))
        + [Gate("H", (target,))]
    )


def expand_mcx(circuit):
    """Replace every MCX marker with its {1q, CX} decomposition"""
    gates = []
    for gate in circuit.gates:
        if gate.kind == MCX:
            *controls, target = gate.qubits
            gates += mcx_decompose(len(controls), controls, target)
        else:
            gates.append(gate)
    return Circuit(circuit.n_qubits, tuple(gates))


def _mcz(n_qubits):
    target = n_qubits - 1
    controls = tuple(range(target))
    return [Gate("H", (target,))] + mcx_decompose(len(controls), controls, target) + [Gate("H", (target,))]


def default_iterations(n_qubits):
    """floor(pi / 4 * sqrt(2^n))"""
    return int(math.floor(math.pi / 4.0 * math.sqrt(2 ** n_qubits)))


def grover_circuit(n_qubits, marked=None, iterations=None):
    """
    Grover search for one marked basis state

    Args:
        n_qubits: Problem size (2..10)
        marked: Bitstring, most significant (qubit n-1) first; default all ones
        iterations: Oracle + diffusion rounds (default floor(pi/4 sqrt(2^n)))

    Returns:
        Circuit over {1q, CX}
    """
    if not MIN_GROVER_QUBITS <= n_qubits <= MAX_GROVER_QUBITS:
        raise ConfigurationError(f"Grover size must be in {MIN_GROVER_QUBITS}..{MAX_GROVER_QUBITS}, got {n_qubits}")
    marked = "1" * n_qubits if marked is None else str(marked)
    if len(marked) != n_qubits or set(marked) - {"0", "1"}:
        raise ConfigurationError(f"marked must be a {n_qubits}-character bitstring, got {marked!r}")
    if iterations is None:
        iterations = default_iterations(n_qubits)
    if iterations < 0:
        raise ConfigurationError("iterations must be non-negative")

    everyone = range(n_qubits)
    zeros = [q for q in everyone if marked[n_qubits - 1 - q] == "0"]
    mcz = _mcz(n_qubits)

    gates = [Gate("H", (q,)) for q in everyone]
    for _ in range(iterations):
        # oracle
        gates += [Gate("X", (q,)) for q in zeros]
        gates += mcz
        gates += [Gate("X", (q,)) for q in zeros]
        # diffusion
        gates += [Gate("H", (q,)) for q in everyone]
        gates += [Gate("X", (q,)) for q in everyone]
        gates += mcz
        gates += [Gate("X", (q,)) for q in everyone]
        gates += [Gate("H", (q,)) for q in everyone]
    return Circuit(n_qubits, tuple(gates))


def success_probability(n_qubits, iterations):
    """Analytic sin^2((2k+1) asin(2^(-n/2)))"""
    theta = math.asin(2 ** (-n_qubits / 2.0))
    return math.sin((2 * iterations + 1) * theta) ** 2

"""
Gate-list circuits over {1q, CX, SWAP} plus a pre-decomposition MCX marker

Qubit ordering is little-endian: qubit 0 is the least significant bit of a
basis-state index.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Tuple

from utils.errors import ConfigurationError


SINGLE_QUBIT_KINDS = ("H", "X", "Z", "T", "Tdg", "RZ")
TWO_QUBIT_KINDS = ("CX", "SWAP")
MCX = "MCX"
ALL_KINDS = SINGLE_QUBIT_KINDS + TWO_QUBIT_KINDS + (MCX,)

_SELF_INVERSE = {"H", "X", "Z", "CX", "SWAP", MCX}
_INVERSE_KIND = {"T": "Tdg", "Tdg": "T"}


@dataclass(frozen=True)
class Gate:
    """
    One operation. For CX the operands are (control, target); for MCX the
    last operand is the target and the rest are controls.
    """

    kind: str
    qubits: Tuple[int, ...]
    theta: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if self.kind not in ALL_KINDS:
            raise ConfigurationError(f"unknown gate kind {self.kind!r}")
        arity = len(self.qubits)
        if self.kind in SINGLE_QUBIT_KINDS and arity != 1:
            raise ConfigurationError(f"{self.kind} takes 1 qubit, got {arity}")
        if self.kind in TWO_QUBIT_KINDS and arity != 2:
            raise ConfigurationError(f"{self.kind} takes 2 qubits, got {arity}")
        if self.kind == MCX and arity < 2:
            raise ConfigurationError("MCX needs at least one control and a target")
        if len(set(self.qubits)) != arity:
            raise ConfigurationError(f"{self.kind} operands must be distinct: {self.qubits}")
        if (self.kind == "RZ") != (self.theta is not None):
            raise ConfigurationError("theta is required for RZ and only for RZ")

    @property
    def is_two_qubit(self):
        return len(self.qubits) == 2

    def inverse(self):
        if self.kind in _SELF_INVERSE:
            return self
        if self.kind == "RZ":
            return Gate("RZ", self.qubits, -self.theta)
        return Gate(_INVERSE_KIND[self.kind], self.qubits)

    def remapped(self, mapping):
        """Same gate with operand q replaced by mapping[q]"""
        return Gate(self.kind, tuple(mapping[q] for q in self.qubits), self.theta)

    def to_dict(self):
        payload = {"kind": self.kind, "qubits": list(self.qubits)}
        if self.theta is not None:
            payload["theta"] = self.theta
        return payload

    @classmethod
    def from_dict(cls, payload):
        try:
            return cls(payload["kind"], tuple(payload["qubits"]), payload.get("theta"))
        except (KeyError, TypeError) as e:
            raise ConfigurationError(f"malformed gate entry {payload!r}") from e


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list on n_qubits wires"""

    n_qubits: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n_qubits < 1:
            raise ConfigurationError("a circuit needs at least one qubit")
        for gate in self.gates:
            if max(gate.qubits) >= self.n_qubits or min(gate.qubits) < 0:
                raise ConfigurationError(f"{gate.kind}{gate.qubits} outside {self.n_qubits}-qubit circuit")

    def __len__(self):
        return len(self.gates)

    def extended(self, gates):
        return Circuit(self.n_qubits, self.gates + tuple(gates))

    def widened(self, n_qubits):
        """Same gates on a register of n_qubits >= current width"""
        if n_qubits < self.n_qubits:
            raise ConfigurationError(f"cannot narrow {self.n_qubits} qubits to {n_qubits}")
        return Circuit(n_qubits, self.gates)

    def inverse(self):
        return Circuit(self.n_qubits, tuple(g.inverse() for g in reversed(self.gates)))

    def count_ops(self):
        return dict(Counter(g.kind for g in self.gates))

    def two_qubit_gates(self):
        return [g for g in self.gates if g.is_two_qubit]

    def is_decomposed(self):
        """True when no MCX markers remain"""
        return all(g.kind != MCX for g in self.gates)

    def to_dict(self):
        return {"n": self.n_qubits, "gates": [g.to_dict() for g in self.gates]}

    @classmethod
    def from_dict(cls, payload):
        try:
            n = int(payload["n"])
            gates = [Gate.from_dict(g) for g in payload.get("gates", [])]
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ConfigurationError):
                raise
            raise ConfigurationError(f"malformed circuit document: {e}") from e
        return cls(n, tuple(gates))

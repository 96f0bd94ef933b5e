"""
Error types for zz-lattice
Every error carries the process exit code the command layer reports
"""


class ZZLatticeError(Exception):
    """Base class for all zz-lattice errors"""

    exit_code = 1


# ============== Configuration (exit 1) ==============

class ConfigurationError(ZZLatticeError, ValueError):
    """Invalid parameters, schema violations, or inconsistent specs"""

    exit_code = 1


class ConfigParseError(ConfigurationError):
    """Malformed JSON or a document field that does not fit the schema"""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class InvalidTruncationError(ConfigurationError):
    """Fock truncation below two levels"""


class CapacityError(ConfigurationError):
    """Circuit needs more qubits than the coupling map offers"""


class ResourceLimitError(ConfigurationError):
    """Simulation request exceeds the memory guard"""


class DisconnectedMapError(ConfigurationError):
    """Coupling map graph is not connected"""


# ============== Physics (exit 2) ==============

class PhysicsError(ZZLatticeError):
    """Numerical or physical breakdown of a calculation"""

    exit_code = 2


class LabelingAmbiguous(PhysicsError):
    """A computational bare state has no dressed partner with overlap above 0.5"""

    def __init__(self, label, overlap):
        self.label = tuple(int(d) for d in label)
        self.overlap = float(overlap)
        digits = "".join(str(d) for d in self.label)
        super().__init__(f"bare state |{digits}> best overlap {self.overlap:.4f} <= 0.5")


class NonHermitianError(PhysicsError):
    """Matrix handed to the eigensolver is not Hermitian"""

    def __init__(self, deviation):
        self.deviation = float(deviation)
        super().__init__(f"max |H - H^dagger| = {self.deviation:.3e} exceeds 1e-12")


class EmptySweepError(PhysicsError):
    """Every point of a sweep failed"""


class ResonantDriveError(ZeroDivisionError):
    """Drive detuning of zero: the Stark model does not apply"""

    exit_code = 2


# ============== Verification (exit 3) ==============

class VerificationError(ZZLatticeError):
    """Routed circuit is off-map or not equivalent to its source"""

    exit_code = 3


def exit_code_for(error):
    """
    Map an exception to the command-line exit code

    Args:
        error: Raised exception

    Returns:
        Integer exit code (1 validation, 2 physics, 3 verification)
    """
    return getattr(error, "exit_code", 1)

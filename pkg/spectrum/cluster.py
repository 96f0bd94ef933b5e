"""
Cluster specification models
Physical parameters of one coupler cluster: transmons, coupler, couplings, drives

All frequencies are linear (symbol / 2pi) in GHz.
"""
import math
from typing import Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from utils.errors import ConfigurationError


DEFAULT_LEVELS = 3
DEFAULT_COUPLING_GHZ = 0.08
DEFAULT_DRIVE_AMPLITUDE_GHZ = 0.020
DEFAULT_DRIVE_DETUNING_GHZ = 0.1
DEFAULT_COUPLER_ETA_GHZ = -0.2


class TransmonSpec(BaseModel):
    """Fixed-frequency transmon as a Duffing oscillator truncated to `levels` Fock states"""

    model_config = ConfigDict(frozen=True)

    omega: float
    eta: float
    levels: int = DEFAULT_LEVELS

    @field_validator("omega")
    @classmethod
    def _omega_positive(cls, v):
        if not v > 0:
            raise ValueError("omega must be positive")
        return v

    @field_validator("eta")
    @classmethod
    def _eta_negative(cls, v):
        if not v < 0:
            raise ValueError("eta must be negative")
        return v

    @field_validator("levels")
    @classmethod
    def _levels_at_least_two(cls, v):
        if v < 2:
            raise ValueError("levels must be at least 2")
        return v


def squid_dispersion(omega_c_max, flux):
    """
    Symmetric-SQUID transmon frequency: omega_max * sqrt(|cos(pi * flux)|)

    Args:
        omega_c_max: Sweet-spot frequency (GHz)
        flux: Reduced flux Phi / Phi_0

    Returns:
        Coupler frequency (GHz)
    """
    return omega_c_max * math.sqrt(abs(math.cos(math.pi * flux)))


class CouplerSpec(BaseModel):
    """Flux-tunable transmon coupler"""

    model_config = ConfigDict(frozen=True)

    omega_c: float
    eta_c: float = DEFAULT_COUPLER_ETA_GHZ
    omega_c_max: Optional[float] = None
    omega_c_min: Optional[float] = None
    flux: Optional[float] = None

    @field_validator("eta_c")
    @classmethod
    def _eta_negative(cls, v):
        if not v < 0:
            raise ValueError("eta_c must be negative")
        return v

    @model_validator(mode="after")
    def _within_flux_range(self):
        if not self.omega_c > 0:
            raise ValueError("omega_c must be positive")
        if self.omega_c_max is not None and self.omega_c > self.omega_c_max + 1e-12:
            raise ValueError(f"omega_c {self.omega_c} above omega_c_max {self.omega_c_max}")
        if self.omega_c_min is not None and self.omega_c < self.omega_c_min - 1e-12:
            raise ValueError(f"omega_c {self.omega_c} below omega_c_min {self.omega_c_min}")
        return self

    @classmethod
    def from_flux(cls, omega_c_max, flux, eta_c=DEFAULT_COUPLER_ETA_GHZ, omega_c_min=None):
        """Coupler biased at `flux` on the SQUID dispersion"""
        return cls(
            omega_c=squid_dispersion(omega_c_max, flux),
            eta_c=eta_c,
            omega_c_max=omega_c_max,
            omega_c_min=omega_c_min,
            flux=flux
        )


class DriveSpec(BaseModel):
    """Off-resonant monochromatic drive on one transmon"""

    model_config = ConfigDict(frozen=True)

    target: int
    amplitude: float
    phase: float = 0.0
    omega_d: float

    @field_validator("amplitude")
    @classmethod
    def _amplitude_non_negative(cls, v):
        if v < 0:
            raise ValueError("amplitude must be non-negative")
        return v

    @field_validator("omega_d")
    @classmethod
    def _omega_d_positive(cls, v):
        if not v > 0:
            raise ValueError("omega_d must be positive")
        return v

    @property
    def epsilon(self):
        """Complex drive amplitude |eps| * exp(i * phase)"""
        return self.amplitude * np.exp(1j * self.phase)


class ClusterSpec(BaseModel):
    """
    One unit cell: 2-4 transmons sharing a single tunable coupler

    Mode ordering everywhere is the qubits in list order, coupler last.
    """

    model_config = ConfigDict(frozen=True)

    qubits: Tuple[TransmonSpec, ...]
    coupler: CouplerSpec
    couplings: Tuple[Tuple[int, float], ...] = ()
    drives: Tuple[DriveSpec, ...] = ()

    @model_validator(mode="after")
    def _check_references(self):
        n = len(self.qubits)
        if not 2 <= n <= 4:
            raise ValueError(f"a cluster holds 2-4 qubits, got {n}")

        seen = set()
        for index, J in self.couplings:
            if not 0 <= index < n:
                raise ValueError(f"coupling references qubit {index}, cluster has {n}")
            if index in seen:
                raise ValueError(f"duplicate coupling for qubit {index}")
            if not J > 0:
                raise ValueError(f"coupling J for qubit {index} must be positive")
            seen.add(index)

        targets = set()
        for drive in self.drives:
            if not 0 <= drive.target < n:
                raise ValueError(f"drive targets qubit {drive.target}, cluster has {n}")
            if drive.target in targets:
                raise ValueError(f"duplicate drive on qubit {drive.target}")
            targets.add(drive.target)
        if len({round(d.omega_d, 12) for d in self.drives}) > 1:
            raise ValueError("all drives must share one omega_d")
        return self

    # ============== Derived quantities ==============

    @property
    def n_qubits(self):
        return len(self.qubits)

    @property
    def n_modes(self):
        return len(self.qubits) + 1

    @property
    def levels(self):
        """Common Fock truncation; raises ConfigurationError when qubits disagree"""
        truncations = {q.levels for q in self.qubits}
        if len(truncations) != 1:
            raise ConfigurationError(f"inconsistent truncation levels {sorted(truncations)}")
        return truncations.pop()

    @property
    def dim(self):
        return self.levels ** self.n_modes

    @property
    def omega_d(self):
        """Shared drive frequency, 0 (lab frame) when undriven"""
        return self.drives[0].omega_d if self.drives else 0.0

    def coupling_of(self, index):
        for i, J in self.couplings:
            if i == index:
                return J
        return 0.0

    def drive_for(self, index):
        for drive in self.drives:
            if drive.target == index:
                return drive
        return None

    def detunings(self):
        """Qubit-coupler detunings Delta_ic = omega_i - omega_c (GHz)"""
        return [q.omega - self.coupler.omega_c for q in self.qubits]

    # ============== Immutable updates ==============

    def _rebuild(self, **changes):
        fields = {
            "qubits": self.qubits,
            "coupler": self.coupler,
            "couplings": self.couplings,
            "drives": self.drives,
        }
        fields.update(changes)
        try:
            return ClusterSpec(**fields)
        except ValueError as e:
            raise ConfigurationError(str(e)) from e

    def with_coupler_frequency(self, omega_c):
        """Same cluster with the coupler set directly to omega_c (flux cleared)"""
        try:
            coupler = CouplerSpec(
                omega_c=omega_c,
                eta_c=self.coupler.eta_c,
                omega_c_max=self.coupler.omega_c_max,
                omega_c_min=self.coupler.omega_c_min
            )
        except ValueError as e:
            raise ConfigurationError(str(e)) from e
        return self._rebuild(coupler=coupler)

    def with_drive(self, target, **changes):
        """Same cluster with one existing drive updated"""
        drive = self.drive_for(target)
        if drive is None:
            raise ConfigurationError(f"no drive on qubit {target}")
        updated = DriveSpec(**{**drive.model_dump(), **changes})
        drives = tuple(updated if d.target == target else d for d in self.drives)
        return self._rebuild(drives=drives)

    def with_drives(self, drives):
        return self._rebuild(drives=tuple(drives))

    def without_drives(self):
        return self._rebuild(drives=())

    def only_drives(self, targets):
        """Keep just the drives on `targets`"""
        keep = set(targets)
        return self._rebuild(drives=tuple(d for d in self.drives if d.target in keep))

    def with_levels(self, levels):
        qubits = tuple(TransmonSpec(omega=q.omega, eta=q.eta, levels=levels) for q in self.qubits)
        return self._rebuild(qubits=qubits)

    def shifted(self, offset):
        """All qubit and coupler frequencies shifted by a common offset"""
        qubits = tuple(TransmonSpec(omega=q.omega + offset, eta=q.eta, levels=q.levels) for q in self.qubits)
        coupler = CouplerSpec(omega_c=self.coupler.omega_c + offset, eta_c=self.coupler.eta_c)
        return self._rebuild(qubits=qubits, coupler=coupler)


def ensure_pair_drives(spec, pair, amplitude=DEFAULT_DRIVE_AMPLITUDE_GHZ, detuning=DEFAULT_DRIVE_DETUNING_GHZ,
                       omega_d=None):
    """
    Add default drives to whichever pair member is undriven

    The shared omega_d comes from an existing drive when there is one,
    then from `omega_d`, otherwise omega_target - detuning with the pair's
    second member as target.

    Args:
        spec: ClusterSpec
        pair: (p, q) qubit indices
        amplitude: Default |eps| (GHz)
        detuning: Default omega_target - omega_d (GHz)
        omega_d: Drive frequency (GHz) for an undriven cluster

    Returns:
        Tuple of (ClusterSpec, dict of applied defaults)
    """
    p, q = pair
    for index in (p, q):
        if not 0 <= index < spec.n_qubits:
            raise IndexError(f"qubit {index} out of range for {spec.n_qubits}-qubit cluster")

    if spec.drives:
        omega_d = spec.omega_d
    elif omega_d is None:
        omega_d = spec.qubits[q].omega - detuning
    defaults: Dict[str, dict] = {}
    drives = list(spec.drives)
    for index in (p, q):
        if spec.drive_for(index) is None:
            drives.append(DriveSpec(target=index, amplitude=amplitude, phase=0.0, omega_d=omega_d))
            defaults[f"drive_q{index}"] = {
                "amp_GHz": amplitude,
                "phase_rad": 0.0,
                "omega_d_GHz": omega_d,
            }
    if not defaults:
        return spec, defaults
    return spec.with_drives(drives), defaults

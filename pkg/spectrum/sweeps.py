"""
Parameter sweeps of the ZZ rate
Relative drive phase, coupler frequency, flux, amplitude and 2D sweet-spot maps
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from spectrum.hamiltonian import flux_to_frequency
from spectrum.zz import check_pair, zz_rate
from utils.batch_processor import BatchProcessor
from utils.errors import ConfigurationError, EmptySweepError, LabelingAmbiguous


STATUS_OK = "ok"
STATUS_AMBIGUOUS = "ambiguous"
STATUS_IN_BAND = "in-band"


@dataclass(frozen=True)
class SweepResult:
    """
    zeta (MHz) over one or two swept controls

    For 2D results zeta[i, j] belongs to (axis1 values[i], axis2 values[j]).
    NaN marks a gap; `status` says why.
    """

    axis1: Tuple[str, np.ndarray]
    zeta: np.ndarray
    status: np.ndarray
    axis2: Optional[Tuple[str, np.ndarray]] = None
    zero_crossings: List = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.zeta.flags.writeable = False
        self.status.flags.writeable = False

    @property
    def label_ok(self):
        return self.status == STATUS_OK

    @property
    def is_2d(self):
        return self.axis2 is not None

    @property
    def header(self):
        names = [self.axis1[0]] + ([self.axis2[0]] if self.is_2d else [])
        return names + ["zeta_MHz", "label_ok"]

    def to_rows(self):
        """CSV rows in axis order (axis2 fastest for 2D)"""
        values1 = self.axis1[1]
        if not self.is_2d:
            return [
                [values1[i], self.zeta[i], bool(self.label_ok[i])]
                for i in range(len(values1))
            ]
        values2 = self.axis2[1]
        ok = self.label_ok
        return [
            [values1[i], values2[j], self.zeta[i, j], bool(ok[i, j])]
            for i in range(len(values1))
            for j in range(len(values2))
        ]

    def to_dict(self):
        payload = {
            "axis1": {"name": self.axis1[0], "values": self.axis1[1]},
            "zeta_MHz": self.zeta,
            "status": self.status,
            "zero_crossings": self.zero_crossings,
            "metadata": self.metadata,
        }
        if self.is_2d:
            payload["axis2"] = {"name": self.axis2[0], "values": self.axis2[1]}
        return payload


def find_zero_crossings(x, y):
    """
    Control values where y changes sign, by linear interpolation

    Exact zeros are reported as-is; pairs touching a NaN gap are skipped.

    Args:
        x: Sample positions
        y: Sampled values (NaN = gap)

    Returns:
        List of interpolated x positions
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    crossings = []
    for i in range(len(y)):
        if y[i] == 0.0:
            crossings.append(float(x[i]))
            continue
        if i + 1 >= len(y):
            break
        y0, y1 = y[i], y[i + 1]
        if np.isnan(y0) or np.isnan(y1) or y1 == 0.0:
            continue
        if (y0 < 0.0) != (y1 < 0.0):
            crossings.append(float(x[i] - y0 * (x[i + 1] - x[i]) / (y1 - y0)))
    return crossings


def phase_swing(result):
    """Peak-to-peak zeta (MHz) over the non-gap points of a sweep"""
    values = np.asarray(result.zeta, dtype=float)
    values = values[~np.isnan(values)]
    if values.size == 0:
        raise EmptySweepError("sweep has no valid points")
    return float(values.max() - values.min())


# ============== Point evaluation ==============

def _evaluate_points(specs, pair, processor, label):
    """
    zeta for each spec; LabelingAmbiguous becomes a gap, other errors propagate

    Returns:
        Tuple of (zeta array, status array)
    """
    processor = processor or BatchProcessor(label=label)
    outcomes = processor.run(specs, lambda s: zz_rate(s, pair))

    zeta = np.full(len(specs), np.nan)
    status = np.empty(len(specs), dtype=object)
    for i, outcome in enumerate(outcomes):
        if outcome.ok:
            zeta[i] = outcome.value
            status[i] = STATUS_OK
        elif isinstance(outcome.error, LabelingAmbiguous):
            status[i] = STATUS_AMBIGUOUS
        else:
            raise outcome.error
    return zeta, status


def _require_pair_drives(spec, pair):
    for index in pair:
        if spec.drive_for(index) is None:
            raise ConfigurationError(f"sweep needs a drive on qubit {index}")


def _with_relative_phase(spec, pair, phi_d):
    p, q = pair
    return spec.with_drive(p, phase=0.0).with_drive(q, phase=float(phi_d))


def _nonempty(values, name):
    values = np.asarray(values, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise ConfigurationError(f"{name} grid must be a nonempty 1D array")
    return values


def _check_not_empty(zeta, what):
    if np.all(np.isnan(zeta)):
        raise EmptySweepError(f"every point of the {what} sweep failed")


def sweep_phase(spec, pair, phases, processor=None):
    """
    zeta versus relative drive phase Phi_d

    The first pair member keeps phase 0, the second gets Phi_d.

    Args:
        spec: ClusterSpec with drives on both pair members
        pair: (p, q)
        phases: Phi_d grid (radians)
        processor: Optional BatchProcessor

    Returns:
        SweepResult over axis "phi_d_rad"
    """
    check_pair(spec, pair)
    _require_pair_drives(spec, pair)
    phases = _nonempty(phases, "phase")

    specs = [_with_relative_phase(spec, pair, phi) for phi in phases]
    zeta, status = _evaluate_points(specs, pair, processor, "sweep-phase")
    _check_not_empty(zeta, "phase")
    return SweepResult(
        axis1=("phi_d_rad", phases),
        zeta=zeta,
        status=status,
        zero_crossings=find_zero_crossings(phases, zeta),
        metadata={"pair": list(pair)}
    )


def _coupler_points(spec, pair, omega_c_values, phi_d):
    """
    Specs per coupler frequency plus a mask of points inside the qubit band

    Points with min(omega_q) <= omega_c <= max(omega_q) are not evaluated.
    """
    band = (min(q.omega for q in spec.qubits), max(q.omega for q in spec.qubits))
    driven = all(spec.drive_for(i) is not None for i in pair)
    base = _with_relative_phase(spec, pair, phi_d) if driven else spec

    specs, in_band = [], []
    for omega_c in omega_c_values:
        inside = band[0] <= omega_c <= band[1]
        in_band.append(inside)
        specs.append(None if inside else base.with_coupler_frequency(float(omega_c)))
    return specs, np.array(in_band, dtype=bool), band


def _evaluate_with_band(specs, in_band, pair, processor, label):
    live = [s for s in specs if s is not None]
    zeta = np.full(len(specs), np.nan)
    status = np.full(len(specs), STATUS_IN_BAND, dtype=object)
    if live:
        live_zeta, live_status = _evaluate_points(live, pair, processor, label)
        zeta[~in_band] = live_zeta
        status[~in_band] = live_status
    return zeta, status


def sweep_coupler(spec, pair, omega_c_values, phi_d=0.0, processor=None):
    """
    zeta versus coupler frequency at a fixed relative drive phase

    Without drives on the pair this is the static ZZ rate and phi_d is unused.

    Args:
        spec: ClusterSpec
        pair: (p, q)
        omega_c_values: Coupler frequency grid (GHz)
        phi_d: Relative drive phase (radians)
        processor: Optional BatchProcessor

    Returns:
        SweepResult over axis "omega_c_GHz"
    """
    check_pair(spec, pair)
    omega_c_values = _nonempty(omega_c_values, "omega_c")

    specs, in_band, band = _coupler_points(spec, pair, omega_c_values, phi_d)
    zeta, status = _evaluate_with_band(specs, in_band, pair, processor, "sweep-coupler")
    _check_not_empty(zeta, "coupler")

    metadata = {"pair": list(pair), "phi_d_rad": float(phi_d)}
    if in_band.any():
        metadata["in_band_points"] = int(in_band.sum())
        metadata["qubit_band_GHz"] = list(band)
    return SweepResult(
        axis1=("omega_c_GHz", omega_c_values),
        zeta=zeta,
        status=status,
        zero_crossings=find_zero_crossings(omega_c_values, zeta),
        metadata=metadata
    )


def sweep_flux(spec, pair, fluxes, phi_d=0.0, processor=None):
    """zeta versus coupler flux, mapped through the SQUID dispersion"""
    check_pair(spec, pair)
    fluxes = _nonempty(fluxes, "flux")
    omega_c_values = np.array([flux_to_frequency(spec.coupler, f) for f in fluxes])

    specs, in_band, band = _coupler_points(spec, pair, omega_c_values, phi_d)
    zeta, status = _evaluate_with_band(specs, in_band, pair, processor, "sweep-flux")
    _check_not_empty(zeta, "flux")
    return SweepResult(
        axis1=("flux", fluxes),
        zeta=zeta,
        status=status,
        zero_crossings=find_zero_crossings(fluxes, zeta),
        metadata={"pair": list(pair), "phi_d_rad": float(phi_d), "omega_c_GHz": omega_c_values}
    )


def sweep_amplitude(spec, pair, amplitudes, phi_d=0.0, processor=None):
    """
    zeta versus a common drive amplitude on both pair members

    Args:
        spec: ClusterSpec with drives on both pair members
        pair: (p, q)
        amplitudes: |eps| grid (GHz)
        phi_d: Relative drive phase (radians)
        processor: Optional BatchProcessor

    Returns:
        SweepResult over axis "amp_GHz"
    """
    check_pair(spec, pair)
    _require_pair_drives(spec, pair)
    amplitudes = _nonempty(amplitudes, "amplitude")
    if np.any(amplitudes < 0):
        raise ConfigurationError("amplitudes must be non-negative")

    base = _with_relative_phase(spec, pair, phi_d)
    specs = [
        base.with_drive(pair[0], amplitude=float(a)).with_drive(pair[1], amplitude=float(a))
        for a in amplitudes
    ]
    zeta, status = _evaluate_points(specs, pair, processor, "sweep-amplitude")
    _check_not_empty(zeta, "amplitude")
    return SweepResult(
        axis1=("amp_GHz", amplitudes),
        zeta=zeta,
        status=status,
        zero_crossings=find_zero_crossings(amplitudes, zeta),
        metadata={"pair": list(pair), "phi_d_rad": float(phi_d)}
    )


def sweep_2d(spec, pair, omega_c_values, phases, processor=None):
    """
    zeta over (coupler frequency, relative phase)

    Every row is evaluated exactly as sweep_phase would at that coupler
    frequency. Sweet spots are the per-row zero crossings along phase.

    Returns:
        SweepResult with zeta shape (len(omega_c_values), len(phases));
        zero_crossings holds (omega_c, phi_d) points
    """
    check_pair(spec, pair)
    _require_pair_drives(spec, pair)
    omega_c_values = _nonempty(omega_c_values, "omega_c")
    phases = _nonempty(phases, "phase")

    rows, in_band_rows, band = _coupler_points(spec, pair, omega_c_values, 0.0)
    n_rows, n_cols = len(omega_c_values), len(phases)
    specs = []
    in_band = np.zeros((n_rows, n_cols), dtype=bool)
    for i, row_spec in enumerate(rows):
        for phi in phases:
            specs.append(None if row_spec is None else _with_relative_phase(row_spec, pair, phi))
        in_band[i, :] = in_band_rows[i]

    zeta, status = _evaluate_with_band(specs, in_band.ravel(), pair, processor, "sweep-2d")
    zeta = zeta.reshape(n_rows, n_cols)
    status = status.reshape(n_rows, n_cols)
    _check_not_empty(zeta, "2D")

    sweet_spots = []
    for i, omega_c in enumerate(omega_c_values):
        for phi in find_zero_crossings(phases, zeta[i]):
            sweet_spots.append((float(omega_c), phi))

    metadata = {"pair": list(pair)}
    if in_band_rows.any():
        metadata["qubit_band_GHz"] = list(band)
    return SweepResult(
        axis1=("omega_c_GHz", omega_c_values),
        axis2=("phi_d_rad", phases),
        zeta=zeta,
        status=status,
        zero_crossings=sweet_spots,
        metadata=metadata
    )


def pair_peak_matrix(spec, phases, processor=None):
    """
    Peak |zeta| over relative phase for every qubit pair

    Only the pair's own two drives are active while that pair is evaluated.
    A pair whose every phase point fails labeling is NaN.

    Args:
        spec: ClusterSpec with a drive on every qubit
        phases: Phi_d grid (radians)
        processor: Optional BatchProcessor

    Returns:
        Symmetric n x n array (MHz) with zero diagonal
    """
    missing = [i for i in range(spec.n_qubits) if spec.drive_for(i) is None]
    if missing:
        raise ConfigurationError(f"pair matrix needs drives on every qubit, missing {missing}")
    phases = _nonempty(phases, "phase")

    pairs = list(combinations(range(spec.n_qubits), 2))
    tasks = []
    for pair in pairs:
        pair_spec = spec.only_drives(pair)
        tasks.extend((pair, _with_relative_phase(pair_spec, pair, phi)) for phi in phases)

    processor = processor or BatchProcessor(label="pair-matrix")
    outcomes = processor.run(tasks, lambda task: zz_rate(task[1], task[0]))

    n = spec.n_qubits
    matrix = np.zeros((n, n))
    for k, (p, q) in enumerate(pairs):
        values = []
        for outcome in outcomes[k * len(phases):(k + 1) * len(phases)]:
            if outcome.ok:
                values.append(abs(outcome.value))
            elif not isinstance(outcome.error, LabelingAmbiguous):
                raise outcome.error
        peak = max(values) if values else np.nan
        matrix[p, q] = matrix[q, p] = peak
    return matrix

"""
Reference unit cells
"""
from spectrum.cluster import (
    DEFAULT_COUPLER_ETA_GHZ,
    DEFAULT_COUPLING_GHZ,
    DEFAULT_LEVELS,
    ClusterSpec,
    CouplerSpec,
    TransmonSpec,
)


TWO_QUBIT_OMEGA_GHZ = (5.24, 5.02)
TWO_QUBIT_ETA_GHZ = (-0.215, -0.209)

FOUR_QUBIT_OMEGA_GHZ = (5.02, 5.23, 5.39, 5.58)
FOUR_QUBIT_ETA_GHZ = (-0.207, -0.214, -0.201, -0.211)
FOUR_QUBIT_COUPLER_RANGE_GHZ = (5.1, 6.8)


def _cell(omegas, etas, coupler, J, levels):
    return ClusterSpec(
        qubits=tuple(TransmonSpec(omega=w, eta=e, levels=levels) for w, e in zip(omegas, etas)),
        coupler=coupler,
        couplings=tuple((i, J) for i in range(len(omegas)))
    )


def two_qubit_cell(omega_c=6.0, J=DEFAULT_COUPLING_GHZ, eta_c=DEFAULT_COUPLER_ETA_GHZ, levels=DEFAULT_LEVELS):
    """Two transmons (5.24 / 5.02 GHz) on one coupler, undriven"""
    coupler = CouplerSpec(omega_c=omega_c, eta_c=eta_c)
    return _cell(TWO_QUBIT_OMEGA_GHZ, TWO_QUBIT_ETA_GHZ, coupler, J, levels)


def four_qubit_cell(omega_c=6.2, J=DEFAULT_COUPLING_GHZ, eta_c=DEFAULT_COUPLER_ETA_GHZ, levels=DEFAULT_LEVELS):
    """
    Four transmons around one flux-tunable coupler, undriven

    The coupler carries its 5.1-6.8 GHz tuning range so flux sweeps work.
    """
    omega_min, omega_max = FOUR_QUBIT_COUPLER_RANGE_GHZ
    coupler = CouplerSpec(omega_c=omega_c, eta_c=eta_c, omega_c_max=omega_max, omega_c_min=omega_min)
    return _cell(FOUR_QUBIT_OMEGA_GHZ, FOUR_QUBIT_ETA_GHZ, coupler, J, levels)


PRESETS = {
    "two-qubit": two_qubit_cell,
    "four-qubit": four_qubit_cell,
}


def preset_cluster(name):
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}, choose from {sorted(PRESETS)}")
    return PRESETS[name]()

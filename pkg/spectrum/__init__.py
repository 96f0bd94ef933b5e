"""
Coupled-transmon spectrum: Hamiltonians, dressed states and ZZ rates
"""
from .cluster import ClusterSpec, CouplerSpec, DriveSpec, TransmonSpec, ensure_pair_drives
from .eigen import DressedLabeling, Spectrum, diagonalize, label_dressed
from .hamiltonian import HermitianMatrix, build_cluster_hamiltonian, flux_to_frequency
from .operators import annihilation_op, embed_op
from .presets import four_qubit_cell, preset_cluster, two_qubit_cell
from .sweeps import (
    SweepResult,
    find_zero_crossings,
    pair_peak_matrix,
    phase_swing,
    sweep_2d,
    sweep_amplitude,
    sweep_coupler,
    sweep_flux,
    sweep_phase,
)
from .zz import static_and_driven_zz, truncation_stability, zz_rate

__all__ = [
    'TransmonSpec',
    'CouplerSpec',
    'DriveSpec',
    'ClusterSpec',
    'ensure_pair_drives',
    'HermitianMatrix',
    'Spectrum',
    'DressedLabeling',
    'annihilation_op',
    'embed_op',
    'build_cluster_hamiltonian',
    'flux_to_frequency',
    'diagonalize',
    'label_dressed',
    'zz_rate',
    'static_and_driven_zz',
    'truncation_stability',
    'SweepResult',
    'find_zero_crossings',
    'phase_swing',
    'sweep_phase',
    'sweep_coupler',
    'sweep_flux',
    'sweep_amplitude',
    'sweep_2d',
    'pair_peak_matrix',
    'two_qubit_cell',
    'four_qubit_cell',
    'preset_cluster',
]

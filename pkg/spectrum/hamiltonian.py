"""
Cluster Hamiltonian assembly in the drive frame
"""
from dataclasses import dataclass

import numpy as np

from spectrum.cluster import squid_dispersion
from spectrum.operators import annihilation_op, embed_op, kerr_op, number_op
from utils.errors import ConfigurationError


@dataclass(frozen=True)
class HermitianMatrix:
    """
    Dense Hamiltonian over `n_modes` modes of `levels` Fock states (GHz)
    """

    entries: np.ndarray
    n_modes: int
    levels: int

    def __post_init__(self):
        expected = self.levels ** self.n_modes
        if self.entries.shape != (expected, expected):
            raise ConfigurationError(
                f"matrix shape {self.entries.shape} does not match levels^modes = {expected}"
            )

    @property
    def dim(self):
        return self.entries.shape[0]

    def hermiticity_deviation(self):
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))


def build_cluster_hamiltonian(spec):
    """
    Assemble H for a ClusterSpec

    H = sum_i [(w_i - w_d) n_i + eta_i/2 a_i+ a_i+ a_i a_i]
        + [(w_c - w_d) n_c + eta_c/2 a_c+ a_c+ a_c a_c]
        + sum_i J_ic (a_i+ a_c + a_i a_c+)
        + sum_i (eps_i a_i + eps_i* a_i+)

    w_d is the shared drive frequency, or 0 (lab frame) without drives.
    The coupler term is taken into the same rotating frame as the qubits.

    Args:
        spec: ClusterSpec

    Returns:
        HermitianMatrix with modes ordered qubits first, coupler last
    """
    levels = spec.levels
    n_modes = spec.n_modes
    coupler_site = n_modes - 1
    omega_d = spec.omega_d

    n_local = number_op(levels)
    kerr_local = kerr_op(levels)
    lowering = [embed_op(annihilation_op(levels), k, n_modes, levels) for k in range(n_modes)]

    dim = levels ** n_modes
    H = np.zeros((dim, dim), dtype=complex)

    for i, qubit in enumerate(spec.qubits):
        H += (qubit.omega - omega_d) * embed_op(n_local, i, n_modes, levels)
        H += 0.5 * qubit.eta * embed_op(kerr_local, i, n_modes, levels)

    coupler = spec.coupler
    H += (coupler.omega_c - omega_d) * embed_op(n_local, coupler_site, n_modes, levels)
    H += 0.5 * coupler.eta_c * embed_op(kerr_local, coupler_site, n_modes, levels)

    a_c = lowering[coupler_site]
    for i, J in spec.couplings:
        hop = lowering[i].conj().T @ a_c
        H += J * (hop + hop.conj().T)

    for drive in spec.drives:
        eps = drive.epsilon
        a = lowering[drive.target]
        H += eps * a + np.conj(eps) * a.conj().T

    return HermitianMatrix(entries=H, n_modes=n_modes, levels=levels)


def flux_to_frequency(coupler, flux):
    """
    Coupler frequency at reduced flux Phi / Phi_0

    Args:
        coupler: CouplerSpec with omega_c_max set
        flux: Reduced flux

    Returns:
        omega_c_max * sqrt(|cos(pi * flux)|) in GHz
    """
    if coupler.omega_c_max is None:
        raise ConfigurationError("flux_to_frequency needs omega_c_max on the coupler")
    return squid_dispersion(coupler.omega_c_max, flux)

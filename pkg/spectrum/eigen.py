"""
Diagonalization and dressed-state labeling
"""
from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy.linalg import eigh

from spectrum.hamiltonian import HermitianMatrix
from spectrum.operators import bare_digits, bare_index
from utils.errors import ConfigurationError, LabelingAmbiguous, NonHermitianError


HERMITICITY_TOLERANCE = 1e-12
LABEL_OVERLAP_THRESHOLD = 0.5
# exact 50/50 mixtures come out of the eigensolver as 0.5 +- a few ulp
LABEL_OVERLAP_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs in ascending energy order; states[:, k] belongs to energies[k]"""

    energies: np.ndarray
    states: np.ndarray

    @property
    def dim(self):
        return len(self.energies)

    def residuals(self, H):
        """Per-eigenpair ||H v - E v||_2"""
        matrix = H.entries if isinstance(H, HermitianMatrix) else np.asarray(H)
        return np.linalg.norm(matrix @ self.states - self.states * self.energies, axis=0)


@dataclass(frozen=True)
class DressedLabeling:
    """
    Bijection between bare product states and eigenstates

    assignment[b] is the eigenstate bound to flat bare index b;
    overlaps[b] is |<eigenstate|b>|^2 for that binding.
    """

    assignment: np.ndarray
    overlaps: np.ndarray
    n_sites: int
    levels: int

    def index_of(self, label):
        return int(self.assignment[bare_index(label, self.levels)])

    def overlap_of(self, label):
        return float(self.overlaps[bare_index(label, self.levels)])

    @property
    def map(self):
        """Dict bare label tuple -> eigenstate index"""
        return {
            bare_digits(b, self.n_sites, self.levels): int(k)
            for b, k in enumerate(self.assignment)
        }


def diagonalize(H):
    """
    Full Hermitian eigendecomposition

    Args:
        H: HermitianMatrix or square array

    Returns:
        Spectrum with ascending energies
    """
    matrix = H.entries if isinstance(H, HermitianMatrix) else np.asarray(H, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ConfigurationError(f"expected a square matrix, got shape {matrix.shape}")

    deviation = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if deviation > HERMITICITY_TOLERANCE:
        raise NonHermitianError(deviation)

    energies, states = eigh(matrix)
    return Spectrum(energies=energies, states=states)


def computational_labels(n_qubits):
    """Bare labels with qubit digits in {0, 1} and the coupler (last site) at 0"""
    return [bits + (0,) for bits in product((0, 1), repeat=n_qubits)]


def label_dressed(spectrum, n_sites, levels):
    """
    Greedy maximum-overlap labeling

    Pairs are bound in descending |<psi_k|b>|^2; ties go to the lower
    eigenstate index, then the lower bare index. The last site is taken
    to be the coupler.

    Args:
        spectrum: Spectrum of dimension levels**n_sites
        n_sites: Number of modes
        levels: Fock truncation per mode

    Returns:
        DressedLabeling
    """
    dim = spectrum.dim
    if dim != levels ** n_sites:
        raise ConfigurationError(f"spectrum dimension {dim} != {levels}^{n_sites}")

    # overlaps[b, k] = |<b|psi_k>|^2
    overlaps = np.abs(spectrum.states) ** 2
    flat = overlaps.ravel()
    bare_of, eig_of = np.divmod(np.arange(dim * dim), dim)
    order = np.lexsort((bare_of, eig_of, -flat))

    assignment = np.full(dim, -1, dtype=int)
    bound_overlap = np.zeros(dim)
    eig_taken = np.zeros(dim, dtype=bool)
    remaining = dim
    for position in order.tolist():
        b, k = divmod(position, dim)
        if assignment[b] >= 0 or eig_taken[k]:
            continue
        assignment[b] = k
        bound_overlap[b] = flat[position]
        eig_taken[k] = True
        remaining -= 1
        if remaining == 0:
            break

    for label in computational_labels(n_sites - 1):
        overlap = bound_overlap[bare_index(label, levels)]
        if overlap <= LABEL_OVERLAP_THRESHOLD + LABEL_OVERLAP_TOLERANCE:
            raise LabelingAmbiguous(label, overlap)

    return DressedLabeling(
        assignment=assignment,
        overlaps=bound_overlap,
        n_sites=n_sites,
        levels=levels
    )

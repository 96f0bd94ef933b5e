"""
Independent reference pipeline for the spectrum tests

Assembles the cluster Hamiltonian element by element over occupation
numbers, diagonalizes it with the general (non-Hermitian) eigensolver and
labels computational states by per-label argmax overlap.
"""
from itertools import product

import numpy as np

from spectrum.cluster import ClusterSpec, CouplerSpec, TransmonSpec


def _occupations(n_modes, levels):
    return list(product(range(levels), repeat=n_modes))


def reference_hamiltonian(spec):
    """Dense H from explicit matrix elements; same basis ordering as the package"""
    levels = spec.levels
    n_modes = spec.n_modes
    c = n_modes - 1
    omega_d = spec.drives[0].omega_d if spec.drives else 0.0
    frequencies = [q.omega for q in spec.qubits] + [spec.coupler.omega_c]
    anharmonicities = [q.eta for q in spec.qubits] + [spec.coupler.eta_c]

    states = _occupations(n_modes, levels)
    index = {s: k for k, s in enumerate(states)}
    H = np.zeros((len(states), len(states)), dtype=complex)

    for col, state in enumerate(states):
        H[col, col] = sum(
            (frequencies[m] - omega_d) * n + 0.5 * anharmonicities[m] * n * (n - 1)
            for m, n in enumerate(state)
        )

        # J (a_i^+ a_c + a_i a_c^+)
        for i, J in spec.couplings:
            n_i, n_c = state[i], state[c]
            if n_i + 1 < levels and n_c >= 1:
                target = list(state)
                target[i] += 1
                target[c] -= 1
                H[index[tuple(target)], col] += J * np.sqrt(n_i + 1) * np.sqrt(n_c)
            if n_i >= 1 and n_c + 1 < levels:
                target = list(state)
                target[i] -= 1
                target[c] += 1
                H[index[tuple(target)], col] += J * np.sqrt(n_i) * np.sqrt(n_c + 1)

        # eps a + eps* a^+
        for drive in spec.drives:
            eps = drive.amplitude * np.exp(1j * drive.phase)
            n = state[drive.target]
            if n >= 1:
                target = list(state)
                target[drive.target] -= 1
                H[index[tuple(target)], col] += eps * np.sqrt(n)
            if n + 1 < levels:
                target = list(state)
                target[drive.target] += 1
                H[index[tuple(target)], col] += np.conj(eps) * np.sqrt(n + 1)
    return H


def reference_eigensystem(H):
    """Eigenpairs from numpy.linalg.eig, sorted by real energy"""
    energies, vectors = np.linalg.eig(H)
    order = np.argsort(energies.real)
    vectors = vectors[:, order]
    vectors = vectors / np.linalg.norm(vectors, axis=0)
    return energies.real[order], vectors


def reference_zz(spec, pair):
    """zeta in MHz by argmax labeling of each needed bare state"""
    H = reference_hamiltonian(spec)
    energies, vectors = reference_eigensystem(H)
    levels = spec.levels
    n_modes = spec.n_modes
    p, q = pair

    def energy(bit_p, bit_q):
        digits = [0] * n_modes
        digits[p] = bit_p
        digits[q] = bit_q
        row = int(np.ravel_multi_index(tuple(digits), (levels,) * n_modes))
        return energies[int(np.argmax(np.abs(vectors[row, :]) ** 2))]

    return 1000.0 * (energy(1, 1) - energy(1, 0) - energy(0, 1) + energy(0, 0))


def _two_excitation_gap(omegas, etas):
    """Smallest bare gap between a computational two-excitation state and any other"""
    n = len(omegas)
    computational, doubled = [], []
    for i in range(n):
        doubled.append(2 * omegas[i] + etas[i])
        for j in range(i + 1, n):
            computational.append(omegas[i] + omegas[j])
    others = computational + doubled
    gaps = [
        abs(a - b)
        for k, a in enumerate(computational)
        for m, b in enumerate(others)
        if m != k
    ]
    return min(gaps) if gaps else np.inf


def random_dispersive_spec(rng, n_qubits=2, levels=3):
    """
    Qubits at 4.8-5.6 GHz, coupler 1.0-1.8 GHz above them, J 20-50 MHz

    Draws are rejected until every computational two-excitation state sits
    at least 40 MHz from its neighbours, so labeling is unambiguous.
    """
    while True:
        omegas = np.sort(rng.uniform(4.8, 5.6, size=n_qubits))
        etas = rng.uniform(-0.25, -0.18, size=n_qubits)
        if np.min(np.diff(omegas)) >= 0.06 and _two_excitation_gap(omegas, etas) >= 0.04:
            break
    omega_c = float(omegas.max() + rng.uniform(1.0, 1.8))
    couplings = tuple((i, float(rng.uniform(0.02, 0.05))) for i in range(n_qubits))
    return ClusterSpec(
        qubits=tuple(TransmonSpec(omega=float(w), eta=float(e), levels=levels) for w, e in zip(omegas, etas)),
        coupler=CouplerSpec(omega_c=omega_c, eta_c=float(rng.uniform(-0.25, -0.15))),
        couplings=couplings
    )

"""
ZZ interaction rates from labeled eigenenergies
"""
from spectrum.eigen import diagonalize, label_dressed
from spectrum.hamiltonian import build_cluster_hamiltonian
from utils.errors import ConfigurationError


GHZ_TO_MHZ = 1000.0
TRUNCATION_TOLERANCE = 0.1


def check_pair(spec, pair):
    p, q = pair
    for index in (p, q):
        if not 0 <= index < spec.n_qubits:
            raise IndexError(f"qubit {index} out of range for {spec.n_qubits}-qubit cluster")
    if p == q:
        raise ConfigurationError(f"pair needs two distinct qubits, got ({p}, {q})")


def solve_cluster(spec):
    """Build, diagonalize and label; returns (Spectrum, DressedLabeling)"""
    spectrum = diagonalize(build_cluster_hamiltonian(spec))
    labeling = label_dressed(spectrum, spec.n_modes, spec.levels)
    return spectrum, labeling


def zz_from_labeling(spectrum, labeling, pair):
    """
    zeta = E(11) - E(10) - E(01) + E(00) in MHz

    All spectator qubits and the coupler sit in their ground state.
    """
    p, q = pair
    n_sites = labeling.n_sites

    def energy(bit_p, bit_q):
        label = [0] * n_sites
        label[p] = bit_p
        label[q] = bit_q
        return spectrum.energies[labeling.index_of(label)]

    # grouping keeps the p <-> q exchange bit-identical
    zeta = (energy(1, 1) + energy(0, 0)) - (energy(1, 0) + energy(0, 1))
    return GHZ_TO_MHZ * float(zeta)


def zz_rate(spec, pair):
    """
    ZZ rate of a qubit pair, drives included when present

    Args:
        spec: ClusterSpec
        pair: (p, q) distinct qubit indices

    Returns:
        zeta / 2pi in MHz
    """
    check_pair(spec, pair)
    spectrum, labeling = solve_cluster(spec)
    return zz_from_labeling(spectrum, labeling, pair)


def static_and_driven_zz(spec, pair):
    """
    Split the ZZ rate into its static and drive-induced parts

    Returns:
        Dict with zeta_static_MHz, zeta_driven_MHz and zeta_drive_MHz
    """
    check_pair(spec, pair)
    static = zz_rate(spec.without_drives(), pair)
    driven = zz_rate(spec, pair) if spec.drives else static
    return {
        "pair": [int(pair[0]), int(pair[1])],
        "zeta_static_MHz": static,
        "zeta_driven_MHz": driven,
        "zeta_drive_MHz": driven - static,
    }


def truncation_stability(spec, pair, levels=(3, 4)):
    """
    Compare zeta across Fock truncations

    The reference value is the highest truncation. The result is flagged
    untrustworthy when any lower truncation differs by more than 10%.

    Args:
        spec: ClusterSpec
        pair: (p, q)
        levels: Truncations to evaluate

    Returns:
        Dict with per-truncation zeta, relative differences and the flag
    """
    check_pair(spec, pair)
    levels = sorted(set(int(n) for n in levels))
    if len(levels) < 2:
        raise ConfigurationError("truncation comparison needs at least two levels")

    zetas = {n: zz_rate(spec.with_levels(n), pair) for n in levels}
    reference = zetas[levels[-1]]
    relative = {}
    for n in levels[:-1]:
        if reference == 0.0:
            relative[n] = 0.0 if zetas[n] == 0.0 else float("inf")
        else:
            relative[n] = abs(zetas[n] - reference) / abs(reference)

    return {
        "pair": [int(pair[0]), int(pair[1])],
        "zeta_MHz": {str(n): z for n, z in zetas.items()},
        "relative_difference": {str(n): r for n, r in relative.items()},
        "untrustworthy": any(r > TRUNCATION_TOLERANCE for r in relative.values()),
    }

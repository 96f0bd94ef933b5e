"""
Bosonic ladder operators and tensor-product embedding

Site 0 is the most significant factor of every Kronecker product, so the
flat index of a bare state (d_0, ..., d_{M-1}) is
np.ravel_multi_index(digits, (levels,) * M).
"""
from functools import reduce

import numpy as np

from utils.errors import ConfigurationError, InvalidTruncationError


def annihilation_op(levels):
    """
    Truncated annihilation operator

    Args:
        levels: Fock truncation (>= 2)

    Returns:
        levels x levels complex matrix with (n, n+1) = sqrt(n+1)
    """
    if levels < 2:
        raise InvalidTruncationError(f"levels must be at least 2, got {levels}")
    return np.diag(np.sqrt(np.arange(1, levels)), k=1).astype(complex)


def number_op(levels):
    a = annihilation_op(levels)
    return a.conj().T @ a


def kerr_op(levels):
    """a^dagger a^dagger a a, i.e. diag(n (n - 1))"""
    a = annihilation_op(levels)
    ad = a.conj().T
    return ad @ ad @ a @ a


def embed_op(local, site, n_sites, levels):
    """
    Place a single-site operator into the full product space

    Args:
        local: levels x levels matrix
        site: Position of `local` (0 = most significant)
        n_sites: Number of modes
        levels: Truncation shared by all modes

    Returns:
        levels**n_sites square matrix I x ... x local x ... x I
    """
    if not 0 <= site < n_sites:
        raise IndexError(f"site {site} out of range for {n_sites} sites")
    local = np.asarray(local)
    if local.shape != (levels, levels):
        raise ConfigurationError(f"local operator shape {local.shape} does not match levels={levels}")

    identity = np.eye(levels, dtype=complex)
    factors = [local if k == site else identity for k in range(n_sites)]
    return reduce(np.kron, factors).astype(complex)


def bare_index(digits, levels):
    """Flat index of a bare product state"""
    return int(np.ravel_multi_index(tuple(int(d) for d in digits), (levels,) * len(digits)))


def bare_digits(index, n_sites, levels):
    """Occupation digits of a flat bare index"""
    return tuple(int(d) for d in np.unravel_index(int(index), (levels,) * n_sites))

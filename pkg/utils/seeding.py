"""
Named random sub-streams derived from a single run seed
"""
import zlib

import numpy as np


def substream(seed, name):
    """
    Independent generator for one named consumer of randomness

    Args:
        seed: Run seed (non-negative integer)
        name: Stream name, e.g. "initial-layout"

    Returns:
        numpy Generator seeded from (seed, crc32(name))
    """
    key = zlib.crc32(name.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence([int(seed), key]))

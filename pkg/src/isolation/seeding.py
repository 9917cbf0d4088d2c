"""Seeded generators. Every random choice in the package draws from numpy's PCG64."""

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))

"""Deterministic seed derivation for nested experiments.

Sweeps and samplers derive one child seed per grid point or sample index
so every part of a run is replayable in isolation.
"""

from __future__ import annotations

import numpy as np

__all__ = ["spawn_seed"]


def spawn_seed(seed: int, *key: int) -> int:
    """Derive a child seed from a root seed and an index path."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])

"""Deterministic seed derivation for independent random streams.

Every stochastic stage in the lab derives its generator from a root seed
plus a string path (stage name, task id, trial index ...), so reruns are
bit-reproducible and parallel streams never collide.
"""
from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(root: int, *parts: object) -> int:
    """Map (root seed, labels...) to a stable 64-bit seed."""
    h = hashlib.sha256()
    h.update(str(int(root)).encode())
    for p in parts:
        h.update(b"/")
        h.update(str(p).encode())
    return int.from_bytes(h.digest()[:8], "little")


def rng_for(root: int, *parts: object) -> np.random.Generator:
    """Independent generator for the stream named by ``parts``."""
    return np.random.default_rng(derive_seed(root, *parts))

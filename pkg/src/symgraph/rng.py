"""Seeded random streams.

Every random choice draws from a PCG64 generator keyed by
``(master seed, purpose label, class id...)``. Streams for different purposes
or classes are independent, so results do not depend on evaluation order.
"""
from __future__ import annotations

import zlib

import numpy as np

__all__ = ["stream", "derive_seed"]


def stream(seed: int, label: str, *ids: int) -> np.random.Generator:
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(label.encode())]
    key += [int(i) for i in ids]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(key)))


def derive_seed(seed: int, label: str, *ids: int) -> int:
    """A 63-bit integer seed for a sub-task, e.g. one sweep trial."""
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(label.encode())]
    key += [int(i) for i in ids]
    hi, lo = np.random.SeedSequence(key).generate_state(2, dtype=np.uint32)
    return ((int(hi) << 32) | int(lo)) >> 1

"""Deterministic randomness for every module.

All randomness in the package flows through Philox counter-based generators
(numpy's ``Philox4x64``), keyed by a 64-bit seed plus a string label.  Child
streams are derived by hashing ``(seed, label)`` with SHA-256, so two streams
with different labels are independent and a given ``(seed, label)`` pair
reproduces the same bytes on any platform.  Golden transcript files depend on
this being stable.
"""

from __future__ import annotations

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1


def derive_key(seed: int, *labels: str) -> int:
    """Derive a 128-bit child key from a seed and a label path."""
    h = hashlib.sha256()
    h.update(int(seed & MASK64).to_bytes(8, "little"))
    for label in labels:
        h.update(b"/")
        h.update(label.encode("utf-8"))
    return int.from_bytes(h.digest()[:16], "little")


def generator(seed: int, *labels: str) -> np.random.Generator:
    """Philox generator for the stream named by ``labels`` under ``seed``."""
    return np.random.Generator(np.random.Philox(key=derive_key(seed, *labels)))


def random_bits(rng: np.random.Generator, n: int) -> tuple[int, ...]:
    """n uniform bits as a tuple of 0/1 ints."""
    return tuple(int(b) for b in rng.integers(0, 2, size=n))


def bits_to_int(bits) -> int:
    """Little-endian bit tuple -> integer."""
    value = 0
    for i, b in enumerate(bits):
        value |= (int(b) & 1) << i
    return value


def int_to_bits(value: int, n: int) -> tuple[int, ...]:
    """Integer -> little-endian bit tuple of width n."""
    return tuple((value >> i) & 1 for i in range(n))

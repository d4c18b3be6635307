"""
Counter-keyed uniform random numbers.

Every uniform is a pure function of (seed, purpose, step, unit site,
component): the key is folded through a splitmix64-style mixer, so no state
is carried between draws. Sampling a bigger window, or sampling the same
unit twice, reproduces the same numbers bit for bit.
"""

import hashlib
from enum import IntEnum

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_TO_UNIT = 2.0**-53


class Purpose(IntEnum):
    """Separates the streams of unrelated consumers of one seed."""

    KERNEL = 1
    CT_CLOCK = 2
    CT_JUMP = 3
    HEAVY_MC = 4


def _mix(z: np.ndarray) -> np.ndarray:
    z = z + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def _zigzag(values: np.ndarray) -> np.ndarray:
    values = values.astype(np.int64)
    return ((values << np.int64(1)) ^ (values >> np.int64(63))).view(np.uint64)


def uniforms(
    seed: int, purpose: int, step: int, units, components: int = 1
) -> np.ndarray:
    """
    Uniforms in [0, 1) keyed by unit site.

    Args:
        seed: Replica seed
        purpose: A ``Purpose`` tag
        step: Time step (or event index) of the draw
        units: Array-like of shape (k, d) of integer site coordinates
        components: Number of independent uniforms per unit

    Returns:
        Array of shape (k, components)
    """
    units = np.asarray(units, dtype=np.int64)
    if units.ndim == 1:
        units = units.reshape(-1, 1)
    count = units.shape[0]
    out = np.empty((count, components), dtype=np.float64)
    if count == 0:
        return out
    with np.errstate(over="ignore"):
        h = np.full(count, np.uint64(seed & _MASK64), dtype=np.uint64)
        h = _mix(h)
        h = _mix(h ^ np.uint64(int(purpose)))
        h = _mix(h ^ np.uint64(step & _MASK64))
        for j in range(units.shape[1]):
            h = _mix(h ^ _zigzag(units[:, j]))
        for c in range(components):
            hc = _mix(h ^ np.uint64(c + 1))
            out[:, c] = (hc >> np.uint64(11)).astype(np.float64) * _TO_UNIT
    return out


def derive_seed(master: int, index: int) -> int:
    """Seed of replica ``index``: the first 8 bytes of sha256("master:index")."""
    digest = hashlib.sha256(f"{master}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")

"""Deterministic counter-based pseudo-random draws (SplitMix64).

Bootstrap resampling and synthetic-data generation must produce identical
draws for a given seed on every platform, independent of evaluation order
or parallelism. numpy's generators do not promise a stable stream across
major versions, so the draws here come from SplitMix64, which is small
enough to restate exactly:

    output(seed, k) = mix64((seed + (k + 1) * GAMMA) mod 2^64)

with GAMMA = 0x9E3779B97F4A7C15 and mix64 the murmur-style finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

Every output is a pure function of (seed, counter k), so any slice of the
stream can be computed in any order. Independent substreams are derived by
using an output of one stream as the seed of another.

All arithmetic runs on uint64 numpy arrays, which wrap modulo 2^64.
"""

import numpy as np

GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_DOUBLE_SCALE = float(2.0**-53)


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def stream(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs start .. start+count-1 of the SplitMix64 stream for ``seed``."""
    ks = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    base = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    return _mix64(base + ks * GAMMA)


def substream_seeds(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Seeds for ``count`` independent substreams (outputs of the parent stream)."""
    return stream(seed, count, start)


def substream_column(seeds: np.ndarray, column: int) -> np.ndarray:
    """Output ``column`` of many substreams at once (one per seed)."""
    inc = (np.array([column + 1], dtype=np.uint64) * GAMMA)[0]
    return _mix64(seeds + inc)


def uniform01(values: np.ndarray) -> np.ndarray:
    """Map uint64 draws to float64 in [0, 1) using the top 53 bits."""
    return (values >> np.uint64(11)).astype(np.float64) * _DOUBLE_SCALE


def integers_mod(values: np.ndarray, bound: int) -> np.ndarray:
    """Map uint64 draws to integers in [0, bound) by modulo.

    The modulo bias is at most bound / 2^64, which is far below anything
    observable at the sample counts this package handles.
    """
    return (values % np.uint64(bound)).astype(np.int64)


def resample_indices(seed: int, replicate: int, n: int) -> np.ndarray:
    """Index draws for one bootstrap replicate.

    Replicate ``r`` draws its n with-replacement indices from the substream
    seeded by output ``r`` of the parent stream, so replicates can be
    evaluated in any order (or in parallel) without changing the draws.
    """
    sub = int(substream_seeds(seed, 1, start=replicate)[0])
    return integers_mod(stream(sub, n), n)


def permutation(seed: int, n: int) -> np.ndarray:
    """Deterministic Fisher-Yates shuffle of range(n)."""
    draws = stream(seed, max(n - 1, 0))
    perm = np.arange(n)
    for i in range(n - 1, 0, -1):
        j = int(draws[n - 1 - i] % np.uint64(i + 1))
        perm[i], perm[j] = perm[j], perm[i]
    return perm

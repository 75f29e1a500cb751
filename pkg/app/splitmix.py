"""Counter-based SplitMix64

Output number `counter` of the stream for `seed` is

    z = seed + (counter + 1) · 0x9E3779B97F4A7C15          (mod 2^64)
    z = (z ^ (z >> 30)) · 0xBF58476D1CE4E5B9                (mod 2^64)
    z = (z ^ (z >> 27)) · 0x94D049BB133111EB                (mod 2^64)
    out = z ^ (z >> 31)

which is the classic SplitMix64 sequence started at state `seed`. Because any
output can be computed from its index alone, disjoint index ranges can be
generated in any order or process and still produce the same draws.

A field coefficient is `out mod q`; the bias is below q / 2^64.
"""

from typing import Iterator

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, counter: int) -> int:
    """Output number `counter` of the stream seeded with `seed`"""
    z = (seed + (counter + 1) * GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64_block(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs start .. start+count-1 as a uint64 array, bit-identical to splitmix64"""
    counters = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + counters * np.uint64(GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
        z = z ^ (z >> np.uint64(31))
    return z


class SplitMixStream:
    """Sequential reader over one seeded stream"""

    def __init__(self, seed: int, start: int = 0):
        self.seed = seed & MASK64
        self.position = start

    def next_u64(self) -> int:
        value = splitmix64(self.seed, self.position)
        self.position += 1
        return value

    def residues(self, q: int, count: int) -> Iterator[int]:
        for _ in range(count):
            yield self.next_u64() % q

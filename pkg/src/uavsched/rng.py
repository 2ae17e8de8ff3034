"""Seedable uniform sampler used for instance generation.

Instance files must be reproducible from (generator name, seed) alone, in any
runtime, so the generator is splitmix64: state advances by the golden-gamma
constant and each output is finalized with two xor-shift multiplies
(Steele et al.'s SplitMix).  Doubles take the top 53 bits of each output.
"""
from __future__ import annotations

GENERATOR_NAME = "splitmix64"

_MASK = (1 << 64) - 1


class SplitMix64:
    """64-bit splitmix64 stream; uniform doubles in [0, 1)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_double(self) -> float:
        # 53-bit mantissa, exact dyadic rational in [0, 1)
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

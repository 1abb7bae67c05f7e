"""Deterministic 64-bit random streams for graph generation.

SplitMix64 is used because it is trivially portable: the compiled and
pure-Python backends implement the identical sequence, so a given
(parameters, seed) pair reproduces the same graph on every platform and
backend. Seed derivation folds integer coordinates (sweep indices, trial
numbers) into a master seed so that independent trials get independent
streams regardless of execution order.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_TWO64 = 1 << 64
_INV_2_53 = 1.0 / 9007199254740992.0


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective avalanche mix of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, *parts: int) -> int:
    """Fold integer coordinates into a master seed, one mix per coordinate.

    ``derive_seed(m, a, b)`` equals ``derive_seed(derive_seed(m, a), b)``,
    so hierarchical derivation (sweep point first, then trial index)
    composes into a single documented chain.
    """
    h = master & MASK64
    for x in parts:
        h = mix64((h + GOLDEN + (x & MASK64)) & MASK64)
    return h


class SplitMix64:
    """Counter-based stream; the state advances by the golden-ratio step."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_double(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), exactly unbiased via rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        rem = _TWO64 % bound
        while True:
            r = self.next_u64()
            if r < _TWO64 - rem:
                return r % bound

"""Deterministic, platform-independent pseudo-random generator.

Every seeded routine in this package (random graphs, random trees, fuzzing)
draws from SplitMix64 rather than the stdlib Mersenne Twister, so that a given
seed produces bit-identical streams on every platform and Python version.
The algorithm is the public-domain SplitMix64 finalizer (Steele, Lea &
Flood): the state advances by the 64-bit golden-ratio constant and each
output is the xorshift-multiply mix of the new state.
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """64-bit generator with unbiased integer draws and 53-bit unit floats."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % bound

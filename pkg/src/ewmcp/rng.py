"""Portable deterministic random number generation.

Seeded randomness (vertex permutations, Bernoulli edge draws) must reproduce
bit-for-bit across platforms and language runtimes, so we use splitmix64, a
published 64-bit generator with a three-line state transition, instead of a
platform RNG whose stream may change between library versions.
"""

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream (Steele, Lea & Flood; java.util.SplittableRandom).

    state' = state + 0x9E3779B97F4A7C15
    z = state'; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

    All arithmetic is modulo 2**64.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound). Uses rejection to avoid modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        # Largest multiple of bound that fits in 64 bits.
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % bound)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]

    def bernoulli(self, p: float) -> bool:
        return self.next_float() < p

"""Deterministic 64-bit randomness (SplitMix64) with a fixed stream-split rule.

Every randomised routine in this package draws from SplitMix64 so that a run
is reproducible bit-for-bit across platforms and Python versions.  Substreams
are derived from a ``(seed, index)`` pair; see :func:`stream`.
"""

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The SplitMix64 finaliser (Stafford variant 13)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform draw from range(n), unbiased via rejection."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next64()
            if u < limit:
                return u % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def stream(seed: int, index: int) -> SplitMix64:
    """Substream for (seed, index): seeded with mix64(mix64(seed) ^ mix64(index + 1)).

    Distinct indices give statistically independent streams; the rule is part
    of the reproducibility contract and must not change.
    """
    return SplitMix64(mix64(mix64(seed & MASK64) ^ mix64((index + 1) & MASK64)))

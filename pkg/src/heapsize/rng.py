"""Stable seeded pseudo-random numbers.

``random.Random`` only promises a stable ``random()`` stream; its integer and
shuffle helpers have changed between Python releases. Golden outputs need a
generator that never drifts, so this module fixes the algorithm:

* generator: SplitMix64 (Steele, Lea & Flood 2014), state advanced by
  0x9E3779B97F4A7C15 and mixed with the published finalizer;
* bounded integers: rejection sampling on the raw 64-bit output, rejecting
  values below ``2**64 mod n`` so that ``x mod n`` is unbiased;
* shuffles: Fisher-Yates from the last index down.

Per-domain seeds are ``seed XOR h(domain_id)`` where ``h`` is the first eight
bytes of SHA-256 of the UTF-8 id, read big-endian.
"""
import hashlib

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = (1 << 64) % n
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % n

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, label: str) -> int:
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return (seed ^ int.from_bytes(digest[:8], "big")) & MASK64

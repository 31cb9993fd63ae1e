"""Seedable random source and uniform selection of one set bit."""

import random
import secrets

from .errors import ChoiceImpossible, InvalidBound
from .mask_set import SubsetMask

_WORD64 = (1 << 64) - 1


class RandomSource:
    """Deterministic stream of uniform integers.

    Backed by the standard library's Mersenne Twister, so two sources
    built with the same seed yield the same draw sequence (period far
    above 2**63).  When no seed is given one is drawn from the OS
    entropy pool and kept on ``seed`` so the run can be reproduced.
    """

    def __init__(self, seed: int | None = None):
        if seed is None:
            seed = secrets.randbits(64)
        if not 0 <= seed <= _WORD64:
            raise ValueError(f"seed must be an unsigned 64-bit value, got {seed}")
        self.seed = seed
        self._rng = random.Random(seed)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), bias-free.

        Draws just enough bits to cover the range and rejects overshoot,
        so every value is exactly equally likely.
        """
        if bound < 1:
            raise InvalidBound(f"bound must be >= 1, got {bound}")
        if bound == 1:
            return 0
        width = (bound - 1).bit_length()
        while True:
            value = self._rng.getrandbits(width)
            if value < bound:
                return value

    def spawn(self, index: int) -> "RandomSource":
        """Independent source for task ``index``: seed + index, wrapped to 64 bits."""
        return RandomSource((self.seed + index) & _WORD64)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"


def choice(k: SubsetMask, src: RandomSource) -> SubsetMask:
    """Pick one set bit of ``k`` uniformly, returned as a singleton mask.

    The r-th set bit is taken, with r uniform over 1..popcount(k), by
    walking a probe bit upward from bit 0; each member therefore has
    probability 1/popcount(k).
    """
    if k.bits == 0:
        raise ChoiceImpossible("the choice is not possible: empty mask")
    rank = src.next_below(k.bits.bit_count()) + 1
    seen = 0
    probe = 1
    while True:
        if k.bits & probe:
            seen += 1
            if seen == rank:
                return SubsetMask(probe, k.order)
        probe <<= 1

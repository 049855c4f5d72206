"""Bit utilities and packed redundant base-B counters.

A counter vector ``(n_{r-1}, ..., n_1, n_0)`` with digits ``0 <= n_j <= 2B``
(``B = 2**b``) is split as ``n_j = lo_j + B * hi_j`` with ``lo_j < B`` and
``hi_j <= 2``.  All ``lo`` digits live side by side in one word and all
``hi`` digits in another, so any prefix ``sum(n_j * B**j for j < k)`` is two
masks, a shift and an add.
"""

from __future__ import annotations

WORD_BITS = 64
# Headroom for the carry when the two packed words are recombined.
PACK_LIMIT = WORD_BITS - 2


def msb(x: int) -> int:
    """Index of the most significant set bit, i.e. ``floor(log2(x))``."""
    if x <= 0:
        raise ValueError(f"msb undefined for {x}")
    # int.bit_length is CPython's count-leading-zeros.
    return x.bit_length() - 1


def lsb(x: int) -> int:
    """Index of the least significant set bit."""
    if x <= 0:
        raise ValueError(f"lsb undefined for {x}")
    return msb(x & -x)


def mask(k: int, b: int) -> int:
    return (1 << (k * b)) - 1


def fits_packed(r: int, b: int) -> bool:
    return r * b <= PACK_LIMIT


class PackedCounters:
    """Digits of a redundant base-``2**b`` counter held in two words."""

    __slots__ = ("b", "r", "lo", "hi", "_masks")

    def __init__(self, b: int, r: int):
        if b < 2:
            raise ValueError("packing needs B >= 4")
        if not fits_packed(r, b):
            raise ValueError(f"r*b = {r * b} exceeds {PACK_LIMIT} bits")
        self.b = b
        self.r = r
        self.lo = 0
        self.hi = 0
        self._masks = [mask(k, b) for k in range(r + 1)]

    def digit(self, j: int) -> int:
        if not 0 <= j < self.r:
            raise IndexError(j)
        b = self.b
        m = self._masks[1]
        sh = j * b
        return ((self.lo >> sh) & m) + (((self.hi >> sh) & m) << b)

    def set_digit(self, j: int, value: int) -> None:
        b = self.b
        B = 1 << b
        if not 0 <= value <= 2 * B:
            raise ValueError(f"digit {value} outside [0, 2B]")
        sh = j * b
        clear = ~(self._masks[1] << sh)
        self.lo = (self.lo & clear) | ((value & (B - 1)) << sh)
        self.hi = (self.hi & clear) | ((value >> b) << sh)

    def prefix(self, k: int) -> int:
        """``sum(digit(j) * B**j for j < k)``."""
        if not 0 <= k <= self.r:
            raise IndexError(k)
        m = self._masks[k]
        return (self.lo & m) + ((self.hi & m) << self.b)

    def next_nonzero(self, level: int) -> int:
        """Smallest ``j > level`` with a non-zero digit."""
        rest = (self.lo | self.hi) & ~self._masks[level + 1]
        if not rest:
            raise LookupError(f"no non-zero digit above {level}")
        return lsb(rest) // self.b

    def digits(self) -> list:
        return [self.digit(j) for j in range(self.r)]


class PrefixCounters:
    """Same interface as :class:`PackedCounters` for wide ``r * b``.

    Keeps the prefix sums ``N_0..N_r`` explicitly, plus a one-word bitmap of
    the non-zero digits so the level search stays a single ``lsb``.
    """

    __slots__ = ("b", "r", "sums", "nonzero")

    def __init__(self, b: int, r: int, sums=None):
        self.b = b
        self.r = r
        # ``sums`` may be the data list of an allocated block of r + 1 words.
        self.sums = sums if sums is not None else [0] * (r + 1)
        for k in range(r + 1):
            self.sums[k] = 0
        self.nonzero = 0

    def digit(self, j: int) -> int:
        if not 0 <= j < self.r:
            raise IndexError(j)
        return (self.sums[j + 1] - self.sums[j]) >> (j * self.b)

    def set_digit(self, j: int, value: int) -> None:
        if not 0 <= value <= 2 << self.b:
            raise ValueError(f"digit {value} outside [0, 2B]")
        delta = (value - self.digit(j)) << (j * self.b)
        s = self.sums
        for k in range(j + 1, self.r + 1):
            s[k] += delta
        if value:
            self.nonzero |= 1 << j
        else:
            self.nonzero &= ~(1 << j)

    def prefix(self, k: int) -> int:
        if not 0 <= k <= self.r:
            raise IndexError(k)
        return self.sums[k]

    def next_nonzero(self, level: int) -> int:
        rest = self.nonzero >> (level + 1)
        if not rest:
            raise LookupError(f"no non-zero digit above {level}")
        return level + 1 + lsb(rest)

    def digits(self) -> list:
        return [self.digit(j) for j in range(self.r)]

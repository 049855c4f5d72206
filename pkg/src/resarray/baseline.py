"""Classical resizable arrays: exact-fit, geometric, HAT and Brodnik et al.

All four allocate through :class:`~resarray.space.Memory` so their space and
copy counts can be compared with the tiered structure.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, isqrt
from typing import Any, List, Optional, Tuple, Union

from .base import ResizableArray
from .space import Block, Memory
from .transfer import Mover


class NaiveArray(ResizableArray):
    """One block of exactly ``N`` words, reallocated on every resize."""

    name = "naive"

    def __init__(self, mem: Optional[Memory] = None):
        super().__init__(mem)
        self._blk: Optional[Block] = None

    def _resize(self, n: int) -> None:
        mem = self.mem
        old = self._blk
        new = mem.allocate(n) if n else None
        keep = min(n, self._N)
        if keep:
            mem.copy(old, 0, new, 0, keep)
        if old is not None:
            mem.deallocate(old)
        self._blk = new

    def grow(self, a: Any) -> None:
        self._resize(self._N + 1)
        self.mem.write(self._blk, self._N, a)
        self._N += 1

    def shrink(self) -> None:
        self._check_nonempty()
        self._resize(self._N - 1)
        self._N -= 1

    def get(self, i: int) -> Any:
        self._check_index(i)
        return self._blk.data[i]

    def set(self, i: int, a: Any) -> None:
        self._check_index(i)
        self._blk.data[i] = a
        self.mem.assignments += 1

    def _owned_blocks(self) -> List[Block]:
        return [self._blk] if self._blk is not None else []


class GeometricArray(ResizableArray):
    """Expand to ``(1+alpha)N`` when full, contract when ``N <= cap/(1+alpha)^2``."""

    name = "geometric"

    def __init__(self, mem: Optional[Memory] = None,
                 alpha: Union[Fraction, int, str] = 1):
        alpha = Fraction(alpha)
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        if alpha.denominator > 1000:
            raise ValueError("alpha needs a small denominator for exact capacities")
        super().__init__(mem)
        self.alpha = alpha
        self._factor = 1 + alpha
        self._blk: Optional[Block] = None
        self.capacity = 0

    def _resize(self, cap: int) -> None:
        mem = self.mem
        old = self._blk
        new = mem.allocate(cap) if cap else None
        if self._N:
            mem.copy(old, 0, new, 0, self._N)
        if old is not None:
            mem.deallocate(old)
        self._blk = new
        self.capacity = cap
        self.last_event = "resize"

    def grow(self, a: Any) -> None:
        self.last_event = None
        N = self._N
        if N == self.capacity:
            self._resize(max(N + 1, ceil(self._factor * N)))
        self._blk.data[N] = a
        self.mem.assignments += 1
        self._N = N + 1

    def shrink(self) -> None:
        self._check_nonempty()
        self.last_event = None
        self._N -= 1
        if self._N * self._factor ** 2 <= self.capacity:
            self._resize(ceil(self._factor * self._N))

    def get(self, i: int) -> Any:
        self._check_index(i)
        return self._blk.data[i]

    def set(self, i: int, a: Any) -> None:
        self._check_index(i)
        self._blk.data[i] = a
        self.mem.assignments += 1

    def _owned_blocks(self) -> List[Block]:
        return [self._blk] if self._blk is not None else []


class HatArray(ResizableArray):
    """Sitarski's hashed array tree: one index block over data blocks of size B."""

    name = "hat"
    B_MIN = 4

    def __init__(self, mem: Optional[Memory] = None, b0: int = 4):
        if b0 < self.B_MIN or b0 & (b0 - 1):
            raise ValueError(f"B must be a power of 2 >= {self.B_MIN}")
        super().__init__(mem)
        self.B = b0
        self._b = b0.bit_length() - 1
        self._index = self.mem.allocate(b0)
        self._nblocks = 0

    def locate(self, i: int) -> Tuple[int, int]:
        self._check_index(i)
        return i >> self._b, i & (self.B - 1)

    def grow(self, a: Any) -> None:
        self.last_event = None
        if self._N == self.B * self.B:
            self._rebuild(2 * self.B)
        N = self._N
        q, off = N >> self._b, N & (self.B - 1)
        if q == self._nblocks:
            self._index.data[q] = self.mem.allocate(self.B)
            self._nblocks += 1
        self._index.data[q].data[off] = a
        self.mem.assignments += 1
        self._N = N + 1

    def shrink(self) -> None:
        self._check_nonempty()
        self.last_event = None
        if self.B > self.B_MIN and 16 * self._N == self.B * self.B:
            self._rebuild(self.B // 2)
        self._N -= 1
        N = self._N
        if N & (self.B - 1) == 0 and self._nblocks > (N >> self._b) + 1:
            # two trailing empty blocks: drop one
            self._nblocks -= 1
            self.mem.deallocate(self._index.data[self._nblocks])
            self._index.data[self._nblocks] = 0

    def _rebuild(self, B2: int) -> None:
        mem, N, B = self.mem, self._N, self.B
        old_index = self._index
        old = old_index.data[:self._nblocks]
        used = (N + B - 1) // B
        for blk in old[used:]:
            mem.deallocate(blk)

        def segments():
            for j in range(used):
                yield old[j], 0, min(B, N - j * B)
                mem.deallocate(old[j])
            mem.deallocate(old_index)

        new_index = mem.allocate(B2)
        mover = Mover(mem, segments())
        nblocks = (N + B2 - 1) // B2
        for q in range(nblocks):
            blk = mem.allocate(B2)
            mover.fill(blk, 0, min(B2, N - q * B2))
            new_index.data[q] = blk
        mover.finish()
        self._index = new_index
        self._nblocks = nblocks
        self.B = B2
        self._b = B2.bit_length() - 1
        self.last_event = "rebuild"

    def get(self, i: int) -> Any:
        self._check_index(i)
        return self._index.data[i >> self._b].data[i & (self.B - 1)]

    def set(self, i: int, a: Any) -> None:
        self._check_index(i)
        self._index.data[i >> self._b].data[i & (self.B - 1)] = a
        self.mem.assignments += 1

    def _owned_blocks(self) -> List[Block]:
        return self._index.data[:self._nblocks] + [self._index]


def brodnik_locate(i: int) -> Tuple[int, int]:
    """Block number (1-based, block ``l`` has ``l`` slots) and offset of item ``i``.

    Block ``l`` holds indices ``[l(l-1)/2, l(l+1)/2)``.
    """
    if i < 0:
        raise IndexError(i)
    l = (isqrt(8 * i + 1) + 1) // 2
    return l, i - l * (l - 1) // 2


class BrodnikArray(ResizableArray):
    """Data blocks of sizes 1, 2, 3, ...; items never move once placed.

    The index block is itself a doubling array of references; its copies are
    reference writes and are not counted as item assignments.
    """

    name = "brodnik"

    def __init__(self, mem: Optional[Memory] = None):
        super().__init__(mem)
        self._index = self.mem.allocate(1)
        self._nblocks = 0

    def locate(self, i: int) -> Tuple[int, int]:
        self._check_index(i)
        return brodnik_locate(i)

    def _resize_index(self, cap: int) -> None:
        new = self.mem.allocate(cap)
        n = self._nblocks
        new.data[:n] = self._index.data[:n]
        self.mem.deallocate(self._index)
        self._index = new
        self.last_event = "index"

    def grow(self, a: Any) -> None:
        self.last_event = None
        l, off = brodnik_locate(self._N)
        if l > self._nblocks:
            if self._nblocks == self._index.length:
                self._resize_index(2 * self._nblocks)
            self._index.data[self._nblocks] = self.mem.allocate(l)
            self._nblocks += 1
        self._index.data[l - 1].data[off] = a
        self.mem.assignments += 1
        self._N += 1

    def shrink(self) -> None:
        self._check_nonempty()
        self.last_event = None
        self._N -= 1
        l, off = brodnik_locate(self._N)
        if off == 0 and self._nblocks > l:
            # block l is now empty and an empty block l+1 already exists
            self._nblocks -= 1
            self.mem.deallocate(self._index.data[self._nblocks])
            self._index.data[self._nblocks] = 0
            cap = self._index.length
            if cap > 1 and self._nblocks <= cap // 4:
                self._resize_index(cap // 2)

    def get(self, i: int) -> Any:
        self._check_index(i)
        l, off = brodnik_locate(i)
        return self._index.data[l - 1].data[off]

    def set(self, i: int, a: Any) -> None:
        self._check_index(i)
        l, off = brodnik_locate(i)
        self._index.data[l - 1].data[off] = a
        self.mem.assignments += 1

    def _owned_blocks(self) -> List[Block]:
        return self._index.data[:self._nblocks] + [self._index]

"""Instrumented word-level allocator.

Every structure in this package stores its items, block references and
counters in blocks obtained from a :class:`Memory`.  One word holds one
item, one reference or one counter value, so ``live_words`` is exactly the
space the structure occupies and ``peak_words`` the most it ever held.

Item writes made through :meth:`Memory.write` and :meth:`Memory.copy` are
tallied in ``Memory.assignments``.  Reference and counter slots are updated
through ``block.data`` directly and are not counted.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from itertools import count
from typing import Any, Dict, Iterator


class AllocatorError(Exception):
    """Misuse of the allocator (stale or foreign handle)."""


class InvalidHandle(AllocatorError):
    pass


@dataclass(frozen=True)
class SpaceReport:
    live_words: int
    peak_words: int
    allocations: int
    deallocations: int

    @classmethod
    def csv_header(cls) -> str:
        return ",".join(f.name for f in fields(cls))

    def csv_row(self) -> str:
        return ",".join(str(v) for v in astuple(self))


class Block:
    """A fixed-length run of words.

    ``data`` is ``None`` once the block has been deallocated.
    """

    __slots__ = ("id", "length", "data", "_mem")

    def __init__(self, mem: "Memory", ident: int, length: int):
        self._mem = mem
        self.id = ident
        self.length = length
        self.data: Any = [0] * length

    @property
    def valid(self) -> bool:
        return self.data is not None

    def __len__(self):
        return self.length

    def __repr__(self):
        state = "" if self.data is not None else " freed"
        return f"<Block #{self.id} len={self.length}{state}>"


class Memory:
    """Tracks live and peak words over a set of blocks."""

    def __init__(self):
        self._ids = count(1)
        self._live: Dict[int, Block] = {}
        self.live_words = 0
        self.peak_words = 0
        self.allocations = 0
        self.deallocations = 0
        self.assignments = 0

    def allocate(self, length: int) -> Block:
        if length < 1:
            raise ValueError(f"block length must be >= 1, got {length}")
        blk = Block(self, next(self._ids), length)
        self._live[blk.id] = blk
        self.allocations += 1
        self.live_words += length
        if self.live_words > self.peak_words:
            self.peak_words = self.live_words
        return blk

    def deallocate(self, blk: Block) -> None:
        self._check(blk)
        del self._live[blk.id]
        blk.data = None
        self.deallocations += 1
        self.live_words -= blk.length

    free = deallocate

    def _check(self, blk: Block) -> None:
        if not isinstance(blk, Block) or blk._mem is not self:
            raise InvalidHandle(f"{blk!r} does not belong to this memory")
        if blk.data is None:
            raise InvalidHandle(f"{blk!r} has been deallocated")

    def read(self, blk: Block, slot: int):
        self._check(blk)
        if not 0 <= slot < blk.length:
            raise IndexError(f"slot {slot} out of range for {blk!r}")
        return blk.data[slot]

    def write(self, blk: Block, slot: int, value) -> None:
        self._check(blk)
        if not 0 <= slot < blk.length:
            raise IndexError(f"slot {slot} out of range for {blk!r}")
        blk.data[slot] = value
        self.assignments += 1

    def copy(self, src: Block, x: int, dst: Block, y: int, n: int) -> None:
        """Assign ``dst[y + j] = src[x + j]`` for ``0 <= j < n``."""
        self._check(src)
        self._check(dst)
        if n < 0 or x < 0 or y < 0 or x + n > src.length or y + n > dst.length:
            raise IndexError(f"copy of {n} words {src!r}[{x}:] -> {dst!r}[{y}:] out of range")
        dst.data[y:y + n] = src.data[x:x + n]
        self.assignments += n

    def snapshot(self) -> SpaceReport:
        return SpaceReport(self.live_words, self.peak_words,
                           self.allocations, self.deallocations)

    def reset_peak(self) -> None:
        self.peak_words = self.live_words

    def live_blocks(self) -> Iterator[Block]:
        return iter(list(self._live.values()))

    def __repr__(self):
        return (f"Memory(live={self.live_words}, peak={self.peak_words}, "
                f"blocks={len(self._live)}, assignments={self.assignments})")

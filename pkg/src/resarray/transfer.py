"""Streaming block-to-block copies with early release of drained sources.

Restructuring operations (combine, split, rebuild) read items in order from
a sequence of source segments and write them into newly allocated blocks.
Sources are handed over as a generator of ``(block, start, length)``
segments; code placed after a ``yield`` runs once that segment has been
drained, which is where the generator frees the block.  Destinations are
allocated only when there is data to put in them.  Together this keeps the
extra space of a restructuring at about one source unit plus one
destination unit.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Tuple

from .space import Block, Memory

Segment = Tuple[Block, int, int]


class Mover:
    def __init__(self, mem: Memory, segments: Iterable[Segment]):
        self.mem = mem
        self._segs: Iterator[Segment] = iter(segments)
        self._src: Optional[Block] = None
        self._pos = 0
        self._end = 0
        self._advance()

    def _advance(self) -> None:
        for blk, start, length in self._segs:
            if length > 0:
                self._src, self._pos, self._end = blk, start, start + length
                return
        self._src = None

    @property
    def exhausted(self) -> bool:
        return self._src is None

    def fill(self, dst: Block, y: int, n: int) -> None:
        """Move the next ``n`` items into ``dst[y:y + n]``."""
        copy = self.mem.copy
        while n:
            if self._src is None:
                raise RuntimeError("source segments ran out during a transfer")
            m = min(n, self._end - self._pos)
            copy(self._src, self._pos, dst, y, m)
            self._pos += m
            y += m
            n -= m
            if self._pos == self._end:
                # Resuming the generator releases the drained source now,
                # before the caller allocates its next destination.
                self._advance()

    def finish(self) -> None:
        if self._src is not None:
            raise RuntimeError("transfer finished with unread source items")
        for _blk, _start, length in self._segs:
            if length:
                raise RuntimeError("transfer finished with unread source items")

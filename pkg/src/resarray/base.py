from __future__ import annotations

from typing import Any, Iterator, List, Optional

from .space import Block, Memory


class ResizableArray:
    """Grow/shrink-at-the-end array with indexed access.

    Subclasses implement :meth:`grow`, :meth:`shrink`, :meth:`get` and
    :meth:`set`.  Each instance owns a control record of ``CONTROL_WORDS``
    words (length, parameters, root pointer) allocated up front, so that
    ``mem.live_words`` covers everything the structure holds.
    """

    name = "abstract"
    CONTROL_WORDS = 2

    def __init__(self, mem: Optional[Memory] = None):
        self.mem = mem if mem is not None else Memory()
        self._N = 0
        self._ctl = self.mem.allocate(self.CONTROL_WORDS)
        self.last_event: Optional[str] = None

    def __len__(self) -> int:
        return self._N

    def length(self) -> int:
        return self._N

    @property
    def control_words(self) -> int:
        """Constant per-instance overhead (the ``c0`` term in space bounds)."""
        return self.CONTROL_WORDS

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self._N:
            raise IndexError(f"index {i} out of range for length {self._N}")

    def _check_nonempty(self) -> None:
        if self._N == 0:
            raise IndexError("shrink on empty array")

    def grow(self, a: Any) -> None:
        raise NotImplementedError

    def shrink(self) -> None:
        raise NotImplementedError

    def get(self, i: int) -> Any:
        raise NotImplementedError

    def set(self, i: int, a: Any) -> None:
        raise NotImplementedError

    def release(self) -> None:
        """Return every block, control record included, to ``mem``."""
        for blk in self._owned_blocks():
            self.mem.deallocate(blk)
        self.mem.deallocate(self._ctl)
        self._N = 0

    def _owned_blocks(self) -> List[Block]:
        raise NotImplementedError

    def __getitem__(self, i: int) -> Any:
        return self.get(i)

    def __setitem__(self, i: int, a: Any) -> None:
        self.set(i, a)

    def __iter__(self) -> Iterator[Any]:
        for i in range(self._N):
            yield self.get(i)

    def to_list(self) -> list:
        return list(self)

    def __repr__(self):
        return f"{type(self).__name__}(N={self._N})"

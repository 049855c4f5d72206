"""Double-ended array from two end-growing tiered arrays placed back to back."""

from __future__ import annotations

from typing import Any, Iterator, Optional

from .space import Memory
from .tiered import TieredArray


class TieredDeque:
    """Deque with O(1) indexed access.

    ``front`` stores the left part reversed, so logical index ``i`` lives at
    ``front[len(front) - 1 - i]`` when ``i < len(front)`` and at
    ``back[i - len(front)]`` otherwise.  Popping from an empty side first
    moves the ``ceil(N/2)`` items nearest that end across, rebuilding both
    sides.
    """

    name = "deque"

    def __init__(self, r: int = 3, mem: Optional[Memory] = None, **params):
        self.mem = mem if mem is not None else Memory()
        self.r = r
        self._params = params
        self.front = TieredArray(r, self.mem, **params)
        self.back = TieredArray(r, self.mem, **params)
        self.rebalances = 0
        self.last_event: Optional[str] = None

    def __len__(self) -> int:
        return len(self.front) + len(self.back)

    def length(self) -> int:
        return len(self)

    @property
    def control_words(self) -> int:
        return self.front.control_words + self.back.control_words

    def push_back(self, a: Any) -> None:
        self.back.grow(a)
        self.last_event = self.back.last_event

    def push_front(self, a: Any) -> None:
        self.front.grow(a)
        self.last_event = self.front.last_event

    def pop_back(self) -> Any:
        self.last_event = None
        if not len(self.back):
            self._rebalance(to_back=True)
        a = self.back.get(len(self.back) - 1)
        self.back.shrink()
        self.last_event = self.last_event or self.back.last_event
        return a

    def pop_front(self) -> Any:
        self.last_event = None
        if not len(self.front):
            self._rebalance(to_back=False)
        a = self.front.get(len(self.front) - 1)
        self.front.shrink()
        self.last_event = self.last_event or self.front.last_event
        return a

    # ResizableArray-style aliases so the deque runs end-only workloads.
    grow = push_back

    def shrink(self) -> None:
        self.pop_back()

    def _rebalance(self, to_back: bool) -> None:
        N = len(self)
        if not N:
            raise IndexError("pop from empty deque")
        # The empty side receives the ceil(N/2) items nearest its end.
        cut = N // 2 if to_back else N - N // 2
        front = TieredArray(self.r, self.mem, **self._params)
        back = TieredArray(self.r, self.mem, **self._params)
        for i in range(cut - 1, -1, -1):
            front.grow(self.get(i))
        for i in range(cut, N):
            back.grow(self.get(i))
        self.front.release()
        self.back.release()
        self.front, self.back = front, back
        self.rebalances += 1
        self.last_event = "rebalance"

    def _side(self, i: int):
        nf = len(self.front)
        if not 0 <= i < nf + len(self.back):
            raise IndexError(f"index {i} out of range for length {len(self)}")
        if i < nf:
            return self.front, nf - 1 - i
        return self.back, i - nf

    def get(self, i: int) -> Any:
        side, j = self._side(i)
        return side.get(j)

    def set(self, i: int, a: Any) -> None:
        side, j = self._side(i)
        side.set(j, a)

    __getitem__ = get
    __setitem__ = set

    def __iter__(self) -> Iterator[Any]:
        front = self.front
        for j in range(len(front) - 1, -1, -1):
            yield front.get(j)
        yield from self.back

    def to_list(self) -> list:
        return list(self)

    def release(self) -> None:
        self.front.release()
        self.back.release()

    def audit(self) -> None:
        self.front.audit()
        self.back.audit()

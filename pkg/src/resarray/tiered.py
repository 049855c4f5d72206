"""Tiered resizable array with blocks of sizes B, B**2, ..., B**(r-1).

Level ``i >= 1`` holds ``n_i`` full blocks of ``B**i`` items; level 0 is a
single partially filled block of ``B`` words holding ``n_0 < B`` items.  The
digits ``(n_{r-1}, ..., n_1, n_0)`` form a redundant base-B representation
of the length ``N`` with ``n_i <= 2B``, maintained like a counter:

* grow fills the partial block; a block that fills up joins level 1, and
  when level 1 already has ``2B`` blocks the first ``B`` blocks of each
  saturated level are merged into one block of the next level (combine);
* shrink empties the partial block; when level 1 is exhausted the last
  block of the lowest non-empty level is cut into ``B - 1`` blocks of each
  intermediate size and ``B`` blocks of size ``B`` (split);
* ``B`` doubles when ``N`` reaches ``B**r`` and halves when ``N`` falls to
  ``(B/4)**r``, repacking everything (rebuild).

Lower indices live in larger blocks.  ``locate`` finds the level of an
index in O(1) from the packed digit words (see :mod:`resarray.bitkit`).

With chunking enabled, logical blocks larger than the threshold ``T`` are
stored as ``size / T`` chunks of ``T`` words behind a chunk index block, so
no restructuring ever needs more than about ``T`` words of scratch space.
"""

from __future__ import annotations

from collections import Counter
from typing import Any, List, Optional, Tuple, Union

from .base import ResizableArray
from .bitkit import PackedCounters, PrefixCounters, fits_packed
from .space import Block, Memory
from .transfer import Mover

ChunkSetting = Union[None, int, str]


class TieredArray(ResizableArray):
    name = "tiered"
    B_MIN = 4
    # N, r, b, n0, both packed digit words, chunk shift, spare pointer
    CONTROL_WORDS = 8

    def __init__(self, r: int = 3, mem: Optional[Memory] = None, *,
                 b0: int = 4, chunk: ChunkSetting = None,
                 counters: str = "auto"):
        if r < 2:
            raise ValueError("r must be at least 2")
        if b0 < self.B_MIN or b0 & (b0 - 1):
            raise ValueError(f"B must be a power of 2 >= {self.B_MIN}")
        if counters not in ("auto", "packed", "prefix"):
            raise ValueError(f"unknown counter mode {counters!r}")
        if chunk == 0:
            chunk = None
        if isinstance(chunk, int) and (chunk < 1 or chunk & (chunk - 1)):
            raise ValueError(f"chunk threshold must be a power of 2, got {chunk}")
        if chunk is not None and chunk != "auto" and not isinstance(chunk, int):
            raise ValueError(f"bad chunk setting {chunk!r}")
        super().__init__(mem)
        self.r = r
        self.chunk = chunk
        self.counter_mode = counters
        self.events: Counter = Counter()
        mem = self.mem
        # A.data[0] is the partial block (0 if none), A.data[i] the level-i index.
        self._A = mem.allocate(r)
        self._nblk = mem.allocate(r)
        self._n: List[int] = self._nblk.data
        self._prefix_blk: Optional[Block] = None
        self._spare: Optional[Block] = None
        self._configure(b0.bit_length() - 1)
        for i in range(1, r):
            self._A.data[i] = mem.allocate(self._index_len(i))

    # -- parameters ---------------------------------------------------------

    def _configure(self, b: int) -> None:
        r = self.r
        self.b = b
        self.B = B = 1 << b
        self._full = B ** r
        self._low = (B // 4) ** r if B > self.B_MIN else -1
        if self.chunk is None:
            t = None
        elif self.chunk == "auto":
            t = b * (r // 2)  # T = B ** ceil((r-1)/2)
        else:
            t = max(self.chunk.bit_length() - 1, b)
        self._t = t
        self._shift = [None if t is None or i * b <= t else t for i in range(r)]

        packed = self.counter_mode == "packed" or (
            self.counter_mode == "auto" and fits_packed(r, b))
        if packed:
            if self._prefix_blk is not None:
                self.mem.deallocate(self._prefix_blk)
                self._prefix_blk = None
            self._cnt = PackedCounters(b, r)
        else:
            if self._prefix_blk is None:
                self._prefix_blk = self.mem.allocate(r + 1)
            self._cnt = PrefixCounters(b, r, sums=self._prefix_blk.data)
        for i in range(r):
            if self._n[i]:
                self._cnt.set_digit(i, self._n[i])

    def _index_len(self, level: int) -> int:
        # n_{r-1} * B**(r-1) <= N <= B**r, so the top level never needs 2B slots.
        return self.B if level == self.r - 1 else 2 * self.B

    @property
    def chunk_size(self) -> Optional[int]:
        return None if self._t is None else 1 << self._t

    @property
    def counts(self) -> Tuple[int, ...]:
        """``(n_0, n_1, ..., n_{r-1})``."""
        return tuple(self._n)

    @property
    def control_words(self) -> int:
        extra = self._prefix_blk.length if self._prefix_blk is not None else 0
        return self.CONTROL_WORDS + 2 * self.r + extra

    def _setn(self, i: int, v: int) -> None:
        self._n[i] = v
        self._cnt.set_digit(i, v)

    # -- access -------------------------------------------------------------

    def locate(self, i: int) -> Tuple[int, int, int]:
        """``(level, block, offset)`` of item ``i``; level 0 is the partial block."""
        N = self._N
        if not 0 <= i < N:
            raise IndexError(f"index {i} out of range for length {N}")
        cnt = self._cnt
        b = self.b
        x = N - 1 - i
        l = (x.bit_length() - 1) // b if x else 0
        if l and x < cnt.prefix(l):
            k = l - 1
        elif x < cnt.prefix(l + 1):
            k = l
        else:
            k = cnt.next_nonzero(l)
        o = i - (N - cnt.prefix(k + 1))
        if k == 0:
            return 0, 0, o
        s = b * k
        return k, o >> s, o & ((1 << s) - 1)

    def get(self, i: int) -> Any:
        k, j, off = self.locate(i)
        if k == 0:
            return self._A.data[0].data[off]
        blk = self._A.data[k].data[j]
        t = self._shift[k]
        if t is None:
            return blk.data[off]
        return blk.data[off >> t].data[off & ((1 << t) - 1)]

    def set(self, i: int, a: Any) -> None:
        k, j, off = self.locate(i)
        if k == 0:
            blk = self._A.data[0]
        else:
            blk = self._A.data[k].data[j]
            t = self._shift[k]
            if t is not None:
                blk = blk.data[off >> t]
                off &= (1 << t) - 1
        blk.data[off] = a
        self.mem.assignments += 1

    # -- grow / shrink ------------------------------------------------------

    def grow(self, a: Any) -> None:
        self.last_event = None
        if self._N == self._full:
            self._rebuild(self.b + 1)
        n = self._n
        A = self._A.data
        n0 = n[0]
        if n0:
            P = A[0]
        elif self._spare is not None:
            P = A[0] = self._spare
            self._spare = None
        else:
            P = A[0] = self.mem.allocate(self.B)
        P.data[n0] = a
        self.mem.assignments += 1
        self._N += 1
        n0 += 1
        if n0 == self.B:
            if n[1] == self._A.data[1].length:
                self._combine()
            A[1].data[n[1]] = P
            self._setn(1, n[1] + 1)
            A[0] = 0
            n0 = 0
        self._setn(0, n0)

    def shrink(self) -> None:
        self._check_nonempty()
        self.last_event = None
        if self._N == self._low:
            self._rebuild(self.b - 1)
        n = self._n
        A = self._A.data
        n0 = n[0]
        if n0 == 0:
            if n[1] == 0:
                self._split()
            n1 = n[1] - 1
            A[0] = A[1].data[n1]
            A[1].data[n1] = 0
            self._setn(1, n1)
            n0 = self.B
        n0 -= 1
        self._N -= 1
        if n0 == 0:
            if self._spare is None:
                self._spare = A[0]
            else:
                self.mem.deallocate(A[0])
            A[0] = 0
        self._setn(0, n0)

    # -- restructuring ------------------------------------------------------

    def _segments(self, blocks):
        """Yield the physical segments of full logical blocks, freeing each once read.

        ``blocks`` holds ``(block, size, chunk_shift)`` triples.
        """
        free = self.mem.deallocate
        for blk, size, t in blocks:
            if t is None:
                yield blk, 0, size
            else:
                T = 1 << t
                for ch in blk.data:
                    yield ch, 0, T
                    free(ch)
            free(blk)

    def _new_block(self, level: int, mover: Mover) -> Block:
        size = 1 << (self.b * level)
        alloc = self.mem.allocate
        t = self._shift[level]
        if t is None:
            blk = alloc(size)
            mover.fill(blk, 0, size)
            return blk
        idx = alloc(size >> t)
        T = 1 << t
        for c in range(size >> t):
            ch = alloc(T)
            idx.data[c] = ch
            mover.fill(ch, 0, T)
        return idx

    def _combine(self) -> None:
        n, A, B = self._n, self._A.data, self.B
        k = next((i for i in range(1, self.r) if n[i] < A[i].length), None)
        if k is None:
            raise RuntimeError("combine: every level is saturated")
        for i in range(k - 1, 0, -1):
            idx = A[i]
            size = 1 << (self.b * i)
            srcs = [(idx.data[j], size, self._shift[i]) for j in range(B)]
            new = self._new_block(i + 1, Mover(self.mem, self._segments(srcs)))
            A[i + 1].data[n[i + 1]] = new
            self._setn(i + 1, n[i + 1] + 1)
            m = n[i]
            idx.data[0:m - B] = idx.data[B:m]
            idx.data[m - B:m] = [0] * B
            self._setn(i, m - B)
        self.events["combine"] += 1
        self.last_event = "combine"

    def _split(self) -> None:
        n, A, B = self._n, self._A.data, self.B
        k = next((i for i in range(2, self.r) if n[i] > 0), None)
        if k is None:
            raise RuntimeError("split: no block to split")
        last = n[k] - 1
        src = A[k].data[last]
        A[k].data[last] = 0
        self._setn(k, last)
        mover = Mover(self.mem, self._segments([(src, 1 << (self.b * k), self._shift[k])]))
        for j in range(k - 1, 0, -1):
            cnt = B if j == 1 else B - 1
            idx = A[j].data
            for c in range(cnt):
                idx[c] = self._new_block(j, mover)
            self._setn(j, cnt)
        mover.finish()
        self.events["split"] += 1
        self.last_event = "split"

    def _rebuild(self, b2: int) -> None:
        """Repack all items with ``B = 2**b2``, largest blocks first."""
        mem, r, N = self.mem, self.r, self._N
        A = self._A.data
        n = list(self._n)
        old_b, old_shift = self.b, list(self._shift)
        old_idx = list(A)
        if self._spare is not None:
            mem.deallocate(self._spare)
            self._spare = None
        for i in range(1, r):
            if n[i] == 0:
                mem.deallocate(old_idx[i])

        def segments():
            for i in range(r - 1, 0, -1):
                if n[i] == 0:
                    continue
                size = 1 << (old_b * i)
                idx = old_idx[i]
                yield from self._segments(
                    (idx.data[j], size, old_shift[i]) for j in range(n[i]))
                mem.deallocate(idx)
            if n[0]:
                yield old_idx[0], 0, n[0]
                mem.deallocate(old_idx[0])

        for i in range(r):
            self._n[i] = 0
        self._configure(b2)
        B2 = self.B
        counts = [0] * r
        rest = N
        for j in range(r - 1, 0, -1):
            counts[j] = min(rest >> (b2 * j), self._index_len(j))
            rest -= counts[j] << (b2 * j)
        if rest >= B2:
            raise RuntimeError(f"rebuild cannot place {N} items with B={B2}")

        mover = Mover(mem, segments())
        fresh = [j for j in range(r - 1, 0, -1) if counts[j]]
        for j in fresh:
            idx = A[j] = mem.allocate(self._index_len(j))
            for c in range(counts[j]):
                idx.data[c] = self._new_block(j, mover)
        A[0] = 0
        if rest:
            A[0] = mem.allocate(B2)
            mover.fill(A[0], 0, rest)
        mover.finish()
        for j in range(1, r):
            if j not in fresh:
                A[j] = mem.allocate(self._index_len(j))
        counts[0] = rest
        for i in range(r):
            self._setn(i, counts[i])
        self.events["rebuild"] += 1
        self.last_event = "rebuild"

    # -- bookkeeping --------------------------------------------------------

    def _owned_blocks(self) -> List[Block]:
        out = [self._A, self._nblk]
        if self._prefix_blk is not None:
            out.append(self._prefix_blk)
        if self._spare is not None:
            out.append(self._spare)
        A = self._A.data
        if self._n[0]:
            out.append(A[0])
        for i in range(1, self.r):
            idx = A[i]
            t = self._shift[i]
            for j in range(self._n[i]):
                blk = idx.data[j]
                if t is not None:
                    out.extend(blk.data)
                out.append(blk)
            out.append(idx)
        return out

    def audit(self) -> None:
        """Check every structural invariant; raises AssertionError on violation."""
        n, A, B, b, r = self._n, self._A.data, self.B, self.b, self.r
        assert self._N == sum(n[i] << (b * i) for i in range(r)), "length mismatch"
        assert 0 <= n[0] < B, f"n0={n[0]}"
        assert list(self._cnt.digits()) == list(n), "packed digits out of sync"
        for k in range(r + 1):
            assert self._cnt.prefix(k) == sum(n[i] << (b * i) for i in range(k))
        if n[0]:
            assert isinstance(A[0], Block) and A[0].valid and A[0].length == B
        else:
            assert A[0] == 0
        if self._spare is not None:
            assert self._spare.valid and self._spare.length == B
        for i in range(1, r):
            idx = A[i]
            assert idx.valid and idx.length == self._index_len(i)
            assert 0 <= n[i] <= idx.length, f"n{i}={n[i]}"
            size = 1 << (b * i)
            t = self._shift[i]
            for j in range(idx.length):
                blk = idx.data[j]
                if j >= n[i]:
                    assert blk == 0, f"stale handle at level {i} slot {j}"
                    continue
                assert blk.valid
                if t is None:
                    assert blk.length == size
                else:
                    assert blk.length == size >> t
                    for ch in blk.data:
                        assert ch.valid and ch.length == 1 << t
        if self.B > self.B_MIN and self._N:
            assert self._N <= self._full

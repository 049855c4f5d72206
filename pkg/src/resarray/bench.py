"""Workload runner that records allocator measurements as CSV rows.

Workloads are comma-separated phases applied in order:

``grow:C``                 C grows
``shrink:C``               C shrinks (must not go below zero)
``mix:C:P[:SEED]``         C random ops, grow with probability P; a shrink
                           drawn at N = 0 becomes a grow
``sawtooth:PEAK:CYCLES``   grow up to PEAK and back down, CYCLES times

Randomness comes from :class:`random.Random` (Mersenne Twister) seeded
explicitly, so a given command line always produces the same bytes.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .baseline import BrodnikArray, GeometricArray, HatArray, NaiveArray
from .deque import TieredDeque
from .space import Memory
from .tiered import TieredArray

CSV_HEADER = ("op_index", "op_kind", "N", "live_words",
              "peak_words_since_last_row", "assignments_total")

IMPLS = ("naive", "geometric", "hat", "brodnik", "tiered", "deque")


class WorkloadError(ValueError):
    pass


@dataclass(frozen=True)
class Phase:
    kind: str
    count: int = 0
    prob: float = 0.5
    seed: Optional[int] = None
    peak: int = 0
    cycles: int = 0


@dataclass
class WorkloadSpec:
    ops: str
    impl: str = "tiered"
    r: int = 3
    alpha: Fraction = Fraction(1)
    b0: int = 4
    chunk: Optional[str] = None
    seed: int = 0
    phases: List[Phase] = field(default_factory=list)

    def __post_init__(self):
        if not self.phases:
            self.phases = parse_ops(self.ops)
        # walk the op stream once so bad workloads fail before any output
        self.total_ops = sum(1 for _ in iter_ops(self.phases, self.seed))


def _nat(text: str, what: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise WorkloadError(f"{what} must be an integer, got {text!r}") from None
    if v < 0:
        raise WorkloadError(f"{what} must be >= 0, got {v}")
    return v


def parse_ops(text: str) -> List[Phase]:
    phases = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        bits = part.split(":")
        kind = bits[0]
        if kind in ("grow", "shrink") and len(bits) == 2:
            phases.append(Phase(kind, count=_nat(bits[1], "count")))
        elif kind == "mix" and len(bits) in (3, 4):
            try:
                p = float(bits[2])
            except ValueError:
                raise WorkloadError(f"bad probability {bits[2]!r}") from None
            if not 0.0 <= p <= 1.0:
                raise WorkloadError(f"probability {p} outside [0, 1]")
            seed = _nat(bits[3], "seed") if len(bits) == 4 else None
            phases.append(Phase("mix", count=_nat(bits[1], "count"), prob=p, seed=seed))
        elif kind == "sawtooth" and len(bits) == 3:
            phases.append(Phase("sawtooth", peak=_nat(bits[1], "peak"),
                                cycles=_nat(bits[2], "cycles")))
        else:
            raise WorkloadError(f"cannot parse workload phase {part!r}")
    if not phases:
        raise WorkloadError("empty workload")
    return phases


def iter_ops(phases: List[Phase], seed: int = 0) -> Iterator[str]:
    """Yield "grow" / "shrink" for the whole workload, validating as it goes."""
    N = 0
    for ph in phases:
        if ph.kind == "grow":
            N += ph.count
            for _ in range(ph.count):
                yield "grow"
        elif ph.kind == "shrink":
            if ph.count > N:
                raise WorkloadError(f"shrink:{ph.count} would go below zero at N={N}")
            N -= ph.count
            for _ in range(ph.count):
                yield "shrink"
        elif ph.kind == "mix":
            rng = random.Random(seed if ph.seed is None else ph.seed)
            for _ in range(ph.count):
                if N == 0 or rng.random() < ph.prob:
                    N += 1
                    yield "grow"
                else:
                    N -= 1
                    yield "shrink"
        else:
            if ph.peak < N:
                raise WorkloadError(f"sawtooth peak {ph.peak} is below N={N}")
            base = N
            for _ in range(ph.cycles):
                for _ in range(ph.peak - base):
                    yield "grow"
                for _ in range(ph.peak - base):
                    yield "shrink"


def parse_chunk(text: Optional[str]):
    if text is None or text in ("", "none", "off", "0"):
        return None
    if text == "auto":
        return "auto"
    try:
        T = int(text)
    except ValueError:
        raise WorkloadError(f"chunk must be 'auto', 'none' or a power of 2, got {text!r}") from None
    if T < 1 or T & (T - 1):
        raise WorkloadError(f"chunk threshold must be a power of 2, got {T}")
    return T


def make_array(impl: str, mem: Optional[Memory] = None, *, r: int = 3,
               alpha=Fraction(1), b0: int = 4, chunk=None):
    """Instantiate a registered implementation on ``mem``."""
    if impl not in IMPLS:
        raise WorkloadError(f"unknown implementation {impl!r}; choose from {', '.join(IMPLS)}")
    if impl in ("tiered", "deque") and not 2 <= r <= 8:
        raise WorkloadError(f"r must be in 2..8, got {r}")
    if b0 < 4 or b0 & (b0 - 1):
        raise WorkloadError(f"b0 must be a power of 2 >= 4, got {b0}")
    chunk = parse_chunk(chunk) if isinstance(chunk, str) or chunk is None else chunk
    if impl == "naive":
        return NaiveArray(mem)
    if impl == "geometric":
        try:
            return GeometricArray(mem, alpha=alpha)
        except ValueError as e:
            raise WorkloadError(str(e)) from None
    if impl == "hat":
        return HatArray(mem, b0=b0)
    if impl == "brodnik":
        return BrodnikArray(mem)
    if impl == "tiered":
        return TieredArray(r, mem, b0=b0, chunk=chunk)
    return TieredDeque(r, mem, b0=b0, chunk=chunk)


def run_bench(spec: WorkloadSpec, sample_every: int = 1000,
              out: Optional[io.TextIOBase] = None) -> List[Tuple]:
    """Run ``spec`` and return (and optionally write) the measurement rows.

    A row is taken every ``sample_every`` ops, after every structural event
    (combine, split, rebuild, resize, rebalance) and after the last op.
    ``peak_words_since_last_row`` is the allocator high-water mark since the
    previous row.  Deque workloads pick the end of each op with a second
    generator derived from the seed.
    """
    if sample_every < 1:
        raise WorkloadError("sample interval must be >= 1")
    mem = Memory()
    arr = make_array(spec.impl, mem, r=spec.r, alpha=spec.alpha, b0=spec.b0,
                     chunk=spec.chunk)
    ops = iter_ops(spec.phases, spec.seed)
    total = spec.total_ops
    rows: List[Tuple] = []
    writer = csv.writer(out, lineterminator="\n") if out is not None else None
    if writer:
        writer.writerow(CSV_HEADER)
    side = random.Random(spec.seed ^ 0x5EED) if spec.impl == "deque" else None
    mem.reset_peak()
    for idx, op in enumerate(ops, 1):
        if side is not None:
            end = "front" if side.random() < 0.5 else "back"
            if op == "grow":
                (arr.push_front if end == "front" else arr.push_back)(idx)
                kind = "push_" + end
            else:
                (arr.pop_front if end == "front" else arr.pop_back)()
                kind = "pop_" + end
        elif op == "grow":
            arr.grow(idx)
            kind = "grow"
        else:
            arr.shrink()
            kind = "shrink"
        if arr.last_event is not None:
            kind = f"{kind}/{arr.last_event}"
        elif idx % sample_every and idx != total:
            continue
        row = (idx, kind, len(arr), mem.live_words, mem.peak_words, mem.assignments)
        rows.append(row)
        if writer:
            writer.writerow(row)
        mem.reset_peak()
    return rows

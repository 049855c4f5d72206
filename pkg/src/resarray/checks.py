"""Invariant suites behind ``resarray verify``.

Each check returns a :class:`Check`; a suite is a list of them.  The sizes
default to values that finish in well under a minute; ``scale`` multiplies
the array lengths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, isqrt
from typing import Callable, Dict, List, Tuple

from .baseline import BrodnikArray, GeometricArray, HatArray
from .deque import TieredDeque
from .game import (BinomialCounter, cost_closed_form, cost_with_slack,
                   marginal, oracle_min_cost, optimal_states)
from .tiered import TieredArray


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def storage_bound(a: TieredArray) -> int:
    """Allowed ``live_words - N`` for a tiered array in its current state."""
    bound = (2 * a.r + 1) * (a.B + 1) + a.control_words
    if a.chunk_size is not None:
        # one chunk-index word per chunk of every chunked logical block
        bound += sum(a.counts[i] << (a.b * i) for i in range(a.r)) // a.chunk_size
    return bound


def peak_bound(a: TieredArray, B: int, T) -> int:
    """Allowed per-operation peak extra for a tiered array (unchunked if ``T`` is None)."""
    big = B ** (a.r - 1) if T is None else T
    return big + 2 * B + a.control_words


def tiered_grow_run(r: int, N: int, chunk=None) -> Dict[str, int]:
    """Grow a tiered array to ``N`` measuring every op; returns worst margins."""
    a = TieredArray(r, chunk=chunk)
    mem = a.mem
    worst_store = worst_peak = -10 ** 18
    scale_bad = 0
    for i in range(N):
        B_before, T_before = a.B, a.chunk_size
        before = mem.live_words
        mem.reset_peak()
        a.grow(i)
        B = max(B_before, a.B)
        T = None if T_before is None else max(T_before, a.chunk_size)
        worst_peak = max(worst_peak, mem.peak_words - before - peak_bound(a, B, T))
        worst_store = max(worst_store, mem.live_words - len(a) - storage_bound(a))
        n = len(a)
        if n > 4 ** r and not (a.B // 4) ** r <= n <= a.B ** r:
            scale_bad += 1
    return {"store_margin": worst_store, "peak_margin": worst_peak,
            "scale_violations": scale_bad, "assignments": mem.assignments,
            "events": sum(a.events.values())}


def suite_space(scale: float = 1.0) -> List[Check]:
    out = []
    N = max(1000, int(100_000 * scale))
    for r in (2, 3, 4):
        for chunk in (None, "auto"):
            m = tiered_grow_run(r, N, chunk)
            tag = f"tiered r={r} chunk={chunk or 'off'} N={N}"
            out.append(Check(f"{tag}: storage bound", m["store_margin"] <= 0,
                             f"worst margin {m['store_margin']}"))
            out.append(Check(f"{tag}: peak bound", m["peak_margin"] <= 0,
                             f"worst margin {m['peak_margin']}"))
            out.append(Check(f"{tag}: B within range", m["scale_violations"] == 0))
    hat = HatArray()
    bad = 0
    for i in range(min(N, 50_000)):
        hat.grow(i)
        if hat.mem.live_words > len(hat) + 3 * hat.B + 2 + hat.control_words:
            bad += 1
    out.append(Check("hat: live <= N + 3B + 2 + c0 after every grow", bad == 0, f"{bad} violations"))
    br = BrodnikArray()
    bad = 0
    for i in range(min(N, 50_000)):
        br.grow(i)
        n = len(br)
        if br.mem.live_words > n + 6 * isqrt(n) + 6 + br.control_words:
            bad += 1
    out.append(Check("brodnik: live <= N + O(sqrt N)", bad == 0, f"{bad} violations"))
    dq = TieredDeque(3)
    rng = random.Random(7)
    bad = 0
    for _ in range(min(N, 50_000)):
        if len(dq) and rng.random() < 0.4:
            (dq.pop_front if rng.random() < 0.5 else dq.pop_back)()
        else:
            (dq.push_front if rng.random() < 0.5 else dq.push_back)(0)
        allowed = storage_bound(dq.front) + storage_bound(dq.back)
        if dq.mem.live_words - len(dq) > allowed:
            bad += 1
    out.append(Check("deque: live <= N + both sides' overhead", bad == 0, f"{bad} violations"))
    return out


def suite_amortized(scale: float = 1.0) -> List[Check]:
    out = []
    N = max(1000, int(200_000 * scale))
    for r in (2, 3, 4):
        a = TieredArray(r)
        for i in range(N):
            a.grow(i)
        got = a.mem.assignments
        out.append(Check(f"tiered r={r} grow-only: assignments <= (2r+2)N",
                         got <= (2 * r + 2) * N, f"{got / N:.3f} per grow"))
        a = TieredArray(r)
        rng = random.Random(r)
        for i in range(N):
            if len(a) and rng.random() < 0.5:
                a.shrink()
            else:
                a.grow(i)
        got = a.mem.assignments
        out.append(Check(f"tiered r={r} mixed: assignments <= (5r+3)ops",
                         got <= (5 * r + 3) * N, f"{got / N:.3f} per op"))
    # the doubling bound is tight just after a resize, so measure at 2**m grows
    G = 1 << max(10, min(20, (N - 1).bit_length()))
    g = GeometricArray(alpha=1)
    for i in range(G):
        g.grow(i)
    out.append(Check(f"geometric alpha=1: assignments <= 2 per grow over {G} grows",
                     g.mem.assignments <= 2 * G, f"{g.mem.assignments / G:.3f}"))
    br = BrodnikArray()
    for i in range(N):
        br.grow(i)
    out.append(Check("brodnik grow-only: assignments == N", br.mem.assignments == N))
    return out


def suite_oracle(scale: float = 1.0) -> List[Check]:
    out = []
    nmax = 40 if scale >= 1 else 24
    for k in range(1, 6):
        T = oracle_min_cost(nmax, k)
        bad = [N for N in range(nmax + 1) if T.best[N] != cost_closed_form(N, k)]
        out.append(Check(f"closed form = oracle, k={k}, N<={nmax}", not bad, f"mismatches {bad[:5]}"))
        bad = [N for N in range(1, nmax + 1) if T.best[N] - T.best[N - 1] != marginal(N, k)]
        out.append(Check(f"marginal cost, k={k}", not bad, f"mismatches {bad[:5]}"))
        if k <= 4:
            bad = [N for N in range(min(nmax, 30) + 1)
                   if T.optimal_states(N) != optimal_states(N, k)]
            out.append(Check(f"optimal final states = box, k={k}", not bad, f"mismatches {bad[:5]}"))
    for l in (1, 2):
        for k in range(1, 5):
            T = oracle_min_cost(36, k, l)
            bad = [N for N in range(0, 37, l + 1) if T.best[N] != cost_with_slack(N, k, l)]
            out.append(Check(f"slack reduction l={l}, k={k}", not bad, f"mismatches {bad[:5]}"))
    emax = 25 if scale >= 1 else 15
    for k in range(1, 5):
        same = oracle_min_cost(emax, k).best == oracle_min_cost(emax, k, extended=True).best
        out.append(Check(f"extended moves change nothing, k={k}, N<={emax}", same))
    k = 4
    for n in range(6):
        c = BinomialCounter(k)
        for _ in range(comb(n + k, k) - 1):
            c.increment()
        ok = (c.a == [comb(n + i - 1, i) for i in range(1, k + 1)]
              and (k + 1) * c.total == k * n * comb(n + k, k))
        out.append(Check(f"binomial counter k=4 n={n}", ok, f"total {c.total}"))
    return out


def linear_locate(counts: Tuple[int, ...], B: int, i: int) -> Tuple[int, int, int]:
    """Reference locate: walk the levels from the largest blocks down."""
    start = 0
    for k in range(len(counts) - 1, 0, -1):
        size = B ** k
        span = counts[k] * size
        if i < start + span:
            return k, (i - start) // size, (i - start) % size
        start += span
    return 0, 0, i - start


def suite_access(scale: float = 1.0) -> List[Check]:
    out = []
    top = max(200, int(2000 * scale))
    for r in (2, 3, 4):
        bad = 0
        a = TieredArray(r)
        p = TieredArray(r, counters="prefix")

        def probe():
            nonlocal bad
            for i in range(len(a)):
                want = linear_locate(a.counts, a.B, i)
                if a.locate(i) != want or p.locate(i) != want or a.get(i) != i:
                    bad += 1
        for i in range(top):
            a.grow(i)
            p.grow(i)
            probe()
        for _ in range(top):
            a.shrink()
            p.shrink()
            probe()
        out.append(Check(f"locate = linear scan, r={r}, N<={top}, packed and prefix", bad == 0,
                         f"{bad} mismatches"))
    N = max(10_000, int(1_000_000 * scale))
    a = TieredArray(3)
    for i in range(N):
        a.grow(i)
    rng = random.Random(11)
    bad = 0
    for _ in range(100_000 if scale >= 1 else 10_000):
        i = rng.randrange(N)
        if a.locate(i) != linear_locate(a.counts, a.B, i) or a.get(i) != i:
            bad += 1
    out.append(Check(f"random probes at N={N}", bad == 0, f"{bad} mismatches"))
    return out


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "space": suite_space,
    "amortized": suite_amortized,
    "oracle": suite_oracle,
    "access": suite_access,
}


def run_suite(name: str, scale: float = 1.0, echo=print) -> bool:
    checks = SUITES[name](scale)
    for c in checks:
        echo(c.line())
    return all(c.ok for c in checks)


"""The growth game: closed forms, optimal final states and exact solvers.

``N`` items are inserted one at a time into ``k`` subarrays.  A state is
the vector ``a = (a_1, ..., a_k)`` of subarray sizes, with the empty
subarrays first (``a_i = 0`` implies ``a_{i-1} = 0``), plus the number of
vacant slots ``vac <= l`` in the first non-empty subarray.  A move either
fills a vacancy (cost 1) or, when there is none, is an ``[i]``-move: the
first ``i`` subarrays and the new item are copied into a fresh ``A_i`` of
``1 + a_1 + ... + a_i`` items (plus ``l`` vacancies), at that cost.  Using
an empty ``A_i`` this is the cost-1 allocation of a new subarray.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import heapq
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple


class ResourceLimit(RuntimeError):
    """The state space exceeded the configured limit."""


class GameState(NamedTuple):
    a: Tuple[int, ...]
    vac: int = 0

    @property
    def size(self) -> int:
        return sum(self.a)


class Move(NamedTuple):
    kind: str  # "fill", "new" or "merge"
    index: int  # 1-based subarray that receives the item
    cost: int
    state: GameState


def binom(n: int, k: int) -> int:
    """``C(n, k)`` with ``C(n, 0) = 1`` for every ``n``; zero for ``k < 0`` or ``n < k``."""
    if k == 0:
        return 1
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def rank_n(N: int, k: int) -> int:
    """Least ``n >= 0`` with ``N <= C(n+k, k) - 1``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    n = 0
    while N > comb(n + k, k) - 1:
        n += 1
    return n


def cost_closed_form(N: int, k: int) -> int:
    n = rank_n(N, k)
    return (N + 1) * n - comb(n + k, k + 1)


def marginal(N: int, k: int) -> int:
    """The ``n`` with ``C(n+k-1, k) <= N < C(n+k, k)``: the cost of the N-th insert."""
    if N < 1:
        raise ValueError("marginal cost is defined for N >= 1")
    return rank_n(N, k)


def amortized(N: int, k: int) -> float:
    return cost_closed_form(N, k) / N if N else 0.0


def in_p(a: Tuple[int, ...]) -> bool:
    """Zero-prefix condition: empty subarrays come first."""
    return all(x >= 0 for x in a) and all(
        a[i - 1] == 0 for i in range(1, len(a)) if a[i] == 0)


def q_bounds(N: int, k: int) -> List[Tuple[int, int]]:
    """Per-subarray ``(low, high)`` box of the optimal final states of size ``N``."""
    if N == 0:
        return [(0, 0)] * k
    n = marginal(N, k)
    return [(binom(n + i - 2, i), binom(n + i - 1, i)) for i in range(1, k + 1)]


def optimal_states(N: int, k: int) -> set:
    """Every zero-prefix state of size ``N`` inside the box of :func:`q_bounds`."""
    box = q_bounds(N, k)
    out = set()

    def rec(i: int, left: int, acc: list) -> None:
        if i < 0:
            if left == 0:
                a = tuple(acc[::-1])
                if in_p(a):
                    out.add(GameState(a))
            return
        lo, hi = box[i]
        rest_hi = sum(h for _, h in box[:i])
        for v in range(max(lo, left - rest_hi), min(hi, left) + 1):
            acc.append(v)
            rec(i - 1, left - v, acc)
            acc.pop()

    rec(k - 1, N, [])
    return out


def cost_with_slack(N: int, k: int, l: int) -> int:
    """Minimum cost with ``l`` vacancies allowed; needs ``(l+1) | N``."""
    if l < 0:
        raise ValueError("l must be >= 0")
    if N % (l + 1):
        raise ValueError(f"{l + 1} does not divide {N}; no closed form")
    return (l + 1) * cost_closed_form(N // (l + 1), k)


# -- brute-force oracle -------------------------------------------------------

def _canon(a: List[int]) -> Tuple[int, ...]:
    nz = [x for x in a if x]
    return (0,) * (len(a) - len(nz)) + tuple(nz)


def _moves(a: Tuple[int, ...], vac: int, l: int, extended: bool):
    """Yield ``(next_a, next_vac, cost, kind, index, adds_item)``."""
    k = len(a)
    z = 0
    while z < k and a[z] == 0:
        z += 1
    if vac:
        b = list(a)
        b[z] += 1
        yield tuple(b), vac - 1, 1, "fill", z + 1, True
        return
    # [i]-moves: A_1..A_i and the new item become A_i; i must not leave a gap.
    s = sum(a[:max(z, 1) - 1])
    for i in range(max(z, 1), k + 1):
        s += a[i - 1]
        b = (0,) * (i - 1) + (s + 1,) + a[i:]
        yield b, l, s + 1, "new" if s == 0 else "merge", i, True
    if not extended:
        return
    # Order-preserving merges of A_i..A_j without a new item.
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            s = sum(a[i - 1:j])
            if s == 0 or all(a[t] == 0 for t in range(i - 1, j - 1)):
                continue
            b = (0,) * (j - i) + a[:i - 1] + (s,) + a[j:]
            yield b, 0, s, "shift", j, False
    # I-moves: arbitrary subsets, with or without the new item.
    for size in range(1, k + 1):
        for I in combinations(range(k), size):
            s = sum(a[i] for i in I)
            b = list(a)
            for i in I:
                b[i] = 0
            b[I[-1]] = s + 1
            yield _canon(b), 0, s + 1, "imove", I[-1] + 1, True
            if size >= 2 and sum(1 for i in I if a[i]) >= 2:
                b[I[-1]] = s
                yield _canon(b), 0, s, "imove", I[-1] + 1, False


class CostTable:
    """Minimum cost of every reachable state of size ``<= N``."""

    def __init__(self, N: int, k: int, l: int, extended: bool,
                 costs: Dict[GameState, int], pred: Dict[GameState, Tuple]):
        self.N, self.k, self.l, self.extended = N, k, l, extended
        self.costs = costs
        self.pred = pred
        best = [None] * (N + 1)
        for st, c in costs.items():
            m = st.size
            if best[m] is None or c < best[m]:
                best[m] = c
        self.best: List[Optional[int]] = best

    @property
    def value(self) -> int:
        return self.best[self.N]

    def min_cost(self, m: int) -> int:
        return self.best[m]

    def optimal_states(self, m: Optional[int] = None) -> set:
        m = self.N if m is None else m
        c = self.best[m]
        return {st for st, v in self.costs.items() if st.size == m and v == c}

    def path(self, target: GameState) -> List[Move]:
        """Moves of one cheapest route from the empty state to ``target``."""
        out = []
        st = target
        while st in self.pred:
            prev, kind, idx, cost = self.pred[st]
            out.append(Move(kind, idx, cost, st))
            st = prev
        return out[::-1]


def oracle_min_cost(N: int, k: int, l: int = 0, extended: bool = False,
                    max_states: int = 3_000_000) -> CostTable:
    """Dijkstra over the explicit state graph, from the empty state up to size ``N``.

    ``extended`` adds the order-preserving merges without insertion and the
    arbitrary-subset merges (with or without the new item); it is only
    defined for ``l = 0``.
    """
    if k < 1 or N < 0 or l < 0:
        raise ValueError("need k >= 1, N >= 0, l >= 0")
    if extended and l:
        raise ValueError("extended moves are only defined for l = 0")
    start = ((0,) * k, 0)
    dist: Dict[Tuple, int] = {start: 0}
    pred: Dict[Tuple, Tuple] = {}
    done = set()
    heap = [(0, start, 0)]
    while heap:
        c, st, m = heapq.heappop(heap)
        if st in done:
            continue
        done.add(st)
        if len(done) > max_states:
            raise ResourceLimit(f"more than {max_states} states")
        a, vac = st
        for b, bvac, cost, kind, idx, adds in _moves(a, vac, l, extended):
            m2 = m + adds
            if m2 > N:
                continue
            nxt = (b, bvac)
            nc = c + cost
            if nc < dist.get(nxt, nc + 1):
                dist[nxt] = nc
                pred[nxt] = (st, kind, idx, cost)
                heapq.heappush(heap, (nc, nxt, m2))
    costs = {GameState(*s): v for s, v in dist.items()}
    preds = {GameState(*s): (GameState(*p[0]),) + p[1:] for s, p in pred.items()}
    return CostTable(N, k, l, extended, costs, preds)


# -- solver from the decomposition recurrence --------------------------------

def decompose_min_cost(N: int, k: int) -> int:
    """``C_{N,k}`` from ``C(a) = N + sum_j C_{a_j - 1, j}``, without any closed form.

    ``D(j, M)`` is the cheapest ``sum C_{a_i - 1, i}`` over zero-prefix states
    of size ``M`` on ``j`` subarrays.
    """
    if k < 1 or N < 0:
        raise ValueError("need k >= 1, N >= 0")
    INF = float("inf")
    C = [[0] * (k + 1) for _ in range(N + 1)]
    D = [[INF] * (N + 1) for _ in range(k + 1)]
    D[0][0] = 0
    for j in range(1, k + 1):
        D[j][0] = 0
    for M in range(1, N + 1):
        for j in range(1, k + 1):
            D[j][M] = min(C[x - 1][j] + D[j - 1][M - x] for x in range(1, M + 1))
        for j in range(1, k + 1):
            C[M][j] = M + D[j][M]
    return C[N][k]


# -- binomial counter --------------------------------------------------------

class BinomialCounter:
    """Counter ``b_1..b_k`` (with ``b_{k+1} = inf``) driving the unique optimal play."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.k = k
        self.a = [0] * k
        self.b = [0] * k
        self.total = 0
        self.steps = 0

    def increment(self) -> Move:
        a, b, k = self.a, self.b, self.k
        i = next(j for j in range(k) if j == k - 1 or b[j] < b[j + 1])
        cost = 1 + sum(a[:i + 1])
        a[i] = cost
        b[i] += 1
        for j in range(i):
            a[j] = 0
            b[j] = 0
        self.total += cost
        self.steps += 1
        kind = "new" if cost == 1 else "merge"
        return Move(kind, i + 1, cost, GameState(tuple(a)))


def counter_init(k: int) -> BinomialCounter:
    return BinomialCounter(k)


def counter_increment(counter: BinomialCounter) -> Tuple[Tuple[int, ...], Tuple[int, ...], int]:
    move = counter.increment()
    return tuple(counter.a), tuple(counter.b), move.cost


# -- optimal play ------------------------------------------------------------

def pick_optimal_state(N: int, k: int) -> GameState:
    """One member of the optimal box, filling the largest subarrays first."""
    box = q_bounds(N, k)
    a = [lo for lo, _ in box]
    left = N - sum(a)
    for i in range(k - 1, -1, -1):
        add = min(left, box[i][1] - a[i])
        a[i] += add
        left -= add
    if left or not in_p(tuple(a)):
        raise RuntimeError(f"no optimal state found for N={N}, k={k}")
    return GameState(tuple(a))


def _play(target: Tuple[int, ...]) -> Iterator[Tuple[int, int]]:
    """``(index, size)`` pairs of ``[index]``-moves reaching ``target``.

    Builds ``A_k`` by first playing an optimal game of size ``a_k - 1`` on
    ``A_1..A_k`` and merging it all, then recurses on ``A_1..A_{k-1}``.
    """
    k = len(target)
    for j in range(k, 0, -1):
        x = target[j - 1]
        if x == 0:
            break
        if x > 1:
            yield from _play(pick_optimal_state(x - 1, j).a)
        yield j, x


def optimal_replay(N: int, k: int) -> List[Move]:
    """A minimum-cost move sequence for the ``(N, k)`` game.

    At ``N = C(n+k, k) - 1`` this is the binomial counter's sequence (the
    only optimal one); otherwise it is built from the decomposition
    recurrence towards a state of the optimal box.
    """
    n = rank_n(N, k)
    if N == comb(n + k, k) - 1:
        ctr = BinomialCounter(k)
        moves = [ctr.increment() for _ in range(N)]
    else:
        moves = []
        a = [0] * k
        for idx, size in _play(pick_optimal_state(N, k).a):
            i = idx - 1
            cost = 1 + sum(a[:i + 1])
            if cost != size:
                raise RuntimeError("replay diverged from the target sizes")
            a[i] = cost
            for j in range(i):
                a[j] = 0
            moves.append(Move("new" if cost == 1 else "merge", idx, cost,
                              GameState(tuple(a))))
    total = sum(m.cost for m in moves)
    if total != cost_closed_form(N, k):
        raise RuntimeError(f"replay cost {total} is not optimal")
    return moves

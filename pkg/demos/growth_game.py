"""
The growth game
===============

A player keeps k subarrays.  Each move allocates a fresh subarray for the
next item and copies the contents of some prefix of the others into it.
The cheapest total cost has a closed form; here we check it against a plain
shortest-path search and watch the binomial counter play optimally.
"""

from math import comb

from resarray import game

# closed form next to the search
for k in (1, 2, 3):
    table = game.oracle_min_cost(20, k)
    row = [table.best[N] for N in range(21)]
    assert row == [game.cost_closed_form(N, k) for N in range(21)]
    print(f"k={k}: {row}")

# the optimal final states for N=4, k=2
print("optimal states N=4 k=2:", sorted(s.a for s in game.optimal_states(4, 2)))

# With N = C(n+k, k) - 1 the counter's moves are the unique optimal play.
k, n = 3, 4
ctr = game.BinomialCounter(k)
for _ in range(comb(n + k, k) - 1):
    ctr.increment()
print(f"counter after {comb(n + k, k) - 1} items: a={ctr.a} cost={ctr.total}",
      "closed form:", game.cost_closed_form(comb(n + k, k) - 1, k))

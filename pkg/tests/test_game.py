from math import comb

import pytest
from hypothesis import given, strategies as st

from resarray.game import (BinomialCounter, GameState, ResourceLimit, amortized, binom,
                           cost_closed_form, cost_with_slack, counter_increment,
                           counter_init, decompose_min_cost, marginal, optimal_replay,
                           optimal_states, oracle_min_cost, rank_n)


def test_rank_examples():
    assert rank_n(0, 3) == 0
    assert rank_n(5, 2) == 2
    assert rank_n(3, 2) == 2
    with pytest.raises(ValueError):
        rank_n(3, 0)


def test_closed_form_examples():
    for k in range(1, 6):
        for N in range(k + 1):
            assert cost_closed_form(N, k) == N
    assert cost_closed_form(5, 2) == 8
    assert cost_closed_form(3, 2) == 4


def test_boundary_both_ranks_agree():
    for k in range(1, 7):
        for n in range(8):
            N = comb(n + k, k) - 1
            alt = (N + 1) * (n + 1) - comb(n + 1 + k, k + 1)
            assert cost_closed_form(N, k) == alt


def test_marginal():
    assert marginal(1, 3) == 1
    assert marginal(4, 2) == 2
    with pytest.raises(ValueError):
        marginal(0, 2)
    for k in range(1, 7):
        total = 0
        for N in range(1, 201):
            total += marginal(N, k)
            assert total == cost_closed_form(N, k)


def test_optimal_state_examples():
    assert optimal_states(5, 2) == {GameState((2, 3))}
    assert optimal_states(4, 2) == {GameState((1, 3)), GameState((2, 2))}
    assert optimal_states(0, 3) == {GameState((0, 0, 0))}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_optimal_states_match_oracle(k):
    table = oracle_min_cost(20, k)
    for N in range(21):
        assert table.optimal_states(N) == optimal_states(N, k)
        for st_, c in table.costs.items():
            if st_.size == N and st_ not in optimal_states(N, k):
                assert c > table.best[N]


def test_slack_examples():
    assert cost_with_slack(7, 2, 0) == cost_closed_form(7, 2)
    assert cost_with_slack(10, 2, 1) == 16
    assert cost_with_slack(9, 3, 2) == 3 * cost_closed_form(3, 3)
    with pytest.raises(ValueError):
        cost_with_slack(7, 2, 1)
    assert oracle_min_cost(10, 2, 1).value == 16
    assert oracle_min_cost(9, 3, 2).value == 9


def test_oracle_trace():
    table = oracle_min_cost(3, 2)
    assert table.value == 4
    path = table.path(GameState((2, 1)))
    assert [m.state.a for m in path] == [(0, 1), (1, 1), (2, 1)]
    assert [m.cost for m in path] == [1, 1, 2]


def test_oracle_single_subarray():
    table = oracle_min_cost(30, 1)
    assert table.best == [N * (N + 1) // 2 for N in range(31)]


def test_extended_moves_small():
    for k in (2, 3):
        assert oracle_min_cost(14, k, extended=True).best == oracle_min_cost(14, k).best


def test_oracle_limits():
    with pytest.raises(ResourceLimit):
        oracle_min_cost(40, 4, max_states=1000)
    with pytest.raises(ValueError):
        oracle_min_cost(5, 2, l=1, extended=True)


def test_decompose_solver():
    for k in range(1, 7):
        for N in range(61):
            assert decompose_min_cost(N, k) == cost_closed_form(N, k)


def test_counter_first_steps():
    c = counter_init(4)
    trace = [counter_increment(c) for _ in range(5)]
    assert [b for _, b, _ in trace[:4]] == [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 1)]
    assert trace[3][0] == (1, 1, 1, 1)
    assert trace[4] == ((0, 0, 0, 5), (0, 0, 0, 2), 5)


@pytest.mark.parametrize("k", range(1, 7))
def test_counter_identity(k):
    c = BinomialCounter(k)
    for _ in range(10_000):
        c.increment()
        assert c.a == [comb(c.b[i] + i, i + 1) for i in range(k)]


def test_replay_examples():
    moves = optimal_replay(5, 2)
    assert sum(m.cost for m in moves) == 8
    assert moves[-1].state.a == (2, 3)
    moves = optimal_replay(4, 4)
    assert [m.state.a for m in moves] == [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 1)]
    assert sum(m.cost for m in moves) == 4


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_replay_matches_oracle(k):
    table = oracle_min_cost(25, k)
    for N in range(26):
        moves = optimal_replay(N, k)
        assert len(moves) == N
        assert sum(m.cost for m in moves) == table.best[N]
        if N:
            assert table.costs[moves[-1].state] == table.best[N]


def test_amortized_lower_bound():
    for k in range(1, 6):
        for N in range(1, 300):
            n = rank_n(N, k)
            assert 2 * amortized(N, k) >= n - 1


@given(st.integers(0, 64), st.integers(0, 64))
def test_binomial_sum_identity(n, k):
    assert sum(binom(n + i - 1, i) for i in range(k + 1)) == comb(n + k, k)


def test_binom_edges():
    assert binom(-1, 0) == 1 and binom(-1, 1) == 0
    assert binom(3, -1) == 0 and binom(2, 3) == 0 and binom(5, 2) == 10

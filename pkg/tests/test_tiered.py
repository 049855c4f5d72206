import random

import pytest
from hypothesis import given, settings, strategies as st

from resarray import TieredArray
from resarray.checks import linear_locate


def driven(r, grows, shrinks=0, **kw):
    a = TieredArray(r, **kw)
    for i in range(grows):
        a.grow(i)
    for _ in range(shrinks):
        a.shrink()
    return a


def delta(a, op):
    before = a.mem.assignments
    op()
    return a.mem.assignments - before


def data_words(a):
    A = a._A.data
    words = A[0].length if a.counts[0] else 0
    for i in range(1, a.r):
        words += a.counts[i] * a.B ** i
    return words


def test_five_grows():
    a = driven(3, 5)
    assert len(a) == 5 and a.counts == (1, 1, 0)
    assert data_words(a) == 8
    assert a.mem.assignments == 5


def test_combine_on_full_level_one():
    a = driven(3, 35)
    assert a.counts == (3, 8, 0)
    assert delta(a, lambda: a.grow(35)) == 16 + 1
    assert a.last_event == "combine"
    assert a.counts == (0, 5, 1)
    assert a.to_list() == list(range(36))


def test_combine_cascades():
    a = driven(4, 227)
    assert a.counts == (3, 8, 8, 1)
    assert delta(a, lambda: a.grow(227)) == 64 + 16 + 1
    assert a.counts == (0, 5, 5, 2)
    a.audit()


def test_grow_rebuild_doubles_b():
    a = driven(3, 64)
    assert a.B == 4 and a.counts == (0, 8, 2)
    assert delta(a, lambda: a.grow(64)) == 64 + 1
    # all 64 items now sit in one block of 8**2, plus the new item
    assert a.B == 8 and a.counts == (1, 0, 1)
    assert a.to_list() == list(range(65))


def test_last_shrink_keeps_spare():
    a = driven(3, 1)
    a.shrink()
    assert len(a) == 0
    c0 = a.control_words
    index_words = 2 * a.B + a.B
    assert a.mem.live_words == c0 + index_words + a.B
    assert a._spare is not None


def test_split():
    a = driven(3, 52, 20)
    assert a.counts == (0, 0, 2)
    assert delta(a, a.shrink) == 16
    assert a.last_event == "split"
    assert a.counts == (3, 3, 1)
    assert a.to_list() == list(range(31))


def test_split_r4():
    a = driven(4, 164, 100)
    assert a.counts == (0, 0, 0, 1)
    assert delta(a, a.shrink) == 64
    assert a.counts == (3, 3, 3, 0)


def test_shrink_rebuild_halves_b():
    a = driven(3, 65, 57)
    assert a.B == 8 and len(a) == 8
    assert delta(a, a.shrink) == 8
    assert a.B == 4 and a.last_event == "rebuild"
    assert a.counts == (3, 1, 0)


def test_no_rebuild_below_min():
    a = driven(2, 17, 17)
    # up to B=8 at N=16, back to 4 at N=(8/4)**2, and never below
    assert a.B == 4 and a.events["rebuild"] == 2


@pytest.mark.parametrize("i, want", [(0, (2, 0, 0)), (40, (1, 2, 0)), (45, (0, 0, 1))])
def test_locate_examples(i, want):
    a = driven(3, 52, 6)
    assert a.counts == (2, 3, 2) and len(a) == 46
    assert a.locate(i) == want == linear_locate(a.counts, a.B, i)


def test_locate_range():
    a = driven(3, 10)
    with pytest.raises(IndexError):
        a.locate(10)
    with pytest.raises(IndexError):
        a.get(-1)


def test_shrink_empty():
    with pytest.raises(IndexError):
        TieredArray(3).shrink()


def test_chunked_block_layout():
    a = TieredArray(3, b0=16, chunk=64)
    for i in range(16 * 16 * 3):
        a.grow(i)
    assert a.counts[2] >= 1
    big = a._A.data[2].data[0]
    assert big.length == 4 and all(ch.length == 64 for ch in big.data)
    assert a.to_list() == list(range(16 * 16 * 3))


@pytest.mark.parametrize("bad", [3, 0.5, "big", -4])
def test_chunk_config_errors(bad):
    with pytest.raises(ValueError):
        TieredArray(3, chunk=bad)


def test_bad_params():
    for kw in ({"r": 1}, {"b0": 6}, {"b0": 2}, {"counters": "x"}):
        with pytest.raises(ValueError):
            TieredArray(**kw)


def test_wide_counters_fall_back_to_prefix():
    a = TieredArray(8, b0=256)
    assert type(a._cnt).__name__ == "PrefixCounters"
    for i in range(3000):
        a.grow(i)
    assert all(a.get(i) == i for i in range(0, 3000, 7))
    a.audit()


@pytest.mark.parametrize("r", [2, 3, 4])
def test_packed_and_prefix_agree(r):
    a, p = TieredArray(r), TieredArray(r, counters="prefix")
    rng = random.Random(r)
    for step in range(3000):
        if len(a) and rng.random() < 0.45:
            a.shrink()
            p.shrink()
        else:
            a.grow(step)
            p.grow(step)
        if step % 50 == 0:
            assert [a.locate(i) for i in range(len(a))] == [p.locate(i) for i in range(len(p))]


@pytest.mark.parametrize("r", [2, 3, 4, 5])
@pytest.mark.parametrize("chunk", [None, "auto", 16])
def test_shadow_with_audit(r, chunk):
    rng = random.Random(100 * r + (chunk == "auto"))
    a, s = TieredArray(r, chunk=chunk), []
    for step in range(20_000):
        p = rng.random()
        if p < 0.5 or not s:
            a.grow(step)
            s.append(step)
        elif p < 0.85:
            a.shrink()
            s.pop()
        else:
            i = rng.randrange(len(s))
            a.set(i, -step)
            s[i] = -step
        if step % 211 == 0:
            a.audit()
            assert a.to_list() == s
    assert a.to_list() == s
    a.release()
    assert a.mem.live_words == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.sampled_from([None, "auto", 8]),
       st.lists(st.integers(-3, 10), max_size=400))
def test_shadow_hypothesis(r, chunk, script):
    # positive numbers grow that many items, negative shrink
    a, s = TieredArray(r, chunk=chunk), []
    for x in script:
        if x >= 0:
            for _ in range(x * 7):
                a.grow(len(s))
                s.append(len(s))
        else:
            for _ in range(min(-x * 11, len(s))):
                a.shrink()
                s.pop()
        a.audit()
    assert a.to_list() == s

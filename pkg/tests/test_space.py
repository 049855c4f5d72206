import pytest
from hypothesis import given, strategies as st

from resarray.space import InvalidHandle, Memory, SpaceReport


def test_allocate_counts_words():
    mem = Memory()
    mem.allocate(4)
    assert (mem.live_words, mem.peak_words) == (4, 4)


def test_free_keeps_peak():
    mem = Memory()
    a = mem.allocate(4)
    mem.allocate(16)
    mem.deallocate(a)
    assert (mem.live_words, mem.peak_words) == (16, 20)


def test_zero_length_rejected():
    with pytest.raises(ValueError):
        Memory().allocate(0)


def test_double_free():
    mem = Memory()
    h = mem.allocate(7)
    mem.deallocate(h)
    assert (mem.live_words, mem.peak_words) == (0, 7)
    with pytest.raises(InvalidHandle):
        mem.deallocate(h)


def test_foreign_handle():
    h = Memory().allocate(3)
    with pytest.raises(InvalidHandle):
        Memory().deallocate(h)


def test_allocate_before_free_peak():
    # each new block is allocated before the previous one is released
    mem = Memory()
    prev = None
    for size in (1, 2, 3):
        blk = mem.allocate(size)
        if prev is not None:
            mem.deallocate(prev)
        prev = blk
    assert mem.peak_words == 5


def test_read_write():
    mem = Memory()
    h = mem.allocate(2)
    assert mem.read(h, 1) == 0
    mem.write(h, 0, 42)
    assert mem.read(h, 0) == 42
    with pytest.raises(IndexError):
        mem.read(h, 2)
    mem.deallocate(h)
    with pytest.raises(InvalidHandle):
        mem.read(h, 0)


def test_snapshot_and_reset():
    mem = Memory()
    assert mem.snapshot() == SpaceReport(0, 0, 0, 0)
    a = mem.allocate(5)
    assert mem.snapshot() == SpaceReport(5, 5, 1, 0)
    mem.reset_peak()
    b = mem.allocate(3)
    mem.deallocate(a)
    mem.deallocate(b)
    assert mem.peak_words == 8


def test_report_csv():
    rep = SpaceReport(3, 9, 2, 1)
    assert SpaceReport.csv_header() == "live_words,peak_words,allocations,deallocations"
    assert rep.csv_row() == "3,9,2,1"


def test_copy_counts_assignments():
    mem = Memory()
    x, y = mem.allocate(6), mem.allocate(6)
    x.data[:] = range(6)
    mem.copy(x, 1, y, 2, 4)
    assert y.data == [0, 0, 1, 2, 3, 4]
    assert mem.assignments == 4
    with pytest.raises(IndexError):
        mem.copy(x, 3, y, 0, 4)


@given(st.lists(st.tuples(st.booleans(), st.integers(1, 50)), max_size=60))
def test_live_matches_shadow(script):
    mem = Memory()
    held = []
    peak = 0
    for alloc, size in script:
        if alloc or not held:
            held.append(mem.allocate(size))
        else:
            mem.deallocate(held.pop(size % len(held)))
        live = sum(b.length for b in held)
        peak = max(peak, live)
        assert mem.live_words == live
        assert mem.peak_words == peak
    assert sorted(b.id for b in mem.live_blocks()) == sorted(b.id for b in held)

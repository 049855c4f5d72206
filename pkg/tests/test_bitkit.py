import random

import pytest
from hypothesis import given, strategies as st

from resarray.bitkit import PackedCounters, PrefixCounters, fits_packed, lsb, msb


def slow_msb(x):
    i = -1
    while x:
        x >>= 1
        i += 1
    return i


def slow_lsb(x):
    i = 0
    while not x & 1:
        x >>= 1
        i += 1
    return i


def test_examples():
    assert msb(1) == 0 and msb(45) == 5
    assert lsb(1) == 0 and lsb(12) == 2
    for f in (msb, lsb):
        with pytest.raises(ValueError):
            f(0)


def test_bits_exhaustive_16():
    for x in range(1, 1 << 16):
        assert msb(x) == slow_msb(x)
        assert lsb(x) == slow_lsb(x) == msb(x & -x)


def test_bits_random_64():
    rng = random.Random(3)
    for _ in range(5000):
        x = rng.getrandbits(64) or 1
        assert msb(x) == slow_msb(x) and lsb(x) == slow_lsb(x)


def test_digit_encoding():
    pc = PackedCounters(2, 3)
    assert [pc.digit(j) for j in range(3)] == [0, 0, 0]
    for j, v in enumerate((1, 3, 2)):
        pc.set_digit(j, v)
    assert pc.digit(1) == 3
    assert pc.lo == 0b10_11_01 and pc.hi == 0
    pc.set_digit(0, 8)
    assert pc.digit(0) == 8 and (pc.lo & 3, pc.hi & 3) == (0, 2)
    with pytest.raises(IndexError):
        pc.digit(3)


def test_prefix_example():
    pc = PackedCounters(2, 3)
    for j, v in enumerate((2, 3, 2)):
        pc.set_digit(j, v)
    assert pc.prefix(0) == 0
    assert pc.prefix(2) == 14
    assert pc.prefix(3) == 46
    with pytest.raises(IndexError):
        pc.prefix(4)


def test_digit_range_checked():
    with pytest.raises(ValueError):
        PackedCounters(2, 3).set_digit(0, 9)


def test_pack_limit():
    assert fits_packed(31, 2) and not fits_packed(32, 2)
    with pytest.raises(ValueError):
        PackedCounters(8, 8)


def test_increment_moves_lo_by_one_unit():
    pc = PackedCounters(3, 4)
    pc.set_digit(2, 5)
    before = pc.lo
    pc.set_digit(2, 6)
    assert pc.lo - before == 1 << 6


@st.composite
def digit_vectors(draw):
    b = draw(st.integers(2, 6))
    r = draw(st.integers(1, 62 // b))
    digits = draw(st.lists(st.integers(0, 2 << b), min_size=r, max_size=r))
    return b, digits


@given(digit_vectors())
def test_packed_matches_arithmetic(case):
    b, digits = case
    r = len(digits)
    pc, px = PackedCounters(b, r), PrefixCounters(b, r)
    for j, v in enumerate(digits):
        pc.set_digit(j, v)
        px.set_digit(j, v)
    assert pc.digits() == px.digits() == digits
    for k in range(r + 1):
        want = sum(v << (b * j) for j, v in enumerate(digits[:k]))
        assert pc.prefix(k) == px.prefix(k) == want
    for level in range(r):
        above = [j for j in range(level + 1, r) if digits[j]]
        if above:
            assert pc.next_nonzero(level) == px.next_nonzero(level) == above[0]
        else:
            with pytest.raises(LookupError):
                pc.next_nonzero(level)
            with pytest.raises(LookupError):
                px.next_nonzero(level)

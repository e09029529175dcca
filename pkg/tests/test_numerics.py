from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pointfree.dyadic import Dyadic
from pointfree.zset import (
    ZSet,
    format_path,
    parse_path,
    path_relation,
    path_tlam,
    pred,
    succ,
    zo_step,
)

from conftest import nonzero, paths

dyadics = st.builds(Dyadic, st.integers(-(2**40), 2**40), st.integers(0, 40))


@given(dyadics, dyadics)
def test_dyadic_arithmetic_matches_fractions(x, y):
    fx, fy = x.to_fraction(), y.to_fraction()
    assert (x + y).to_fraction() == fx + fy
    assert (x - y).to_fraction() == fx - fy
    assert (x * y).to_fraction() == fx * fy
    assert (x < y) == (fx < fy)
    assert (x == y) == (fx == fy)


@given(dyadics)
def test_dyadic_text_round_trip(x):
    assert Dyadic.parse(str(x)) == x
    assert Fraction(x.decimal()) == x.to_fraction()


def test_dyadic_is_reduced():
    assert Dyadic(6, 3) == Dyadic(3, 2)
    assert (Dyadic(6, 3).m, Dyadic(6, 3).e) == (3, 2)
    assert str(Dyadic(1, 2) + Dyadic(1, 2)) == "1/2"
    with pytest.raises(ValueError):
        Dyadic.parse("1/3")


def test_zo_step_skips_zero():
    assert zo_step(1, "down") == -1
    assert zo_step(-1, "up") == 1
    assert zo_step(5, "down") == 4


@given(nonzero)
def test_zo_step_round_trip(n):
    assert zo_step(zo_step(n, "up"), "down") == n
    assert zo_step(n, "up") != 0 and zo_step(n, "down") != 0


def test_zset_examples():
    assert str(~ZSet.of(1)) == "{..-1,2..}"
    assert ZSet.of(1, 2) & ZSet.of(2, 3) == ZSet.of(2)
    u = ZSet.parse("{-3..-1}") | ZSet.parse("{1..4}")
    assert str(u) == "{-3..4}" and len(u.bounds()) == 1
    assert succ(1) == ZSet.parse("{2..}")
    assert pred(-2) == ZSet.parse("{..-3}")


small_sets = st.lists(st.tuples(st.integers(-8, 8), st.integers(0, 5), st.sampled_from("fud")), max_size=4)


def _zset(runs):
    out = ZSet.empty()
    for lo, width, kind in runs:
        lo = lo or 1
        if kind == "f":
            hi = lo
            for _ in range(width):
                hi = zo_step(hi, "up")
            out = out | ZSet.interval(lo, hi)
        elif kind == "u":
            out = out | ZSet.interval(lo, None)
        else:
            out = out | ZSet.interval(None, lo)
    return out


zsets = small_sets.map(_zset)


@given(zsets, zsets, zsets)
def test_zset_boolean_laws(a, b, c):
    assert a | (b & c) == (a | b) & (a | c)
    assert ~(a | b) == ~a & ~b
    assert ~~a == a
    assert (a - b) == a & ~b
    assert (a | ~a).is_full() and (a & ~a).is_empty()


@given(zsets, st.integers(-12, 12).filter(bool))
def test_zset_membership_matches_runs(a, n):
    inside = any((lo is None or lo <= n) and (hi is None or n <= hi) for lo, hi in a.bounds())
    assert (n in a) == inside
    assert (n in ~a) != inside


@given(zsets)
def test_zset_text_round_trip(a):
    assert ZSet.parse(str(a)) == a


def test_tlam_examples():
    assert path_tlam((3, 2)) == (3, 1)
    assert path_tlam((3, 1)) == (3, -1)
    assert path_tlam((5,)) == (4,)


def test_path_relation_examples():
    assert path_relation((1,), (1, 5)) == "u-extends-t"
    assert path_relation((1, 2), (1, 3)) == "incomparable"
    assert path_relation((), (7,)) == "u-extends-t"
    assert path_relation((1, 5), (1,)) == "t-extends-u"
    assert path_relation((2,), (2,)) == "equal"


@given(paths, paths)
def test_path_relation_is_prefix_order(t, u):
    rel = path_relation(t, u)
    flipped = {"u-extends-t": "t-extends-u", "t-extends-u": "u-extends-t"}.get(rel, rel)
    assert path_relation(u, t) == flipped
    assert (rel in ("equal", "u-extends-t")) == (u[: len(t)] == t)


@given(paths)
def test_path_text_round_trip(t):
    assert parse_path(format_path(t)) == t

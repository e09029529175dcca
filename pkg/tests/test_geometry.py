import random
from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from pointfree.axioms import random_region
from pointfree.dyadic import Dyadic
from pointfree.geometry import (
    IntervalSet,
    child_cell,
    closure_contains,
    closure_sketch,
    contact_point,
    delta_interval,
    geo_contact,
    region_from_intervals,
)
from pointfree.region import Cone, Q, Region, make_generator
from pointfree.sweeps import geo_matrix
from pointfree.zset import ZSet, zo_step

from conftest import paths, seeds

KINDS = ("real", "interval", "circle")


def cell_by_hand(t):
    a, length = Fraction(0), Fraction(1)
    for j in t:
        if j > 0:
            lo, hi = 1 - Fraction(1, 2**j), 1 - Fraction(1, 2 ** (j + 1))
        else:
            lo, hi = Fraction(2) ** (j - 1), Fraction(2) ** j
        a, length = a + length * lo, length * (hi - lo)
    return a, a + length


def test_delta_examples():
    assert str(delta_interval((1,))) == "[1/2, 3/4]"
    assert str(delta_interval((-1,))) == "[1/4, 1/2]"
    assert str(delta_interval((1, 1))) == "[5/8, 11/16]"


@given(paths)
def test_delta_matches_hand_formula(t):
    iv = delta_interval(t)
    assert (iv.lo.to_fraction(), iv.hi.to_fraction()) == cell_by_hand(t)


@given(st.integers(-30, 30).filter(bool))
def test_children_tile_the_cell(j):
    left, e = child_cell(j)
    nxt, _ = child_cell(zo_step(j, "up"))
    assert left + Dyadic.pow2(-e) == nxt
    assert child_cell(-1)[0] + Dyadic.pow2(-child_cell(-1)[1]) == Dyadic(1, 1) == child_cell(1)[0]


def test_closure_examples():
    assert str(closure_sketch(Region.from_constraints({1: ZSet.parse("{2..}")}))) == "[3/4, 1]"
    assert str(closure_sketch(make_generator(Q((1,), 1)))) == "[7/16, 9/16]"
    sk = closure_sketch(Region.from_constraints({1: ZSet.parse("{2..}"), 2: ZSet.of(1)}))
    assert not sk.solid and len(sk.tails) == 1
    t = sk.tails[0]
    assert (t.anchor, t.side, t.node, t.start, str(t.residual)) == (Dyadic(1), "left", (), 2, "cone(1)")


@given(paths, st.integers(1, 6))
def test_q_closure_formula(t, n):
    # [a - L' 2^-(n+1), a + L 2^-(n+1)] with a the left end of the cell of t
    lo, hi = cell_by_hand(t)
    tl = t[:-1] + (zo_step(t[-1], "down"),)
    llo, lhi = cell_by_hand(tl)
    want = (lo - (lhi - llo) / 2 ** (n + 1), lo + (hi - lo) / 2 ** (n + 1))
    sk = closure_sketch(make_generator(Q(t, n)))
    assert not sk.tails and len(sk.solid) == 1
    iv = sk.solid.intervals[0]
    assert (iv.lo.to_fraction(), iv.hi.to_fraction()) == want


def grid(seed, count=80, e=12):
    rng = random.Random(seed)
    return [Dyadic(rng.randint(0, 2**e), e) for _ in range(count)]


@given(seeds, seeds)
def test_sketch_agrees_with_point_membership(s1, s2):
    a = random_region(s1, 2)
    sk = closure_sketch(a)
    for x in grid(s2):
        assert sk.contains(x) == closure_contains(a, x)


@given(seeds, seeds, seeds)
def test_closure_is_additive_over_joins(s1, s2, s3):
    a, b = random_region(s1, 2), random_region(s2, 2)
    ska, skb, skab = closure_sketch(a), closure_sketch(b), closure_sketch(a | b)
    for x in grid(s3):
        assert skab.contains(x) == (ska.contains(x) or skb.contains(x))


@given(seeds, seeds)
def test_closure_is_monotone(s1, s2):
    a, b = random_region(s1, 2), random_region(s2, 2)
    small = a & b
    sk_small, sk_a = closure_sketch(small), closure_sketch(a)
    for x in grid(s1 ^ s2, count=40):
        if sk_small.contains(x):
            assert sk_a.contains(x)


dyadic_ends = st.lists(st.integers(0, 2**7), min_size=2, max_size=6, unique=True).map(sorted)


@given(dyadic_ends)
def test_region_from_intervals_round_trip(ends):
    pairs = [(Dyadic(ends[i], 7), Dyadic(ends[i + 1], 7)) for i in range(0, len(ends) - 1, 2)]
    s = IntervalSet(pairs)
    sk = closure_sketch(region_from_intervals(s))
    assert not sk.tails
    assert sk.solid == s


def test_region_from_intervals_examples():
    def r(text):
        return str(region_from_intervals(IntervalSet.parse(text)))

    assert r("[1/4, 1/2]") == "cone(-1)"
    assert r("[0, 1/2]") == "phi(1,{..-1})"
    assert r("[1/2, 9/16]") == "cone(1)*phi(2,{..-2})"


def test_geo_contact_examples():
    c1, c2 = make_generator(Cone((1,))), make_generator(Cone((2,)))
    assert geo_contact(c1, c2, "real") and geo_contact(c1, c2, "interval")
    down1 = Region.from_constraints({1: ZSet.parse("{..-2}")})
    up1 = Region.from_constraints({1: ZSet.parse("{2..}")})
    assert not geo_contact(down1, up1, "interval")
    assert geo_contact(down1, up1, "circle")
    left = Region.from_constraints({1: ZSet.parse("{..-1}")})
    right = Region.from_constraints({1: ZSet.parse("{1..}")})
    assert geo_contact(left, right, "interval") and geo_contact(left, right, "circle")
    assert geo_contact(left, right, "real")
    assert contact_point(left, right, "real") == Dyadic(1, 1)


@given(seeds, seeds, st.sampled_from(KINDS))
def test_geo_contact_is_sound_both_ways(s1, s2, kind):
    a, b = random_region(s1, 2), random_region(s2, 2)
    p = contact_point(a, b, kind)
    assert (p is not None) == geo_contact(a, b, kind)
    if p is not None:
        if kind == "circle" and p == Dyadic(0):
            ends = (Dyadic(0), Dyadic(1))
            assert any(closure_contains(a, e) for e in ends) and any(closure_contains(b, e) for e in ends)
        else:
            assert closure_contains(a, p) and closure_contains(b, p)
            if kind != "interval":
                assert Dyadic(0) < p < Dyadic(1)
    else:
        for x in grid(s1 + s2, count=60):
            inner = Dyadic(0) < x < Dyadic(1)
            if kind == "interval" or inner:
                assert not (closure_contains(a, x) and closure_contains(b, x))


@given(seeds, seeds)
def test_tail_free_sketches_decide_contact(s1, s2):
    a, b = random_region(s1, 2, bounded=True), random_region(s2, 2, bounded=True)
    ska, skb = closure_sketch(a), closure_sketch(b)
    if ska.tails or skb.tails:
        return
    meet = any(max(x.lo, y.lo) <= min(x.hi, y.hi) for x in ska.solid for y in skb.solid)
    assert geo_contact(a, b, "interval") == meet


@given(st.lists(st.tuples(paths, st.integers(0, 3)), min_size=2, max_size=12), st.sampled_from(KINDS))
def test_batched_matrix_matches_scalar(items, kind):
    regions = [make_generator(Cone(t) if n == 0 else Q(t, n)) for t, n in items]
    m = geo_matrix(regions, kind=kind)
    want = np.array([[geo_contact(x, y, kind) for y in regions] for x in regions])
    assert (m == want).all()

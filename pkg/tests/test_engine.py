
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pointfree import engine
from pointfree.axioms import random_region
from pointfree.engine import (
    TreeCone,
    TreeD,
    contact,
    contact_generators,
    cover_separated,
    generator_cover,
    is_bounded,
    separated_bounded,
    tree_contact,
    tree_translate,
    well_inside,
)
from pointfree.geometry import geo_contact, region_from_intervals
from pointfree.dyadic import Dyadic
from pointfree.models import Circle, RealLine, UnitInterval
from pointfree.region import ONE, ZERO, Cone, Q, RayDown, RayUp, Region, make_generator
from pointfree.sweeps import Bounds, check_equivalences
from pointfree.zset import ZSet, zo_step

from conftest import paths, seeds

R, I = RealLine(), UnitInterval()


def test_generator_table_examples():
    assert contact_generators(Cone((1,)), Cone((2,)))
    assert not contact_generators(Cone((1,)), Cone((2, -3)))
    assert contact_generators(Q((1,), 2), Cone((1, -2)))
    assert not contact_generators(Q((1,), 1), Q((2,), 1))
    assert contact_generators(Cone((2,)), RayUp(2), I)
    assert not contact_generators(Cone((2, 5)), RayUp(2), I)
    assert not contact_generators(RayDown(1), RayUp(1), I)


def test_rays_are_interval_only():
    with pytest.raises(ValueError):
        contact_generators(Cone((1,)), RayUp(1), R)


def test_q_parameter_boundary_is_not_strict():
    # the deeper cone sits at p = -r exactly
    assert contact_generators(Q((3,), 2), Q((3, -2), 1))
    assert not contact_generators(Q((3,), 2), Q((3, -1), 1))


def _strict_qq(t, r, u, r2):
    if len(t) > len(u):
        t, r, u, r2 = u, r2, t, r
    k, l = len(t), len(u)
    if t[: k - 1] != u[: k - 1]:
        return False
    n, m = t[k - 1], u[k - 1]
    if l == k:
        return m == n
    p = u[k]
    return (m == n and p < -r) or (m == zo_step(n, "down") and p > r)


def test_sweep_detects_a_strict_inequality_mutant(monkeypatch):
    monkeypatch.setattr(engine, "_qq", _strict_qq)
    rep = check_equivalences("formula-real", Bounds(2, 4, 4))
    assert not rep.passed


gens = st.one_of(
    paths.map(Cone),
    st.tuples(paths, st.integers(1, 4)).map(lambda x: Q(*x)),
)


@given(gens, gens, st.sampled_from([RealLine(), UnitInterval(), Circle()]))
def test_tables_agree_with_oracle_on_random_generators(g1, g2, model):
    kind = {RealLine: "real", UnitInterval: "interval", Circle: "circle"}[type(model)]
    want = geo_contact(make_generator(g1), make_generator(g2), kind)
    assert contact_generators(g1, g2, model) == want
    assert contact_generators(g2, g1, model) == want


def test_tree_translation():
    assert tree_translate(TreeCone((1, 5))) == make_generator(Cone((1, 5)))
    assert tree_translate(TreeD((1,), 1)).equals(make_generator(Q((1,), 1)))
    assert tree_translate(TreeCone(())).is_one()


@given(paths, paths, st.integers(1, 4), st.integers(1, 4))
def test_tree_formulas_match_through_translation(t, u, n, m):
    for x, y in [(TreeCone(t), TreeCone(u)), (TreeD(t, n), TreeCone(u)), (TreeD(t, n), TreeD(u, m))]:
        want = geo_contact(tree_translate(x), tree_translate(y), "real")
        assert tree_contact(x, y) == want == tree_contact(y, x)


@given(seeds, seeds, seeds)
def test_contact_is_symmetric_and_monotone(s1, s2, s3):
    a, b, c = random_region(s1, 2), random_region(s2, 2), random_region(s3, 2)
    for model in (R, I, Circle()):
        ab = contact(a, b, model).value
        assert ab == contact(b, a, model).value
        if ab:
            assert contact(a, b | c, model).value
        if contact(a & c, b, model).value:
            assert ab


def test_contact_examples():
    c1 = make_generator(Cone((1,)))
    assert not contact(ZERO, c1).value
    assert contact(c1, c1).value
    left = Region.from_constraints({1: ZSet.parse("{..-1}")})
    right = Region.from_constraints({1: ZSet.parse("{1..}")})
    v = contact(left, right, R)
    assert v.value and v.witness["point"] == Dyadic(1, 1)
    x, y = v.witness["bounded"]
    assert is_bounded(x, R) and is_bounded(y, R) and contact(x, y, R).value


def test_well_inside_examples():
    c1 = make_generator(Cone((1,)))
    c11 = make_generator(Cone((1, 1)))
    assert well_inside(ZERO, c1)
    assert well_inside(c11, c1)
    assert not well_inside(c11, c11)
    a = region_from_intervals([(Dyadic(17, 5), Dyadic(9, 4))])
    b = region_from_intervals([(Dyadic(1, 1), Dyadic(5, 3))])
    assert well_inside(a, b)


def test_boundedness_examples():
    assert is_bounded(make_generator(Cone((1,))), R)
    assert is_bounded(make_generator(Q((1,), 2)), R)
    assert not is_bounded(Region.from_constraints({1: ZSet.parse("{5..}")}), R)
    assert is_bounded(ONE, I)


def test_separation_examples():
    g = lambda x: make_generator(x)  # noqa: E731
    assert separated_bounded(g(Cone((1,))), g(Cone((3,))))
    assert not separated_bounded(g(Cone((1,))), g(Cone((2,))))
    assert separated_bounded(g(Q((1,), 2)), g(Cone((2, 3))))
    with pytest.raises(ValueError):
        separated_bounded(ONE, g(Cone((1,))))


@given(seeds, st.integers(1, 4), st.integers(1, 4))
def test_generator_cover_covers(seed, depth, r):
    a = random_region(seed, 2, bounded=True)
    cover = generator_cover(a, depth, r)
    assert cover is not None
    union = ZERO
    for g in cover:
        union = union | make_generator(g)
    assert a <= union


@given(seeds, seeds)
def test_cover_separation_is_sound(s1, s2):
    a, b = random_region(s1, 2, bounded=True), random_region(s2, 2, bounded=True)
    found = cover_separated(a, b, R, max_depth=3, max_r=3)
    if found is not None:
        assert separated_bounded(a, b, R)
        gc, gd = found
        assert all(not geo_contact(make_generator(x), make_generator(y), "real") for x in gc for y in gd)


def test_cover_separation_finds_simple_covers():
    found = cover_separated(make_generator(Q((1,), 2)), make_generator(Cone((2, 3))))
    assert found is not None

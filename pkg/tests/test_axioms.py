import json

import pytest

from pointfree.axioms import (
    AxiomReport,
    check_axioms,
    family_axioms,
    random_region,
    run_axiom,
)
from pointfree.engine import contact, is_bounded, well_inside
from pointfree.geometry import closure_sketch
from pointfree.models import Alexandroff, parse_model
from pointfree.region import Cone, make_generator
from pointfree.syntax import parse_expression
from pointfree import witness as W

CASES = [
    ("real", ["CA", "LCA", "LL"]),
    ("interval", ["CA", "NCA", "LL"]),
    ("circle", ["CA", "NCA", "LL"]),
    ("real:2", ["CA", "LCA", "LL"]),
    ("torus:2", ["CA", "NCA"]),
    ("cube:2", ["CA", "NCA"]),
    ("alex(real)", ["CA", "NCA", "LL"]),
    ("rel(real, cone(1))", ["CA", "NCA"]),
    ("rel(interval, cone(1))", ["CA"]),
]


@pytest.mark.parametrize("model,families", CASES, ids=[c[0] for c in CASES])
def test_small_suites_pass(model, families):
    m = parse_model(model)
    for fam in families:
        for rep in check_axioms(m, fam, trials=200, seed=3, existential_trials=60):
            assert rep.passed, rep.failures[:3]


def test_inapplicable_pairings_are_rejected():
    with pytest.raises(ValueError):
        family_axioms(parse_model("real"), "NCA")
    with pytest.raises(ValueError):
        family_axioms(parse_model("interval"), "LCA")
    with pytest.raises(ValueError):
        family_axioms(parse_model("real"), "XYZ")
    assert "LL5" not in family_axioms(parse_model("real"), "LL")


def test_random_region_is_deterministic():
    m = parse_model("real")
    assert str(random_region(1, 1, m)) == str(random_region(1, 1, m))
    assert len(random_region(1, 1, m).boxes) == 1
    for s in range(50):
        a = random_region(s, 3, parse_model("interval"))
        assert parse_expression(str(a)).equals(a)
    p = parse_model("torus:2")
    assert random_region(9, 2, p) == random_region(9, 2, p)


def test_reports_serialize_and_rerun():
    m = parse_model("circle")
    r1 = run_axiom(m, "C4", 50, 11)
    r2 = run_axiom(m, "C4", 50, 11)
    assert r1 == r2
    data = json.loads(r1.to_json())
    assert set(data) == {"model", "axiom", "trials", "seed", "failures"}
    assert data["model"] == "circle"


def test_failures_are_reported():
    rep = AxiomReport("real", "C1", 1, 0, failures=[{"a": "cone(1)", "b": "cone(1)", "detail": "x"}])
    assert not rep.passed and "FAIL" in rep.summary()


def test_c6_witness_example():
    interval = parse_model("interval")
    a = parse_expression("!cone(1)")
    example = parse_expression("cone(1,-2)")
    assert str(closure_sketch(example)) == "[17/32, 9/16]"
    assert not contact(example, a, interval).value
    w = W.c6_witness(a, interval)
    assert not w.is_zero() and not contact(w, a, interval).value


def test_bc3_witness_example():
    real = parse_model("real")
    a = parse_expression("phi(1,{1..})")
    c2 = make_generator(Cone((2,)))
    assert str(closure_sketch(c2)) == "[3/4, 7/8]"
    assert is_bounded(c2, real) and well_inside(c2, a, real)
    w = W.bc3_witness(a, real)
    assert not w.is_zero() and is_bounded(w, real) and well_inside(w, a, real)


def test_c2_never_fires_on_zero():
    for model in ("real", "interval", "real:2", "cube:2"):
        m = parse_model(model)
        zero = random_region(0, 1, m) & ~random_region(0, 1, m)
        assert zero.is_zero()
        for s in range(30):
            assert not contact(zero, random_region(s, 2, m), m).value


def test_alexandroff_of_products_only_has_ca():
    m = Alexandroff(parse_model("real:2"))
    assert family_axioms(m, "CA")
    with pytest.raises(ValueError):
        family_axioms(m, "NCA")

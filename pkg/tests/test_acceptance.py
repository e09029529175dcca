"""Acceptance gate: one test per criterion, each printing a single pass/fail line.

Run alone with ``pytest tests/test_acceptance.py -v``; the criterion lines are
printed even without ``-s``.
"""

import random
import time
from pathlib import Path

import pytest

from pointfree.axioms import check_axioms, random_region
from pointfree.cli import run_corpus
from pointfree.dyadic import Dyadic
from pointfree.engine import alexandroff_contact
from pointfree.geometry import closure_sketch, geo_contact
from pointfree.models import RealLine, parse_model
from pointfree.region import ONE, RayDown, RayUp, make_generator, phi
from pointfree.sweeps import Bounds, check_equivalences
from pointfree.zset import ZSet

CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "examples.jsonl"
FULL = Bounds(depth=3, entry=4, r=4)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, seconds, limit=None):
        timing = f"{seconds:.1f}s" + (f" (limit {limit}s)" if limit else "")
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}  [{timing}]")

    return emit


def test_criterion_01_ray_closures(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 17):
        eps = Dyadic.pow2(-(n + 1))
        up = closure_sketch(make_generator(RayUp(n)))
        down = closure_sketch(make_generator(RayDown(n)))
        if up.tails or [(iv.lo, iv.hi) for iv in up.solid] != [(Dyadic(1) - eps, Dyadic(1))]:
            bad.append(f"up({n}) -> {up}")
        if down.tails or [(iv.lo, iv.hi) for iv in down.solid] != [(Dyadic(0), eps)]:
            bad.append(f"down({n}) -> {down}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 1
    report(1, ok, f"u_n closures exact for n=1..16, {len(bad)} wrong", dt, 1)
    assert not bad, bad
    assert dt < 1


@pytest.mark.parametrize("which", ["formula-real", "formula-interval"])
def test_criterion_02_formula_tables(report, which):
    t0 = time.perf_counter()
    rep = check_equivalences(which, FULL)
    dt = time.perf_counter() - t0
    report(2, rep.passed and dt < 120, rep.summary(), dt, 120)
    assert rep.passed, rep.mismatches[:5]
    assert dt < 120


def test_criterion_03_presentation(report):
    t0 = time.perf_counter()
    rep = check_equivalences("presentation", FULL)
    dt = time.perf_counter() - t0
    report(3, rep.passed and dt < 120, rep.summary(), dt, 120)
    assert rep.passed, rep.mismatches[:5]
    assert dt < 120


@pytest.mark.parametrize("model", ["real", "interval", "circle", "real:2", "torus:2", "cube:2"])
def test_criterion_04_contact_axioms(report, model):
    t0 = time.perf_counter()
    reports = check_axioms(parse_model(model), "CA", trials=10_000, seed=0)
    dt = time.perf_counter() - t0
    failed = [r.axiom for r in reports if not r.passed]
    ok = not failed and dt < 60 and all(r.trials == 10_000 for r in reports)
    report(4, ok, f"{model}: C1-C4 x 10^4, failing {failed or 'none'}", dt, 60)
    assert not failed, [r.failures[:3] for r in reports if not r.passed]
    assert dt < 60


@pytest.mark.parametrize(
    "model,family",
    [
        ("interval", "NCA"),
        ("circle", "NCA"),
        ("torus:2", "NCA"),
        ("cube:2", "NCA"),
        ("real", "LCA"),
        ("real:2", "LCA"),
    ],
)
def test_criterion_05_existential_axioms(report, model, family):
    t0 = time.perf_counter()
    reports = check_axioms(parse_model(model), family, trials=1_000, seed=0, existential_trials=1_000)
    dt = time.perf_counter() - t0
    failed = [r.axiom for r in reports if not r.passed]
    ok = not failed and dt < 120
    names = "-".join(r.axiom for r in reports)
    report(5, ok, f"{model}: {names} x 10^3 with witnesses, failing {failed or 'none'}", dt, 120)
    assert not failed, [r.failures[:3] for r in reports if not r.passed]
    assert dt < 120


def test_criterion_06_alexandroff(report):
    t0 = time.perf_counter()
    alex = parse_model("alex(real)")
    suites = check_axioms(alex, "CA", trials=1_000, seed=0) + check_axioms(alex, "NCA", trials=1_000, seed=0, existential_trials=1_000)
    failed = [r.axiom for r in suites if not r.passed]
    sweep = check_equivalences("circle", FULL)
    rng = random.Random(6)
    pairs_bad = 0
    for _ in range(1_000):
        a, b = random_region(rng, 2), random_region(rng, 2)
        pairs_bad += alexandroff_contact(a, b, RealLine()) != geo_contact(a, b, "circle")
    dt = time.perf_counter() - t0
    ok = not failed and sweep.passed and not pairs_bad
    report(6, ok, f"C1-C6 failing {failed or 'none'}; {sweep.summary()}; random pairs off: {pairs_bad}", dt)
    assert not failed and sweep.passed and not pairs_bad


def test_criterion_07_products(report):
    t0 = time.perf_counter()
    rep = check_equivalences("product", Bounds(depth=2, entry=3, r=3))
    dt = time.perf_counter() - t0
    report(7, rep.passed and dt < 120, rep.summary(), dt, 120)
    assert rep.passed, rep.mismatches[:5]
    assert dt < 120


def test_criterion_08_relativization(report):
    t0 = time.perf_counter()
    rep = check_equivalences("relative", FULL)
    dt = time.perf_counter() - t0
    report(8, rep.passed, rep.summary(), dt)
    assert rep.passed, rep.mismatches[:5]


def _laws(a, b, c):
    checks = {
        "assoc": ((a | b) | c).equals(a | (b | c)) and ((a & b) & c).equals(a & (b & c)),
        "comm": (a | b).equals(b | a) and (a & b).equals(b & a),
        "absorb": (a | (a & b)).equals(a) and (a & (a | b)).equals(a),
        "distrib": (a & (b | c)).equals((a & b) | (a & c)) and (a | (b & c)).equals((a | b) & (a | c)),
        "compl": (a | ~a).is_one() and (a & ~a).is_zero(),
        "de morgan": (~(a & b)).equals(~a | ~b),
        "order": (a <= b) == (a & b).equals(a),
    }
    return [k for k, v in checks.items() if not v]


def _independent(rng):
    levels = rng.sample(range(1, 7), rng.randint(1, 4))
    out = ONE
    for lv in levels:
        z = ZSet.of(rng.choice([-4, -2, -1, 1, 3, 4]))
        z = z | ZSet.interval(rng.choice([2, 5]), None) if rng.random() < 0.3 else z
        out = out & phi(lv, ~z if rng.random() < 0.5 else z)
    return not out.is_zero()


def test_criterion_09_boolean_laws(report):
    t0 = time.perf_counter()
    rng = random.Random(9)
    failures = []
    for i in range(10_000):
        a, b, c = (random_region(rng, 2) for _ in range(3))
        bad = _laws(a, b, c)
        if not _independent(rng):
            bad.append("independence")
        if bad:
            failures.append((i, bad))
    dt = time.perf_counter() - t0
    report(9, not failures, f"10^4 triples, {len(failures)} failing", dt)
    assert not failures, failures[:5]


def test_criterion_10_corpus(report):
    t0 = time.perf_counter()
    results = run_corpus(str(CORPUS))
    bad = [detail for _, ok, detail in results if not ok]
    dt = time.perf_counter() - t0
    report(10, not bad, f"{len(results) - len(bad)}/{len(results)} corpus entries met", dt)
    assert not bad, bad[:5]

"""Seeded property checks of the contact, normality and local-contact axioms.

Universal axioms are checked on random instances.  Existential ones are
checked by building a witness (``witness``) and re-verifying it with the
decision procedures; premises of the existential axioms are produced
constructively half of the time and by rejection sampling otherwise, so that
both tight and loose configurations occur.
"""

from __future__ import annotations

import json
import random
import zlib
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import witness as W
from .engine import complement, contact, is_bounded, restrict, well_inside
from .models import (
    Alexandroff,
    ProductReal,
    RealLine,
    Relative,
    is_local,
    is_product,
)
from .products import ProductRegion
from .region import ONE, ZERO, Region, make_box
from .zset import ZSet

__all__ = [
    "AxiomReport",
    "random_region",
    "random_bounded",
    "apart_from",
    "check_axioms",
    "FAMILIES",
    "family_axioms",
]


@dataclass
class AxiomReport:
    model: str
    axiom: str
    trials: int
    seed: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    def summary(self) -> str:
        verdict = "pass" if self.passed else f"FAIL ({len(self.failures)})"
        return f"{self.model:<16} {self.axiom:<4} trials={self.trials:<6} seed={self.seed} {verdict}"


# random regions ------------------------------------------------------------------


def _entry(rng: random.Random, lim: int = 4) -> int:
    n = rng.randint(1, lim)
    return n if rng.random() < 0.5 else -n


def _random_zset(rng: random.Random) -> ZSet:
    roll = rng.random()
    if roll < 0.45:
        return ZSet.of(_entry(rng))
    if roll < 0.65:
        a, b = sorted((_entry(rng), _entry(rng)))
        return ZSet.interval(a, b)
    if roll < 0.75:
        return ZSet.interval(_entry(rng), None)
    if roll < 0.85:
        return ZSet.interval(None, _entry(rng))
    return _random_zset(rng) | ZSet.of(_entry(rng))


def _random_box(rng: random.Random, bounded: bool = False):
    depth = rng.randint(1, 4)
    items = {}
    for level in range(1, depth + 1):
        if level == 1 and bounded:
            a, b = sorted((_entry(rng), _entry(rng)))
            items[1] = ZSet.of(a) if rng.random() < 0.6 else ZSet.interval(a, b)
        elif level == depth or rng.random() < 0.75:
            items[level] = _random_zset(rng)
    return make_box(items)


def _random_1d(rng: random.Random, budget: int, bounded: bool = False) -> Region:
    if not bounded:
        roll = rng.random()
        if roll < 0.02:
            return ZERO
        if roll < 0.04:
            return ONE
    n = rng.randint(1, budget)
    return Region([_random_box(rng, bounded) for _ in range(n)])


def _random_product(rng: random.Random, budget: int, names: tuple, bounded: bool) -> ProductRegion:
    roll = rng.random()
    if not bounded and roll < 0.02:
        return ProductRegion()
    if not bounded and roll < 0.04:
        return ProductRegion([()])
    out = ProductRegion()
    for _ in range(rng.randint(1, budget)):
        factors = {}
        for y in names:
            if bounded or rng.random() < 0.7:
                factors[y] = _random_1d(rng, 1, bounded)
        out = out | ProductRegion.box(factors)
    return out


def _rng(seed) -> random.Random:
    return random.Random(seed)


def random_region(seed, budget: int = 2, model=RealLine(), bounded: bool = False):
    """Deterministic random element of the model's algebra (depth <= 4, entries in -4..4)."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = seed if isinstance(seed, random.Random) else _rng(seed)
    base = model.base if isinstance(model, Alexandroff) else model
    if is_product(base):
        return _random_product(rng, budget, base.names, bounded)
    return restrict(model, _random_1d(rng, budget, bounded))


def random_bounded(seed, budget: int = 2, model=RealLine()):
    r = random_region(seed, budget, model, bounded=True)
    return r


def _inner_random(rng: random.Random, a: Region) -> Region:
    """A random cone whose closure lies inside the interior of ``a``."""
    box = rng.choice(sorted(a.boxes, key=str))
    t: list = []
    level = 1
    d = dict(box)
    depth = max(d, default=0)
    while level <= depth or not t:
        s = d.get(level, ZSet.full())
        choices = [j for j in range(-5, 6) if j and j in s]
        t.append(rng.choice(choices) if choices else s.pick())
        level += 1
    for _ in range(rng.randint(1, 2)):
        t.append(_entry(rng, 3))
    return Region([make_box({i + 1: ZSet.of(v) for i, v in enumerate(t)})])


def apart_from(rng: random.Random, a, model):
    """A random element apart from ``a`` (possibly 0)."""
    rest = complement(model, a)
    if is_product(model):
        rest = ProductRegion.lift(rest)
        if rest.is_zero() or rng.random() < 0.05:
            return ProductRegion()
        out = ProductRegion()
        for _ in range(rng.randint(1, 2)):
            box = dict(rng.choice(sorted(rest.boxes, key=str)))
            names = model.names if isinstance(model, ProductReal) else sorted(box)
            out = out | ProductRegion.box({y: _inner_random(rng, box.get(y, ONE)) for y in names})
        return out
    if rest.is_zero() or rng.random() < 0.05:
        return ZERO
    out = ZERO
    for _ in range(rng.randint(1, 3)):
        out = out | _inner_random(rng, rest)
    extra = random_region(rng, 2, model)
    if rng.random() < 0.3 and not (out & extra).is_zero():
        out = out & extra
    return restrict(model, out)


# the axiom catalogue ---------------------------------------------------------------


def _text(x) -> str:
    return str(x)


def _fail(a=None, b=None, c=None, detail="") -> dict:
    out = {"a": _text(a), "b": _text(b)}
    if c is not None:
        out["c"] = _text(c)
    out["detail"] = detail
    return out


def _C(model):
    return lambda x, y: contact(x, y, model).value


def _ll(model):
    return lambda x, y: well_inside(x, y, model)


def _zero(x) -> bool:
    return x.is_zero()


def _leq(x, y) -> bool:
    return x <= y


def _pair_apart(rng, model, rejection: bool):
    """A pair (a, b) with a apart from b."""
    C = _C(model)
    if rejection:
        for _ in range(20):
            a, b = random_region(rng, 2, model), random_region(rng, 2, model)
            if not C(a, b):
                return a, b
    a = random_region(rng, 2, model)
    return a, apart_from(rng, a, model)


def ax_c1(rng, model):
    a = random_region(rng, 3, model)
    if not _zero(a) and not _C(model)(a, a):
        return _fail(a, a, detail="a != 0 but not a C a")


def ax_c2(rng, model):
    a, b = random_region(rng, 2, model), random_region(rng, 2, model)
    roll = rng.random()
    if roll < 0.25:
        a = restrict(model, ZERO)
    elif roll < 0.5:
        b = restrict(model, ZERO)
    if _C(model)(a, b) and (_zero(a) or _zero(b)):
        return _fail(a, b, detail="contact with a zero region")


def ax_c3(rng, model):
    a, b = random_region(rng, 2, model), random_region(rng, 2, model)
    C = _C(model)
    if C(a, b) != C(b, a):
        return _fail(a, b, detail="contact is not symmetric")


def ax_c4(rng, model):
    a, b, c = (random_region(rng, 2, model) for _ in range(3))
    C = _C(model)
    if C(a, b | c) != (C(a, b) or C(a, c)):
        return _fail(a, b, c, detail="a C (b+c) differs from (a C b or a C c)")


def ax_c5(rng, model):
    a, b = _pair_apart(rng, model, rng.random() < 0.5)
    C = _C(model)
    if C(a, b):
        return None
    c = W.c5_witness(a, b, model)
    if C(a, c) or C(b, complement(model, c)):
        return _fail(a, b, c, detail="separating witness fails re-check")


def ax_c6(rng, model):
    a = random_region(rng, 2, model)
    if (complement(model, a)).is_zero():
        return None
    b = W.c6_witness(a, model)
    if b.is_zero() or _C(model)(b, a):
        return _fail(a, b, detail="disjoint witness fails re-check")


def _ll_pair(rng, model):
    """A pair with a << b: b is the complement of something apart from a."""
    a = random_region(rng, 2, model)
    return a, complement(model, apart_from(rng, a, model))


def ax_bc1(rng, model):
    a = random_bounded(rng, 2, model)
    if rng.random() < 0.5:
        c = random_region(rng, 2, model)
    else:
        c = complement(model, apart_from(rng, a, model))
    ll = _ll(model)
    if not ll(a, c):
        return None
    b = W.bc1_witness(a, c, model)
    if not (is_bounded(b, model) and ll(a, b) and ll(b, c)):
        return _fail(a, c, b, detail="interpolant fails re-check")


def ax_bc2(rng, model):
    a, b = random_region(rng, 2, model), random_region(rng, 2, model)
    C = _C(model)
    if not C(a, b):
        return None
    c = W.bc2_witness(a, b, model)
    if not (is_bounded(c, model) and C(a, c & b)):
        return _fail(a, b, c, detail="bounded localization fails re-check")


def ax_bc3(rng, model):
    a = random_region(rng, 2, model)
    if _zero(a):
        return None
    b = W.bc3_witness(a, model)
    if _zero(b) or not is_bounded(b, model) or not well_inside(b, a, model):
        return _fail(a, b, detail="bounded inner witness fails re-check")


def ax_ll1(rng, model):
    a, b = _ll_pair(rng, model) if rng.random() < 0.5 else (random_region(rng, 2, model), random_region(rng, 2, model))
    if _ll(model)(a, b) and not _leq(a, b):
        return _fail(a, b, detail="a << b but not a <= b")


def ax_ll2(rng, model):
    z = restrict(model, ZERO)
    if not _ll(model)(z, z):
        return _fail(z, z, detail="0 << 0 fails")


def ax_ll3(rng, model):
    a, b = _ll_pair(rng, model)
    a2 = a & random_region(rng, 2, model)
    b2 = b | random_region(rng, 2, model)
    ll = _ll(model)
    if ll(a, b) and not ll(a2, b2):
        return _fail(a2, b2, detail="<< not preserved by shrinking/enlarging")


def ax_ll4(rng, model):
    d = random_region(rng, 2, model)
    a, b = apart_from(rng, d, model), apart_from(rng, d, model)
    c = complement(model, d)
    ll = _ll(model)
    if ll(a, c) and ll(b, c) and not ll(a | b, c):
        return _fail(a, b, c, detail="a << c and b << c but not a+b << c")


def ax_ll5(rng, model):
    a, c = _ll_pair(rng, model)
    ll = _ll(model)
    if not ll(a, c):
        return None
    b = W.bc1_witness(a, c, model, bounded=False)
    if not (ll(a, b) and ll(b, c)):
        return _fail(a, c, b, detail="interpolant fails re-check")


def ax_ll6(rng, model):
    a = random_region(rng, 2, model)
    if _zero(a):
        return None
    b = W.bc3_witness(a, model)
    if _zero(b) or not well_inside(b, a, model):
        return _fail(a, b, detail="inner witness fails re-check")


def ax_ll7(rng, model):
    a, b = _ll_pair(rng, model)
    ll = _ll(model)
    if ll(a, b) and not ll(complement(model, b), complement(model, a)):
        return _fail(a, b, detail="a << b but not b* << a*")


AXIOMS: dict[str, Callable] = {
    "C1": ax_c1,
    "C2": ax_c2,
    "C3": ax_c3,
    "C4": ax_c4,
    "C5": ax_c5,
    "C6": ax_c6,
    "BC1": ax_bc1,
    "BC2": ax_bc2,
    "BC3": ax_bc3,
    "LL1": ax_ll1,
    "LL2": ax_ll2,
    "LL3": ax_ll3,
    "LL4": ax_ll4,
    "LL5": ax_ll5,
    "LL6": ax_ll6,
    "LL7": ax_ll7,
}

EXISTENTIAL = {"C5", "C6", "BC1", "BC2", "BC3", "LL5", "LL6"}

FAMILIES = {
    "CA": ("C1", "C2", "C3", "C4"),
    "NCA": ("C5", "C6"),
    "LCA": ("BC1", "BC2", "BC3"),
    "LL": ("LL1", "LL2", "LL3", "LL4", "LL5", "LL6", "LL7"),
}


def is_compact(model) -> bool:
    if isinstance(model, Relative):
        return not isinstance(model.base, RealLine) or is_bounded(model.u, model.base)
    if isinstance(model, Alexandroff):
        return not is_product(model.base)
    return not is_local(model)


def family_axioms(model, family: str) -> tuple:
    """The axioms of ``family`` that apply to ``model``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if family == "NCA" and not is_compact(model):
        raise ValueError(f"{model} is not compact; use the LCA family")
    if family == "LCA" and not is_local(model):
        raise ValueError(f"the LCA family applies to real and real:n, not {model}")
    if isinstance(model, Alexandroff) and is_product(model.base) and family != "CA":
        raise ValueError("only the CA family is available over alex(real:n)")
    axioms = FAMILIES[family]
    if family == "LL" and not is_compact(model):
        # interpolation is the bounded BC1 in the locally compact models
        axioms = tuple(a for a in axioms if a != "LL5")
    return axioms


def _seed_for(seed: int, axiom: str, i: int) -> int:
    return (seed * 1_000_003 + zlib.crc32(axiom.encode()) * 7919 + i) & 0xFFFFFFFFFFFF


def run_axiom(model, axiom: str, trials: int, seed: int, limit: int = 20) -> AxiomReport:
    fn = AXIOMS[axiom]
    report = AxiomReport(str(model), axiom, trials, seed)
    for i in range(trials):
        rng = _rng(_seed_for(seed, axiom, i))
        try:
            bad = fn(rng, model)
        except W.WitnessError as exc:
            bad = {"a": "", "b": "", "detail": f"trial {i}: {exc}"}
        if bad:
            bad.setdefault("detail", "")
            bad["detail"] = f"trial {i}: {bad['detail']}" if not bad["detail"].startswith("trial") else bad["detail"]
            report.failures.append(bad)
            if len(report.failures) >= limit:
                break
    return report


def check_axioms(
    model, family: str, trials: int = 10_000, seed: int = 0, existential_trials: Optional[int] = None
) -> list[AxiomReport]:
    """One report per applicable axiom; existential axioms default to ``trials // 10``."""
    reports = []
    for axiom in family_axioms(model, family):
        n = trials
        if axiom in EXISTENTIAL:
            n = existential_trials if existential_trials is not None else max(1, trials // 10)
        reports.append(run_axiom(model, axiom, n, seed))
    return reports


"""Exhaustive sweeps comparing generator tables with the geometric oracle.

Every generator used here has a single closed interval as closure, so the
geometric side is evaluated in bulk: closures come from ``closure_sketch``,
endpoints are scaled to integers over a common power of two and compared with
numpy.  The table side is evaluated pair by pair in plain Python.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .engine import TreeCone, TreeD, alexandroff_contact, contact_generators, is_bounded, tree_contact, tree_translate
from .geometry import closure_sketch
from .models import Circle, RealLine, UnitInterval
from .region import Cone, Q, RayDown, RayUp, Region, make_generator
from .syntax import format_generator

__all__ = [
    "Bounds",
    "SweepReport",
    "paths",
    "generators",
    "hulls",
    "geo_matrix",
    "table_matrix",
    "check_equivalences",
    "EQUIVALENCES",
]


@dataclass(frozen=True)
class Bounds:
    depth: int = 3
    entry: int = 4
    r: int = 4


@dataclass
class SweepReport:
    which: str
    bounds: Bounds
    pairs: int = 0
    mismatches: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        b = self.bounds
        verdict = "pass" if self.passed else f"FAIL ({len(self.mismatches)} mismatches)"
        return f"{self.which:<13} depth<={b.depth} |n|<={b.entry} r<={b.r} pairs={self.pairs} {verdict}"


def paths(depth: int, entry: int) -> list:
    vals = [j for j in range(-entry, entry + 1) if j]
    out = []
    for k in range(1, depth + 1):
        out.extend(itertools.product(vals, repeat=k))
    return out


def generators(b: Bounds, rays: bool = False) -> list:
    ps = paths(b.depth, b.entry)
    out: list = [Cone(t) for t in ps]
    out += [Q(t, n) for t in ps for n in range(1, b.r + 1)]
    if rays:
        out += [RayUp(n) for n in range(1, b.r + 1)] + [RayDown(n) for n in range(1, b.r + 1)]
    return out


def hulls(regions: Sequence[Region]) -> tuple:
    """Integer endpoints of single-interval closures over a common power of two."""
    pairs = []
    for r in regions:
        sk = closure_sketch(r)
        if sk.tails or len(sk.solid) != 1:
            raise ValueError(f"closure of {r} is not a single interval: {sk}")
        iv = sk.solid.intervals[0]
        pairs.append((iv.lo, iv.hi))
    exp = max(max(lo.e, hi.e) for lo, hi in pairs)
    if exp > 60:
        raise ValueError("endpoints too fine for 64-bit comparison")
    lo = np.array([p[0].m << (exp - p[0].e) for p in pairs], dtype=np.int64)
    hi = np.array([p[1].m << (exp - p[1].e) for p in pairs], dtype=np.int64)
    return lo, hi, 1 << exp


def geo_matrix(regions_a, regions_b=None, kind: str = "real", chunk: int = 512) -> np.ndarray:
    """Closure-intersection matrix for single-interval regions."""
    lo_a, hi_a, one = hulls(regions_a)
    if regions_b is None:
        lo_b, hi_b = lo_a, hi_a
    else:
        lo_b, hi_b, one_b = hulls(regions_b)
        if one_b != one:
            scale = max(one, one_b)
            lo_a, hi_a = lo_a * (scale // one), hi_a * (scale // one)
            lo_b, hi_b = lo_b * (scale // one_b), hi_b * (scale // one_b)
            one = scale
    out = np.zeros((len(lo_a), len(lo_b)), dtype=bool)
    touch_b = (lo_b == 0) | (hi_b == one)
    for s in range(0, len(lo_a), chunk):
        la, ha = lo_a[s : s + chunk, None], hi_a[s : s + chunk, None]
        lo = np.maximum(la, lo_b[None, :])
        hi = np.minimum(ha, hi_b[None, :])
        meet = lo <= hi
        if kind != "interval":
            # in (0, 1): a meeting only at an end of [0, 1] does not count
            meet &= (hi > 0) & (lo < one)
        if kind == "circle":
            touch_a = (la == 0) | (ha == one)
            meet |= touch_a & touch_b[None, :]
        out[s : s + chunk] = meet
    return out


def table_matrix(items_a, items_b, fn: Callable, symmetric: bool = False) -> np.ndarray:
    out = np.zeros((len(items_a), len(items_b)), dtype=bool)
    for i, x in enumerate(items_a):
        if symmetric:
            row = [fn(x, y) for y in items_b[i:]]
            out[i, i:] = row
            out[i:, i] = row
        else:
            out[i] = [fn(x, y) for y in items_b]
    return out


def _mismatches(m1: np.ndarray, m2: np.ndarray, names_a, names_b, limit: int = 50) -> list:
    bad = np.argwhere(m1 != m2)
    out = []
    for i, j in bad[:limit]:
        out.append({"a": names_a[i], "b": names_b[j], "left": bool(m1[i, j]), "right": bool(m2[i, j])})
    if len(bad) > limit:
        out.append({"truncated": int(len(bad) - limit)})
    return out


def _formula(b: Bounds, model, kind: str) -> SweepReport:
    gens = generators(b, rays=isinstance(model, UnitInterval))
    names = [format_generator(g) for g in gens]
    tab = table_matrix(gens, gens, lambda x, y: contact_generators(x, y, model), symmetric=True)
    geo = geo_matrix([make_generator(g) for g in gens], kind=kind)
    rep = SweepReport(f"formula-{kind}", b, pairs=len(gens) ** 2)
    rep.mismatches = _mismatches(tab, geo, names, names)
    rep.extra = {"generators": len(gens), "contacts": int(tab.sum())}
    return rep


def _tree_items(b: Bounds) -> list:
    ps = paths(b.depth, b.entry)
    return [TreeCone(t) for t in ps] + [TreeD(t, n) for t in ps for n in range(1, b.r + 1)]


def _tree_name(g) -> str:
    if isinstance(g, TreeCone):
        return "c" + str(g.t).replace(" ", "")
    return f"d{str(g.t).replace(' ', '')},{g.n}"


def presentation(b: Bounds) -> SweepReport:
    """Tree formulas against the real-line tables and the oracle, through h."""
    items = _tree_items(b)
    names = [_tree_name(g) for g in items]
    tree = table_matrix(items, items, tree_contact, symmetric=True)
    gens = generators(b)
    regions = [tree_translate(g) for g in items]
    for g, r in zip(gens, regions):
        if make_generator(g) != r:
            raise AssertionError(f"translation order mismatch at {g}")
    tab = table_matrix(gens, gens, lambda x, y: contact_generators(x, y, RealLine()), symmetric=True)
    geo = geo_matrix(regions, kind="real")
    rep = SweepReport("presentation", b, pairs=2 * len(items) ** 2)
    rep.mismatches = _mismatches(tree, geo, names, names) + _mismatches(tree, tab, names, names)
    rep.extra = {"generators": len(items)}
    return rep


def circle(b: Bounds) -> SweepReport:
    """One-point compactification of the real tables against circle closures.

    The real-line rays up(n) and down(n) are added as unbounded regions; pairs
    involving them go through ``alexandroff_contact`` instead of the tables.
    """
    gens = generators(b)
    rays = [RayUp(n) for n in range(1, b.r + 1)] + [RayDown(n) for n in range(1, b.r + 1)]
    names = [format_generator(g) for g in gens + rays]
    regions = [make_generator(g) for g in gens + rays]
    bounded = [is_bounded(r, RealLine()) for r in regions]
    k = len(gens)

    def alex(i, j):
        if i >= k or j >= k:
            return alexandroff_contact(regions[i], regions[j], RealLine())
        return contact_generators(gens[i], gens[j], RealLine()) or (not bounded[i] and not bounded[j])

    idx = list(range(len(regions)))
    tab = table_matrix(idx, idx, alex, symmetric=True)
    geo = geo_matrix(regions, kind="circle")
    rep = SweepReport("circle", b, pairs=len(regions) ** 2)
    rep.mismatches = _mismatches(tab, geo, names, names)
    rep.extra = {"generators": k, "rays": len(rays)}
    return rep


def relative(b: Bounds) -> SweepReport:
    """Interval-model tables against real-line closures below cone(1)."""
    gens = generators(b, rays=True)
    names = [format_generator(g) for g in gens]
    u = make_generator(Cone((1,)))
    moved = [make_generator(g).shift(1) & u for g in gens]
    tab = table_matrix(gens, gens, lambda x, y: contact_generators(x, y, UnitInterval()), symmetric=True)
    geo = geo_matrix(moved, kind="real")
    rep = SweepReport("relative", b, pairs=len(gens) ** 2)
    rep.mismatches = _mismatches(tab, geo, names, names)
    return rep


def formula_real(b: Bounds) -> SweepReport:
    return _formula(b, RealLine(), "real")


def formula_interval(b: Bounds) -> SweepReport:
    return _formula(b, UnitInterval(), "interval")


def formula_circle(b: Bounds) -> SweepReport:
    return _formula(b, Circle(), "circle")


EQUIVALENCES = {
    "formula-real": formula_real,
    "formula-interval": formula_interval,
    "presentation": presentation,
    "circle": circle,
    "relative": relative,
}


def check_equivalences(which: str, bounds: Bounds = Bounds()) -> SweepReport:
    if which == "product":
        from .productsweep import product_sweep

        return product_sweep(bounds)
    if which not in EQUIVALENCES:
        raise ValueError(f"unknown sweep {which!r}; choose from {sorted(EQUIVALENCES) + ['product']}")
    return EQUIVALENCES[which](bounds)

"""Exhaustive check of contact on two-coordinate product generators.

Product generators are pairs of one-dimensional real generators, with an
absent coordinate standing for the full factor.  The coordinatewise formula
(table contact in each coordinate) is compared with a rectangle test on the
closures in the open unit square, and a random sample is pushed through the
object-level ``contact`` on ``ProductRegion`` values as well.
"""

from __future__ import annotations

import random

import numpy as np

from .engine import contact, contact_generators, is_bounded
from .models import ProductReal, RealLine
from .products import ProductRegion
from .region import ONE, make_generator
from .syntax import format_generator
from .sweeps import Bounds, SweepReport, generators, hulls, table_matrix

__all__ = ["product_sweep"]

MODEL = ProductReal(("x", "y"))


def _name(g) -> str:
    return "*" if g is None else format_generator(g)


def _box(gx, gy) -> ProductRegion:
    fx = ONE if gx is None else make_generator(gx)
    fy = ONE if gy is None else make_generator(gy)
    return ProductRegion.box({"x": fx, "y": fy})


def product_sweep(b: Bounds = Bounds(2, 3, 3), sample: int = 4000, seed: int = 0) -> SweepReport:
    """Coordinatewise formula against the rectangle oracle for all pairs of product generators."""
    b = Bounds(min(b.depth, 2), min(b.entry, 3), min(b.r, 3))
    gens = generators(b)
    lo, hi, one = hulls([make_generator(g) for g in gens])
    factors = gens + [None]
    lo = np.append(lo, 0)
    hi = np.append(hi, one)
    m = len(factors)

    def table(x, y):
        if x is None or y is None:
            return True
        return contact_generators(x, y, RealLine())

    f = table_matrix(factors, factors, table, symmetric=True)

    # rectangles [lo_x, hi_x] x [lo_y, hi_y]; meeting must happen inside (0, 1)^2
    def overlap(i_lo, i_hi, j_lo, j_hi):
        a = np.maximum(i_lo, j_lo)
        z = np.minimum(i_hi, j_hi)
        return (a <= z) & (z > 0) & (a < one)

    bad = 0
    examples = []
    for i in range(m):
        formula = f[i][None, :, None] & f[:, None, :]
        ox = overlap(lo[i], hi[i], lo, hi)
        oy = overlap(lo[:, None], hi[:, None], lo[None, :], hi[None, :])
        rect = ox[None, :, None] & oy[:, None, :]
        diff = np.argwhere(formula != rect)
        bad += len(diff)
        for j, k, l in diff[: max(0, 20 - len(examples))]:
            examples.append(
                {
                    "a": f"{{x: {_name(factors[i])}, y: {_name(factors[j])}}}",
                    "b": f"{{x: {_name(factors[k])}, y: {_name(factors[l])}}}",
                    "left": bool(formula[j, k, l]),
                    "right": bool(rect[j, k, l]),
                }
            )

    rep = SweepReport("product", b, pairs=m**4)
    rep.mismatches = examples
    if bad > len(examples):
        rep.mismatches.append({"truncated": bad - len(examples)})

    # boundedness: a box is bounded iff both coordinates are listed
    for i, gx in enumerate(factors):
        for gy in factors:
            want = gx is not None and gy is not None
            if is_bounded(_box(gx, gy), MODEL) != want:
                rep.mismatches.append({"a": f"{{x: {_name(gx)}, y: {_name(gy)}}}", "bounded": not want})

    # object-level contact on a random sample
    rng = random.Random(seed)
    for _ in range(sample):
        i, j, k, l = (rng.randrange(m) for _ in range(4))
        got = bool(contact(_box(factors[i], factors[j]), _box(factors[k], factors[l]), MODEL))
        want = bool(f[i, k] and f[j, l])
        if got != want:
            rep.mismatches.append(
                {
                    "a": f"{{x: {_name(factors[i])}, y: {_name(factors[j])}}}",
                    "b": f"{{x: {_name(factors[k])}, y: {_name(factors[l])}}}",
                    "object": got,
                    "formula": want,
                }
            )
    rep.extra = {"factors": m, "sampled": sample}
    return rep

"""Constructive witnesses for the existential axioms.

The basic tool is :func:`separate`: cover the closure of a target region by
Delta-cells that avoid the closure of a forbidden region, refining only the
cells that meet both.  A cell is either a whole cell ``Delta_t`` or a *ray
cell*, the children ``j >= s`` (or ``j <= s``) of ``t`` together with the end
of ``Delta_t`` they accumulate at.  Because closures of separated regions lie
at positive distance, only finitely many cells ever need refining; a budget
guards against the cases where that fails (reported, never hidden).

Every witness returned here is re-checked by the caller with the decision
procedures; this module only builds candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .engine import complement, contact
from .geometry import _split, contact_point, geo_contact, region_from_intervals, touches_ends
from .dyadic import Dyadic
from .models import Alexandroff, ProductReal, Relative, factor_model, geo_kind, is_product
from .products import ProductRegion
from .region import ONE, ZERO, Region, make_box
from .zset import Path, ZSet

__all__ = [
    "Cell",
    "separate",
    "cone_below",
    "inner_cone",
    "c5_witness",
    "c6_witness",
    "bc1_witness",
    "bc2_witness",
    "bc3_witness",
    "WitnessError",
]


class WitnessError(RuntimeError):
    pass


@dataclass(frozen=True)
class Cell:
    t: Path
    side: Optional[str] = None  # None, "up" or "down"
    start: int = 0

    def region(self) -> Region:
        items = {i + 1: ZSet.of(v) for i, v in enumerate(self.t)}
        if self.side == "up":
            items[len(self.t) + 1] = ZSet.interval(self.start, None)
        elif self.side == "down":
            items[len(self.t) + 1] = ZSet.interval(None, self.start)
        return Region([make_box(items)])

    def refine(self, width: int) -> list:
        if self.side is None:
            kids = [Cell(self.t + (j,)) for j in range(-width, width + 1) if j]
            return kids + [Cell(self.t, "up", width + 1), Cell(self.t, "down", -width - 1)]
        step = 1 if self.side == "up" else -1
        return [Cell(self.t + (self.start,)), Cell(self.t, self.side, self.start + step)]


def _width(*regions: Region) -> int:
    marks = set()
    for r in regions:
        marks |= r.finite_marks()
    return min(max((abs(m) for m in marks), default=0) + 1, 8)


def separate(
    target: Region, forbid: Region, kind: str, bounded: bool = False, budget: int = 50000
) -> Region:
    """A region ``c`` with ``target << c`` and ``c`` apart from ``forbid``.

    ``kind`` selects the closure rule (``real``, ``interval`` or ``circle``);
    with ``bounded`` the cells of ``c`` also stay away from 0 and 1.
    """
    width = _width(target, forbid)
    accepted: list = []
    stack = [Cell(())]
    seen = 0
    while stack:
        seen += 1
        if seen > budget:
            raise WitnessError(f"separation needs more than {budget} cells")
        cell = stack.pop()
        r = cell.region()
        if not geo_contact(r, target, kind):
            continue
        if not geo_contact(r, forbid, kind) and not (bounded and touches_ends(r)):
            accepted.append(r)
            continue
        stack.extend(cell.refine(width))
    out = ZERO
    for r in accepted:
        out = out | r
    return out


def cone_below(a: Region) -> Path:
    """A nonempty path whose cone lies below the nonzero region ``a``."""
    if a.is_zero():
        raise ValueError("the zero region has no cone below it")
    box = min(a.boxes, key=lambda b: (len(b), str(b)))
    t: list = []
    rest = box
    while rest or not t:
        s, rest = _split(rest)
        t.append(s.pick())
    return tuple(t)


def inner_cone(a: Region) -> Region:
    """A nonzero cone whose closure sits inside the interior of ``a``."""
    t = cone_below(a)
    return Region([make_box({i + 1: ZSet.of(v) for i, v in enumerate(t + (1,))})])


# one-dimensional kinds and product dispatch ------------------------------------


def _kind(model) -> str:
    if isinstance(model, Alexandroff):
        return "circle"
    return geo_kind(model)


def _fit(model, c):
    if isinstance(model, Relative):
        return c & model.u
    return c


def _pboxes(x) -> list:
    return [dict(b) for b in sorted(ProductRegion.lift(x).boxes, key=str)]


def _psep(target, forbid, model, bounded: bool) -> ProductRegion:
    """Product separation, one coordinate per pair of boxes."""
    kind = geo_kind(factor_model(model))
    names = model.names
    out = ProductRegion()
    for tb in _pboxes(target):
        c_j = ProductRegion([()])
        if bounded:
            env = {y: separate(tb.get(y, ONE), ZERO, kind, bounded=True) for y in names}
            c_j = c_j & ProductRegion.box(env)
        for fb in _pboxes(forbid):
            for x in sorted(set(tb) & set(fb)):
                if not geo_contact(tb[x], fb[x], kind):
                    c_j = c_j & ProductRegion.box({x: separate(tb[x], fb[x], kind)})
                    break
            else:
                raise WitnessError("target and forbidden boxes touch in every coordinate")
        out = out | c_j
    return out


def _sep(target, forbid, model, bounded: bool = False):
    if is_product(model):
        return _psep(target, forbid, model, bounded)
    return _fit(model, separate(target, forbid, _kind(model), bounded=bounded))


# the axioms ----------------------------------------------------------------


def c5_witness(a, b, model):
    """For ``a`` apart from ``b``: ``c`` apart from ``a`` with ``b << c``."""
    return _sep(b, a, model)


def c6_witness(a, model):
    """For ``a != 1``: a nonzero ``b`` apart from ``a``."""
    rest = complement(model, a)
    return _inner(rest, model)


def bc3_witness(a, model):
    """For ``a != 0``: a bounded nonzero ``b << a``."""
    return _inner(a, model)


def _inner(a, model):
    if is_product(model):
        box = _pboxes(a)[0]
        names = model.names if isinstance(model, ProductReal) else sorted(box)
        return ProductRegion.box({y: inner_cone(box.get(y, ONE)) for y in names})
    return inner_cone(a)


def bc1_witness(a, c, model, bounded: bool = True):
    """For ``a << c`` (``a`` bounded): a bounded ``b`` with ``a << b << c``."""
    return _sep(a, complement(model, c), model, bounded=bounded)


def _nbhd(p: Dyadic) -> Region:
    d = Dyadic.pow2(-(p.e + 2))
    return region_from_intervals([(p - d, p + d)])


def bc2_witness(a, b, model):
    """For ``a C b``: a bounded ``c`` with ``a C (c AND b)``."""
    v = contact(a, b, model)
    if not v.value:
        raise WitnessError("the regions are not in contact")
    if is_product(model):
        point = dict(v.witness["point"])
        for y in model.names:
            point.setdefault(y, Dyadic(1, 1))
        return ProductRegion.box({y: _nbhd(point[y]) for y in model.names})
    p = contact_point(a, b, geo_kind(model))
    return _nbhd(p)


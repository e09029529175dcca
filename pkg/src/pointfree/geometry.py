"""The standard model: Delta-subdivision of [0, 1] and exact closures of regions.

A sequence ``(n1, n2, ...)`` over Z0 is sent to the unique point lying in every
cell ``Delta_(n1..nk)``.  Level-one cells are

    Delta_j = [1 - 2^-j, 1 - 2^-(j+1)]   for j > 0
    Delta_j = [2^(j-1), 2^j]             for j < 0

and the same rule, transported by the affine map onto a cell, subdivides every
cell.  Children accumulate at both ends of their parent without reaching them,
and the children ``j`` and ``j+`` (with ``-1+ = 1``) share one endpoint.

Everything here is exact.  Closures of boxes are decided by a recursion on the
level-one constraint, which is what makes contact a decision procedure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .dyadic import Dyadic, ONE as D1, ZERO as D0
from .region import Box, Region, make_box
from .zset import EMPTY, FULL, Path, ZSet, format_path, zo_step

__all__ = [
    "child_cell",
    "delta_interval",
    "DyInterval",
    "IntervalSet",
    "Tail",
    "ClosureSketch",
    "closure_sketch",
    "closure_contains",
    "touches_ends",
    "geo_contact",
    "contact_point",
    "is_bounded_real",
    "region_from_intervals",
    "locate_right",
    "locate_left",
]


# cells -------------------------------------------------------------------


def child_cell(j: int) -> tuple[Dyadic, int]:
    """Left end and length exponent of child ``j`` inside the unit cell."""
    if j > 0:
        return D1 - Dyadic.pow2(-j), j + 1
    if j < 0:
        return Dyadic.pow2(j - 1), 1 - j
    raise ValueError("0 is not an element of Z0")


def _cell(t: Path) -> tuple[Dyadic, int]:
    a, e = D0, 0
    for j in t:
        left, s = child_cell(j)
        a = a + left.scale(-e)
        e += s
    return a, e


@dataclass(frozen=True)
class DyInterval:
    lo: Dyadic
    hi: Dyadic

    def __post_init__(self):
        if not (D0 <= self.lo < self.hi <= D1):
            raise ValueError(f"need 0 <= lo < hi <= 1, got [{self.lo}, {self.hi}]")

    def __contains__(self, x: Dyadic) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def delta_interval(t: Path) -> DyInterval:
    """The cell ``Delta_t``; the root maps to [0, 1]."""
    a, e = _cell(tuple(t))
    return DyInterval(a, a + Dyadic.pow2(-e))


_IV_RE = re.compile(r"\[\s*([^,\]]+?)\s*,\s*([^\]]+?)\s*\]")


class IntervalSet:
    """Finitely many closed dyadic intervals, sorted and pairwise separated."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable = ()):
        items = []
        for iv in intervals:
            if not isinstance(iv, DyInterval):
                iv = DyInterval(*iv)
            items.append(iv)
        items.sort(key=lambda iv: (iv.lo, iv.hi))
        merged: list[DyInterval] = []
        for iv in items:
            if merged and iv.lo <= merged[-1].hi:
                if iv.hi > merged[-1].hi:
                    merged[-1] = DyInterval(merged[-1].lo, iv.hi)
            else:
                merged.append(iv)
        self.intervals = tuple(merged)

    def __or__(self, other: IntervalSet) -> IntervalSet:
        return IntervalSet(self.intervals + other.intervals)

    def __contains__(self, x: Dyadic) -> bool:
        return any(x in iv for iv in self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __str__(self) -> str:
        if not self.intervals:
            return "∅"
        return " ∪ ".join(str(iv) for iv in self.intervals)

    def __repr__(self) -> str:
        return f"IntervalSet({self})"

    @classmethod
    def parse(cls, text: str) -> IntervalSet:
        """Read ``[a, b] ∪ [c, d]``; ``U`` or ``u`` also work as the union sign."""
        body = text.strip()
        if body in ("", "∅", "{}"):
            return cls()
        pairs = _IV_RE.findall(body)
        rest = _IV_RE.sub("", body).replace("∪", "").replace("U", "").replace("u", "")
        if not pairs or rest.strip():
            raise ValueError(f"bad interval set {text!r}")
        return cls((Dyadic.parse(lo), Dyadic.parse(hi)) for lo, hi in pairs)


# box recursion ---------------------------------------------------------------


def _split(box: Box) -> tuple[ZSet, Box]:
    """Level-one constraint and the remaining box, re-rooted one level up."""
    if box and box[0][0] == 1:
        head, rest = box[0][1], box[1:]
    else:
        head, rest = FULL, box
    return head, tuple((lv - 1, z) for lv, z in rest)


def _has0(box: Box) -> bool:
    return not box or box[0][0] != 1 or box[0][1].has_down_ray()


def _has1(box: Box) -> bool:
    return not box or box[0][0] != 1 or box[0][1].has_up_ray()


def _right_links(s1: ZSet, r1: Box, s2: ZSet, r2: Box) -> ZSet:
    """Indices j with the right end of child j of box 1 equal to the left end
    of child j+ of box 2, both lying in the respective closures."""
    if not (_has1(r1) and _has0(r2)):
        return EMPTY
    return s1 & s2.shift(-1)


@lru_cache(maxsize=1 << 16)
def _meet_open(b1: Box, b2: Box) -> bool:
    """Do the closures of two nonzero boxes meet inside (0, 1)?"""
    if not b1 or not b2:
        return True
    s1, r1 = _split(b1)
    s2, r2 = _split(b2)
    if (s1 & s2).runs and _meet_closed(r1, r2):
        return True
    return bool(_right_links(s1, r1, s2, r2).runs or _right_links(s2, r2, s1, r1).runs)


@lru_cache(maxsize=1 << 16)
def _meet_closed(b1: Box, b2: Box) -> bool:
    if (_has0(b1) and _has0(b2)) or (_has1(b1) and _has1(b2)):
        return True
    return _meet_open(b1, b2)


def _into_child(j: int, p: Dyadic) -> Dyadic:
    left, s = child_cell(j)
    return left + p.scale(-s)


def _some_point(box: Box) -> Dyadic:
    """A point of the closure of a nonzero box lying in (0, 1)."""
    if not box:
        return Dyadic(1, 1)
    s, r = _split(box)
    j = s.pick()
    return _into_child(j, _some_point(r))


def _open_point(b1: Box, b2: Box) -> Optional[Dyadic]:
    if not b1:
        return _some_point(b2)
    if not b2:
        return _some_point(b1)
    s1, r1 = _split(b1)
    s2, r2 = _split(b2)
    common = s1 & s2
    if common.runs and _meet_closed(r1, r2):
        return _into_child(common.pick(), _closed_point(r1, r2))
    for x, rx, y, ry in ((s1, r1, s2, r2), (s2, r2, s1, r1)):
        links = _right_links(x, rx, y, ry)
        if links.runs:
            j = links.pick()
            left, s = child_cell(j)
            return left + Dyadic.pow2(-s)
    return None


def _closed_point(b1: Box, b2: Box) -> Optional[Dyadic]:
    p = _open_point(b1, b2)
    if p is not None:
        return p
    if _has0(b1) and _has0(b2):
        return D0
    if _has1(b1) and _has1(b2):
        return D1
    return None


def touches_ends(a: Region) -> bool:
    """Does the closure of ``a`` contain 0 or 1?"""
    return any(_has0(b) or _has1(b) for b in a.boxes)


def is_bounded_real(a: Region) -> bool:
    """Boundedness in the real-line model: the closure avoids 0 and 1."""
    return not touches_ends(a)


_KINDS = ("real", "interval", "circle")


def geo_contact(a: Region, b: Region, kind: str = "real") -> bool:
    """Exact closure intersection.

    ``real`` intersects inside (0, 1); ``interval`` keeps the endpoints;
    ``circle`` glues 0 and 1 into a single point.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown geometric model {kind!r}")
    meet = _meet_closed if kind == "interval" else _meet_open
    for x in a.boxes:
        for y in b.boxes:
            if meet(x, y):
                return True
    if kind == "circle":
        return touches_ends(a) and touches_ends(b)
    return False


def contact_point(a: Region, b: Region, kind: str = "real") -> Optional[Dyadic]:
    """A dyadic point common to both closures, or ``None``.

    For the circle a returned 0 stands for the glued point 0 = 1.
    """
    closed = kind == "interval"
    for x in a.boxes:
        for y in b.boxes:
            p = _closed_point(x, y) if closed else _open_point(x, y)
            if p is not None:
                return p
    if kind == "circle" and touches_ends(a) and touches_ends(b):
        return D0
    return None


# point membership ----------------------------------------------------------


def _floor_log2(x: Dyadic) -> int:
    return x.m.bit_length() - 1 - x.e


def _ceil_log2(x: Dyadic) -> int:
    f = _floor_log2(x)
    return f if x.m & (x.m - 1) == 0 else f + 1


def locate_right(u: Dyadic) -> int:
    """The child j whose cell contains ``u`` in ``[left, right)``; 0 < u < 1."""
    if u >= Dyadic(1, 1):
        # 2^-(j+1) < 1-u <= 2^-j
        return -_ceil_log2(D1 - u)
    return _floor_log2(u) + 1


def locate_left(u: Dyadic) -> int:
    """The child j whose cell contains ``u`` in ``(left, right]``; 0 < u < 1."""
    if u > Dyadic(1, 1):
        # 2^-(j+1) <= 1-u < 2^-j
        return -_floor_log2(D1 - u) - 1
    return _ceil_log2(u)


def _box_contains(box: Box, u: Dyadic) -> bool:
    if not box:
        return True
    s, r = _split(box)
    if u == D0:
        return s.has_down_ray()
    if u == D1:
        return s.has_up_ray()
    for j in {locate_right(u), locate_left(u)}:
        if j in s:
            left, e = child_cell(j)
            if _box_contains(r, (u - left).scale(e)):
                return True
    return False


def closure_contains(a: Region, x: Dyadic) -> bool:
    """Is the point ``x`` of [0, 1] in the closure of the image of ``a``?"""
    return any(_box_contains(b, x) for b in a.boxes)


# closure sketches ------------------------------------------------------------


@dataclass(frozen=True)
class Tail:
    """Infinitely many pieces accumulating at ``anchor``.

    The pieces are the closures of ``residual`` transported into the children
    ``start, start+, ...`` of ``node`` (side ``left``: they approach the anchor
    from the left) or ``start, start-, ...`` (side ``right``).
    """

    anchor: Dyadic
    side: str
    node: Path
    start: int
    residual: Region

    def contains(self, x: Dyadic) -> bool:
        if x == self.anchor:
            return True
        a, e = _cell(self.node)
        u = (x - a).scale(e)
        if not (D0 < u < D1):
            return False
        for j in {locate_right(u), locate_left(u)}:
            if (self.side == "left" and j >= self.start) or (self.side == "right" and j <= self.start):
                left, s = child_cell(j)
                if closure_contains(self.residual, (u - left).scale(s)):
                    return True
        return False

    def __str__(self) -> str:
        return (
            f"tail(anchor={self.anchor}, side={self.side}, node={format_path(self.node)}, "
            f"start={self.start}, residual={self.residual})"
        )


@dataclass(frozen=True)
class ClosureSketch:
    solid: IntervalSet
    tails: tuple = field(default_factory=tuple)

    def contains(self, x: Dyadic) -> bool:
        return x in self.solid or any(t.contains(x) for t in self.tails)

    def is_empty(self) -> bool:
        return not self.solid and not self.tails

    def __str__(self) -> str:
        parts = [str(iv) for iv in self.solid]
        parts += [str(t) for t in self.tails]
        return " ∪ ".join(parts) if parts else "∅"


def _sketch_box(box: Box, t: Path, a: Dyadic, e: int, solids: list, tails: list) -> None:
    top = a + Dyadic.pow2(-e)
    if not box:
        solids.append((a, top))
        return
    s, r = _split(box)

    def abs_left(j):
        left, _ = child_cell(j)
        return a + left.scale(-e)

    def abs_right(j):
        left, k = child_cell(j)
        return a + (left + Dyadic.pow2(-k)).scale(-e)

    for lo, hi in s.bounds():
        if not r:
            solids.append((a if lo is None else abs_left(lo), top if hi is None else abs_right(hi)))
            continue
        if lo is None and hi is None:
            lo_tail, hi_tail = -1, 1
        else:
            lo_tail = hi if lo is None else None
            hi_tail = lo if hi is None else None
        if lo is None:
            tails.append(Tail(a, "right", t, lo_tail, Region([r])))
        if hi is None:
            tails.append(Tail(top, "left", t, hi_tail, Region([r])))
        if lo is not None and hi is not None:
            j = lo
            while True:
                left, k = child_cell(j)
                _sketch_box(r, t + (j,), a + left.scale(-e), e + k, solids, tails)
                if j == hi:
                    break
                j = zo_step(j, "up")


def closure_sketch(a: Region) -> ClosureSketch:
    """Exact closure in [0, 1] of the image of ``a``."""
    solids: list = []
    tails: list = []
    for b in sorted(a.boxes, key=str):
        _sketch_box(b, (), D0, 0, solids, tails)
    tails.sort(key=lambda t: (t.anchor, t.side, t.node, t.start, str(t.residual)))
    return ClosureSketch(IntervalSet(solids), tuple(dict.fromkeys(tails)))


# from intervals back to regions ----------------------------------------------


def _cone_items(t: Path) -> dict:
    return {i + 1: ZSet.of(v) for i, v in enumerate(t)}


def _build(lo: Dyadic, hi: Dyadic, t: Path, a: Dyadic, e: int, out: list) -> None:
    top = a + Dyadic.pow2(-e)
    if lo == a and hi == top:
        out.append(make_box(_cone_items(t)))
        return
    u_lo = (lo - a).scale(e)
    u_hi = (hi - a).scale(e)
    jl = None if u_lo == D0 else locate_right(u_lo)
    jh = None if u_hi == D1 else locate_left(u_hi)

    def child(j):
        left, k = child_cell(j)
        ca = a + left.scale(-e)
        return ca, e + k, ca + Dyadic.pow2(-(e + k))

    if jl is not None and jl == jh:
        ca, ce, _ = child(jl)
        _build(lo, hi, t + (jl,), ca, ce, out)
        return
    run_lo = run_hi = None
    if jl is not None:
        ca, ce, ctop = child(jl)
        if lo == ca:
            run_lo = jl
        else:
            _build(lo, ctop, t + (jl,), ca, ce, out)
            run_lo = zo_step(jl, "up")
    if jh is not None:
        ca, ce, ctop = child(jh)
        if hi == ctop:
            run_hi = jh
        else:
            _build(ca, hi, t + (jh,), ca, ce, out)
            run_hi = zo_step(jh, "down")
    if run_lo is None or run_hi is None or run_lo <= run_hi:
        items = _cone_items(t)
        items[len(t) + 1] = ZSet.interval(run_lo, run_hi)
        out.append(make_box(items))


def region_from_intervals(s) -> Region:
    """A region whose closure is exactly the given set of dyadic intervals."""
    if not isinstance(s, IntervalSet):
        s = IntervalSet(s)
    out: list = []
    for iv in s:
        _build(iv.lo, iv.hi, (), D0, 0, out)
    return Region(out)

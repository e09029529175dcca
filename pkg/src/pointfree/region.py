"""The dense subalgebra of the region algebra: joins of finite-support cylinder boxes.

A *box* constrains finitely many levels ``i >= 1`` of an infinite sequence over
Z0 to lie in given subsets; it is stored as a tuple of ``(level, ZSet)`` pairs
sorted by level, never containing an empty or a full ZSet.  The empty tuple is
the box of all sequences.  A :class:`Region` is a finite join of boxes.

Because the level algebras are independent, a box is zero exactly when one of
its ZSets is empty, which makes zero tests, and hence ``<=``, exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .zset import FULL, Path, ZSet, path_tlam, pred, succ

__all__ = [
    "Box",
    "make_box",
    "box_meet",
    "box_le",
    "box_minus",
    "Region",
    "ZERO",
    "ONE",
    "phi",
    "Cone",
    "Q",
    "RayUp",
    "RayDown",
    "Generator",
    "make_generator",
]

Box = tuple  # tuple[tuple[int, ZSet], ...]


def make_box(constraints: Mapping[int, ZSet]) -> Optional[Box]:
    """Normalize a level -> ZSet mapping; ``None`` if the box is zero."""
    items = []
    for level, zs in sorted(constraints.items()):
        if level < 1:
            raise ValueError(f"levels start at 1, got {level}")
        if zs.is_empty():
            return None
        if not zs.is_full():
            items.append((level, zs))
    return tuple(items)


def box_meet(x: Box, y: Box) -> Optional[Box]:
    if not x:
        return y
    if not y:
        return x
    out = []
    i = j = 0
    while i < len(x) and j < len(y):
        lx, zx = x[i]
        ly, zy = y[j]
        if lx == ly:
            z = zx & zy
            if not z.runs:
                return None
            out.append((lx, z))
            i += 1
            j += 1
        elif lx < ly:
            out.append(x[i])
            i += 1
        else:
            out.append(y[j])
            j += 1
    out.extend(x[i:])
    out.extend(y[j:])
    return tuple(out)


def box_le(x: Box, y: Box) -> bool:
    """Box inclusion; both boxes nonzero."""
    dx = dict(x)
    for level, zy in y:
        zx = dx.get(level)
        if zx is None or not zx.issubset(zy):
            return False
    return True


def box_minus(r: Box, y: Box) -> list[Box]:
    """``r AND NOT y`` as a list of pairwise disjoint boxes."""
    dr = dict(r)
    for level, zy in y:
        zr = dr.get(level)
        if zr is not None and not (zr & zy).runs:
            return [r]
    pieces = []
    cur = dict(dr)
    for level, zy in y:
        zr = cur.get(level, FULL)
        out = zr - zy
        if out.runs:
            cur[level] = out
            pieces.append(make_box(cur))
        cur[level] = zr & zy
    return pieces


def _absorb(boxes: Iterable[Box]) -> frozenset:
    uniq = list(dict.fromkeys(boxes))
    if len(uniq) < 2:
        return frozenset(uniq)
    if () in uniq:
        return frozenset([()])
    uniq.sort(key=len)
    kept: list[Box] = []
    for b in uniq:
        if not any(box_le(b, k) for k in kept):
            kept = [k for k in kept if not box_le(k, b)]
            kept.append(b)
    return frozenset(kept)


class Region:
    """An element of the dense subalgebra, as a join of boxes."""

    __slots__ = ("boxes", "_hash")

    def __init__(self, boxes: Iterable[Box] = ()):
        self.boxes = _absorb(b for b in boxes if b is not None)
        self._hash = None

    @classmethod
    def from_constraints(cls, *boxes: Mapping[int, ZSet]) -> Region:
        return cls(make_box(b) for b in boxes)

    # Boolean operations -------------------------------------------------

    def __or__(self, other: Region) -> Region:
        return Region(self.boxes | other.boxes)

    def __and__(self, other: Region) -> Region:
        return Region(box_meet(x, y) for x in self.boxes for y in other.boxes)

    def __invert__(self) -> Region:
        rem: list[Box] = [()]
        for y in self.boxes:
            rem = [p for r in rem for p in box_minus(r, y)]
            if not rem:
                break
        return Region(rem)

    def __sub__(self, other: Region) -> Region:
        rem = list(self.boxes)
        for y in other.boxes:
            rem = [p for r in rem for p in box_minus(r, y)]
            if not rem:
                break
        return Region(rem)

    join = __or__
    meet = __and__
    complement = __invert__

    def is_zero(self) -> bool:
        return not self.boxes

    def is_one(self) -> bool:
        return not (~self).boxes

    def __le__(self, other: Region) -> bool:
        for x in self.boxes:
            rem = [x]
            for y in other.boxes:
                rem = [p for r in rem for p in box_minus(r, y)]
                if not rem:
                    break
            if rem:
                return False
        return True

    def leq(self, other: Region) -> bool:
        return self <= other

    def equals(self, other: Region) -> bool:
        """Equality as algebra elements, independent of representation."""
        return self <= other and other <= self

    # structure ----------------------------------------------------------

    def depth(self) -> int:
        return max((b[-1][0] for b in self.boxes if b), default=0)

    def shift(self, k: int) -> Region:
        """Move every constraint ``k`` levels deeper."""
        return Region(tuple((lv + k, z) for lv, z in b) for b in self.boxes)

    def residual(self, t: Path) -> Region:
        """What remains below node ``t``, re-rooted at level 1."""
        k = len(t)
        out = []
        for b in self.boxes:
            ok = True
            rest = []
            for lv, z in b:
                if lv <= k:
                    if t[lv - 1] not in z:
                        ok = False
                        break
                else:
                    rest.append((lv - k, z))
            if ok:
                out.append(tuple(rest))
        return Region(out)

    def finite_marks(self) -> set[int]:
        marks: set[int] = set()
        for b in self.boxes:
            for _, z in b:
                marks.update(z.finite_marks())
        return marks

    # identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Region) and self.boxes == other.boxes

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.boxes)
        return self._hash

    def __str__(self) -> str:
        from .syntax import format_region

        return format_region(self)

    def __repr__(self) -> str:
        return f"Region({self})"


ZERO = Region()
ONE = Region([()])


def phi(level: int, zs: ZSet) -> Region:
    """The canonical image of ``zs`` in the ``level``-th factor."""
    return Region([make_box({level: zs})])


# generators --------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """All sequences extending ``path``; the root cone is the top element."""

    path: Path


@dataclass(frozen=True)
class Q:
    """The bounded neighbourhood of the left end of ``Cone(path)``'s cell."""

    path: Path
    n: int


@dataclass(frozen=True)
class RayUp:
    n: int


@dataclass(frozen=True)
class RayDown:
    n: int


Generator = Union[Cone, Q, RayUp, RayDown]


def _cone_box(t: Path) -> dict:
    return {i + 1: ZSet.of(v) for i, v in enumerate(t)}


def make_generator(g: Generator) -> Region:
    if isinstance(g, Cone):
        return Region([make_box(_cone_box(g.path))])
    if isinstance(g, Q):
        if not g.path:
            raise ValueError("q needs a nonempty path")
        if g.n < 1:
            raise ValueError("q parameter must be a positive integer")
        k = len(g.path)
        left = _cone_box(path_tlam(g.path))
        left[k + 1] = succ(g.n)
        right = _cone_box(g.path)
        right[k + 1] = pred(-g.n)
        return Region([make_box(left), make_box(right)])
    if isinstance(g, RayUp):
        if g.n < 1:
            raise ValueError("ray parameter must be a positive integer")
        return phi(1, succ(g.n))
    if isinstance(g, RayDown):
        if g.n < 1:
            raise ValueError("ray parameter must be a positive integer")
        return phi(1, pred(-g.n))
    raise TypeError(f"not a generator: {g!r}")

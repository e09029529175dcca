"""Finite-support products of one-dimensional regions.

A product box assigns a region to finitely many named coordinates; an absent
coordinate carries the full factor.  This realizes the dense subalgebra of the
sum of the factor algebras, for finite sums (real:n) as well as for sums over
an arbitrary index set (tori and cubes), since every element only ever
mentions finitely many coordinates.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .region import ONE, Region

__all__ = ["ProductRegion", "product_box_minus"]

PBox = tuple  # tuple[tuple[str, Region], ...], sorted by name


def _make(factors: Mapping[str, Region]) -> Optional[PBox]:
    items = []
    for name in sorted(factors):
        f = factors[name]
        if f.is_zero():
            return None
        if not f.is_one():
            items.append((name, f))
    return tuple(items)


def _pmeet(x: PBox, y: PBox) -> Optional[PBox]:
    d = dict(x)
    for name, f in y:
        d[name] = d[name] & f if name in d else f
    return _make(d)


def _ple(x: PBox, y: PBox) -> bool:
    dx = dict(x)
    return all(name in dx and dx[name] <= f for name, f in y)


def product_box_minus(r: PBox, y: PBox) -> list:
    """``r AND NOT y`` as pairwise disjoint product boxes."""
    dr = dict(r)
    for name, f in y:
        if name in dr and (dr[name] & f).is_zero():
            return [r]
    pieces = []
    cur = dict(dr)
    for name, f in y:
        g = cur.get(name, ONE)
        out = g - f
        if not out.is_zero():
            cur[name] = out
            pieces.append(_make(cur))
        cur[name] = g & f
    return [p for p in pieces if p is not None]


def _absorb(boxes: Iterable[PBox]) -> frozenset:
    uniq = list(dict.fromkeys(b for b in boxes if b is not None))
    if () in uniq:
        return frozenset([()])
    uniq.sort(key=len)
    kept: list = []
    for b in uniq:
        if not any(_ple(b, k) for k in kept):
            kept = [k for k in kept if not _ple(k, b)]
            kept.append(b)
    return frozenset(kept)


class ProductRegion:
    __slots__ = ("boxes", "_hash")

    def __init__(self, boxes: Iterable[PBox] = ()):
        self.boxes = _absorb(boxes)
        self._hash = None

    @classmethod
    def box(cls, factors: Mapping[str, Region]) -> ProductRegion:
        return cls([_make(factors)])

    @classmethod
    def lift(cls, x) -> ProductRegion:
        """Accept 0, 1 or a product region in a product context."""
        if isinstance(x, ProductRegion):
            return x
        if isinstance(x, Region):
            if x.is_zero():
                return cls()
            if x.is_one():
                return cls([()])
        raise TypeError("a one-dimensional region needs a coordinate name here, e.g. {x: ...}")

    def coordinates(self) -> set:
        return {name for b in self.boxes for name, _ in b}

    def __or__(self, other) -> ProductRegion:
        other = ProductRegion.lift(other)
        return ProductRegion(self.boxes | other.boxes)

    def __and__(self, other) -> ProductRegion:
        other = ProductRegion.lift(other)
        return ProductRegion(_pmeet(x, y) for x in self.boxes for y in other.boxes)

    def __sub__(self, other) -> ProductRegion:
        other = ProductRegion.lift(other)
        rem = list(self.boxes)
        for y in other.boxes:
            rem = [p for r in rem for p in product_box_minus(r, y)]
            if not rem:
                break
        return ProductRegion(rem)

    def __invert__(self) -> ProductRegion:
        return ProductRegion([()]) - self

    def is_zero(self) -> bool:
        return not self.boxes

    def is_one(self) -> bool:
        return (~self).is_zero()

    def __le__(self, other) -> bool:
        return (self - other).is_zero()

    def equals(self, other) -> bool:
        return self <= other and ProductRegion.lift(other) <= self

    def __eq__(self, other) -> bool:
        return isinstance(other, ProductRegion) and self.boxes == other.boxes

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.boxes)
        return self._hash

    def __str__(self) -> str:
        if not self.boxes:
            return "0"
        out = []
        for b in sorted(self.boxes, key=_box_text):
            out.append(_box_text(b))
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"ProductRegion({self})"


def _box_text(b: PBox) -> str:
    if not b:
        return "1"
    parts = []
    for name, f in b:
        text = str(f)
        if len(f.boxes) > 1:
            text = f"({text})"
        parts.append(f"{name}: {text}")
    return "{" + ", ".join(parts) + "}"

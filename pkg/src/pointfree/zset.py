"""Subsets of Z0 = Z \\ {0} as finite unions of runs, and tree paths over Z0.

Z0 carries the order of Z with 0 deleted, so ``-1`` and ``1`` are adjacent.
Internally a run is stored in *packed* coordinates, where ``n -> n`` for
``n < 0`` and ``n -> n - 1`` for ``n > 0``; in packed coordinates Z0 is just Z
and adjacency is ordinary integer adjacency.  Rays use ``math.inf``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Optional

__all__ = [
    "ZSet",
    "zo_step",
    "succ",
    "pred",
    "Path",
    "path_tlam",
    "path_relation",
    "is_prefix",
    "format_path",
    "parse_path",
]

INF = math.inf


def _pack(n: float) -> float:
    if n == 0:
        raise ValueError("0 is not an element of Z0")
    return n if n < 0 else n - 1


def _unpack(c: float) -> float:
    return c if c < 0 else c + 1


def zo_step(n: int, direction: str = "up") -> int:
    """Successor (``up``) or predecessor (``down``) of ``n`` in Z0."""
    if n == 0:
        raise ValueError("0 is not an element of Z0")
    if direction == "up":
        return 1 if n == -1 else n + 1
    if direction == "down":
        return -1 if n == 1 else n - 1
    raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")


class ZSet:
    """An exact subset of Z0, kept as sorted, disjoint, maximal packed runs."""

    __slots__ = ("runs", "_hash")

    def __init__(self, runs: Iterable[tuple[float, float]] = (), *, packed: bool = False):
        if not packed:
            runs = [(_pack(lo), _pack(hi)) for lo, hi in runs]
        self.runs = _normalize(runs)
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def _from_packed(cls, runs: tuple) -> ZSet:
        obj = object.__new__(cls)
        obj.runs = runs
        obj._hash = None
        return obj

    @classmethod
    def empty(cls) -> ZSet:
        return EMPTY

    @classmethod
    def full(cls) -> ZSet:
        return FULL

    @classmethod
    def of(cls, *elements: int) -> ZSet:
        return cls((n, n) for n in elements)

    @classmethod
    def interval(cls, lo: Optional[int], hi: Optional[int]) -> ZSet:
        """Closed run from ``lo`` to ``hi``; ``None`` means unbounded."""
        plo = -INF if lo is None else _pack(lo)
        phi = INF if hi is None else _pack(hi)
        if plo > phi:
            return EMPTY
        return cls._from_packed(((plo, phi),))

    # Boolean structure ------------------------------------------------

    def __or__(self, other: ZSet) -> ZSet:
        return ZSet._from_packed(_normalize(self.runs + other.runs))

    def __and__(self, other: ZSet) -> ZSet:
        out = []
        a, b = self.runs, other.runs
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return ZSet._from_packed(tuple(out))

    def __invert__(self) -> ZSet:
        out = []
        cursor = -INF
        for lo, hi in self.runs:
            if lo > cursor:
                out.append((cursor, lo - 1))
            cursor = hi + 1
        if cursor <= INF and not (self.runs and self.runs[-1][1] == INF):
            out.append((cursor, INF))
        return ZSet._from_packed(tuple(out))

    def __sub__(self, other: ZSet) -> ZSet:
        return self & ~other

    def complement(self) -> ZSet:
        return ~self

    # queries ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.runs)

    def is_empty(self) -> bool:
        return not self.runs

    def is_full(self) -> bool:
        return self.runs == ((-INF, INF),)

    def __contains__(self, n: int) -> bool:
        if n == 0:
            return False
        c = _pack(n)
        for lo, hi in self.runs:
            if c < lo:
                return False
            if c <= hi:
                return True
        return False

    def has_up_ray(self) -> bool:
        return bool(self.runs) and self.runs[-1][1] == INF

    def has_down_ray(self) -> bool:
        return bool(self.runs) and self.runs[0][0] == -INF

    def is_finite(self) -> bool:
        return not (self.has_up_ray() or self.has_down_ray())

    def __le__(self, other: ZSet) -> bool:
        return not (self - other)

    def issubset(self, other: ZSet) -> bool:
        return not (self - other)

    def __iter__(self) -> Iterator[int]:
        """Elements in increasing order; only for finite sets."""
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite ZSet")
        for lo, hi in self.runs:
            for c in range(int(lo), int(hi) + 1):
                yield int(_unpack(c))

    def __len__(self) -> int:
        if not self.is_finite():
            raise ValueError("infinite ZSet has no length")
        return sum(int(hi - lo) + 1 for lo, hi in self.runs)

    def bounds(self) -> list[tuple[Optional[int], Optional[int]]]:
        """Runs in Z0 coordinates, ``None`` for an infinite end."""
        return [
            (None if lo == -INF else int(_unpack(lo)), None if hi == INF else int(_unpack(hi)))
            for lo, hi in self.runs
        ]

    def finite_marks(self) -> list[int]:
        """All finite run endpoints, in Z0 coordinates."""
        marks = []
        for lo, hi in self.bounds():
            if lo is not None:
                marks.append(lo)
            if hi is not None:
                marks.append(hi)
        return marks

    def pick(self) -> int:
        """A deterministic element: the one of least absolute value."""
        if not self.runs:
            raise ValueError("empty ZSet")
        best = None
        for lo, hi in self.runs:
            # the packed point closest to the packed origin (-1 | 0 boundary)
            for c in (lo, hi, -1, 0):
                if lo <= c <= hi and c not in (INF, -INF):
                    n = int(_unpack(c))
                    if best is None or (abs(n), n) < (abs(best), best):
                        best = n
        return best

    def shift(self, k: int) -> ZSet:
        """Image under ``n -> n`` stepped ``k`` times upward in Z0."""
        return ZSet._from_packed(tuple((lo + k, hi + k) for lo, hi in self.runs))

    # identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, ZSet) and self.runs == other.runs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.runs)
        return self._hash

    def __str__(self) -> str:
        parts = []
        for lo, hi in self.bounds():
            if lo is None and hi is None:
                parts.append("..")
            elif lo is None:
                parts.append(f"..{hi}")
            elif hi is None:
                parts.append(f"{lo}..")
            elif lo == hi:
                parts.append(str(lo))
            else:
                parts.append(f"{lo}..{hi}")
        return "{" + ",".join(parts) + "}"

    def __repr__(self) -> str:
        return f"ZSet({self})"

    @classmethod
    def parse(cls, text: str) -> ZSet:
        """Inverse of ``str``: ``{a..b, c.., ..d, k}``; 0 is rejected."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"ZSet literal must be braced: {text!r}")
        body = body[1:-1].strip()
        if not body:
            return EMPTY
        runs = []
        for item in body.split(","):
            item = item.strip()
            m = re.fullmatch(r"(-?\d+)?\s*(\.\.)?\s*(-?\d+)?", item)
            if not m or not item:
                raise ValueError(f"bad ZSet item {item!r}")
            lo, dots, hi = m.groups()
            if dots is None:
                if lo is None or hi is not None:
                    raise ValueError(f"bad ZSet item {item!r}")
                lo_v = hi_v = int(lo)
            else:
                lo_v = None if lo is None else int(lo)
                hi_v = None if hi is None else int(hi)
            if lo_v == 0 or hi_v == 0:
                raise ValueError("0 is not an element of Z0")
            runs.append((-INF if lo_v is None else lo_v, INF if hi_v is None else hi_v))
        return cls(runs)


def _normalize(runs) -> tuple:
    ordered = sorted(r for r in runs if r[0] <= r[1])
    out: list[tuple[float, float]] = []
    for lo, hi in ordered:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return tuple(out)


EMPTY = ZSet._from_packed(())
FULL = ZSet._from_packed(((-INF, INF),))


def succ(n: int) -> ZSet:
    """``{y in Z0 : n < y}``."""
    return ZSet._from_packed(((_pack(n) + 1, INF),))


def pred(n: int) -> ZSet:
    """``{y in Z0 : y < n}``."""
    return ZSet._from_packed(((-INF, _pack(n) - 1),))


# paths -----------------------------------------------------------------

Path = tuple  # tuple[int, ...] over Z0; () is the root


def path_tlam(t: Path) -> Path:
    """``t`` with its last entry replaced by the Z0-predecessor."""
    if not t:
        raise ValueError("the root path has no left sibling")
    return t[:-1] + (zo_step(t[-1], "down"),)


def is_prefix(t: Path, u: Path) -> bool:
    """True when ``u`` extends ``t`` (``t`` is below ``u`` in the tree)."""
    return len(t) <= len(u) and u[: len(t)] == t


def path_relation(t: Path, u: Path) -> str:
    """Classify under the extension order.

    Returns ``equal``, ``t-extends-u``, ``u-extends-t`` or ``incomparable``.
    """
    if t == u:
        return "equal"
    if is_prefix(u, t):
        return "t-extends-u"
    if is_prefix(t, u):
        return "u-extends-t"
    return "incomparable"


def format_path(t: Path) -> str:
    return "(" + ",".join(str(n) for n in t) + ")"


def parse_path(text: str) -> Path:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    entries = tuple(int(x) for x in body.split(","))
    if 0 in entries:
        raise ValueError("0 is not an element of Z0")
    return entries

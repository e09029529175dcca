"""Model identifiers and their textual descriptors.

    real, interval, circle       one-dimensional models
    real:2, real:x,y             finite sums of real lines (locally compact)
    torus:2, torus:a,b           sums of circles (compact)
    cube:2, cube:x,y,z           sums of unit intervals (compact)
    alex(real), alex(real:2)     one-point compactification of a local model
    rel(real, cone(1))           relativization to the region below cone(1)
"""

from __future__ import annotations

from dataclasses import dataclass

from .region import Region

__all__ = [
    "RealLine",
    "UnitInterval",
    "Circle",
    "ProductReal",
    "Torus",
    "Cube",
    "Alexandroff",
    "Relative",
    "Model",
    "default_names",
    "parse_model",
    "factor_model",
    "is_local",
    "is_product",
    "geo_kind",
]


@dataclass(frozen=True)
class RealLine:
    def __str__(self) -> str:
        return "real"


@dataclass(frozen=True)
class UnitInterval:
    def __str__(self) -> str:
        return "interval"


@dataclass(frozen=True)
class Circle:
    def __str__(self) -> str:
        return "circle"


@dataclass(frozen=True)
class ProductReal:
    names: tuple

    def __str__(self) -> str:
        return "real:" + ",".join(self.names)


@dataclass(frozen=True)
class Torus:
    names: tuple

    def __str__(self) -> str:
        return "torus:" + ",".join(self.names)


@dataclass(frozen=True)
class Cube:
    names: tuple

    def __str__(self) -> str:
        return "cube:" + ",".join(self.names)


@dataclass(frozen=True)
class Alexandroff:
    """Contact ``a C b`` iff ``a rho b`` or both are unbounded."""

    base: object

    def __str__(self) -> str:
        return f"alex({self.base})"


@dataclass(frozen=True)
class Relative:
    """The principal ideal below ``u`` with the inherited contact."""

    base: object
    u: Region

    def __post_init__(self):
        if self.u.is_zero():
            raise ValueError("cannot relativize to the zero region")
        if is_product(self.base) or isinstance(self.base, (Relative, Alexandroff)):
            raise ValueError("relativization is supported over real, interval and circle")

    def __str__(self) -> str:
        return f"rel({self.base}, {self.u})"


Model = object


def default_names(n: int) -> tuple:
    if n < 1:
        raise ValueError("dimension must be positive")
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


def is_product(model) -> bool:
    return isinstance(model, (ProductReal, Torus, Cube))


def is_local(model) -> bool:
    """Models whose bounded ideal is proper (the locally compact ones)."""
    if isinstance(model, Relative):
        return False
    return isinstance(model, (RealLine, ProductReal))


def factor_model(model):
    """The one-dimensional model a product is built from."""
    if isinstance(model, ProductReal):
        return RealLine()
    if isinstance(model, Torus):
        return Circle()
    if isinstance(model, Cube):
        return UnitInterval()
    raise ValueError(f"{model} is not a product model")


def geo_kind(model) -> str:
    """Which closure-intersection rule a one-dimensional model uses."""
    if isinstance(model, RealLine):
        return "real"
    if isinstance(model, UnitInterval):
        return "interval"
    if isinstance(model, Circle):
        return "circle"
    if isinstance(model, Relative):
        return geo_kind(model.base)
    raise ValueError(f"{model} has no one-dimensional geometric kind")


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _names(text: str) -> tuple:
    text = text.strip()
    if text.isdigit():
        return default_names(int(text))
    names = tuple(s.strip() for s in text.split(","))
    if not all(n.isidentifier() for n in names) or len(set(names)) != len(names):
        raise ValueError(f"bad coordinate names {text!r}")
    return names


def parse_model(text: str):
    """Read a model descriptor such as ``real``, ``torus:2`` or ``rel(real, cone(1))``."""
    s = text.strip()
    simple = {"real": RealLine, "interval": UnitInterval, "circle": Circle}
    if s in simple:
        return simple[s]()
    for prefix, cls in (("real:", ProductReal), ("torus:", Torus), ("cube:", Cube)):
        if s.startswith(prefix):
            return cls(_names(s[len(prefix):]))
    if s.startswith("alex(") and s.endswith(")"):
        base = parse_model(s[5:-1])
        if not is_local(base):
            raise ValueError("alex() needs a locally compact base (real or real:n)")
        return Alexandroff(base)
    if s.startswith("rel(") and s.endswith(")"):
        parts = _split_top(s[4:-1])
        if len(parts) != 2:
            raise ValueError("rel() takes a base model and a region")
        from .syntax import parse_with_info

        base = parse_model(parts[0])
        parsed = parse_with_info(parts[1])
        if not isinstance(parsed.value, Region):
            raise ValueError("rel() needs a one-dimensional region")
        if parsed.rays and not isinstance(base, UnitInterval):
            raise ValueError("up/down are generators of the interval model only")
        if parsed.value == Region([()]):
            return base
        return Relative(base, parsed.value)
    raise ValueError(f"unknown model {text!r}")

"""Drawings of closure sketches: an SVG strip, a 2-D SVG patch and an ASCII ruler.

SVG coordinates are the exact decimal expansions of the dyadic endpoints in
the unit interval (or square); the viewBox does the scaling.  A tail is drawn
as a marked anchor plus a comb of its first few pieces, fading toward the
anchor.
"""

from __future__ import annotations

from .dyadic import Dyadic
from .geometry import ClosureSketch, Tail, closure_sketch
from .products import ProductRegion
from .region import Cone, Region, make_generator
from .zset import zo_step

__all__ = ["tail_pieces", "svg_strip", "svg_product", "ascii_ruler", "render"]

COMB = 6
BAR = "#3465a4"


def tail_pieces(tail: Tail, count: int = COMB) -> list:
    """Solid closures of the first ``count`` pieces of a tail, nearest-first from ``start``."""
    out = []
    j = tail.start
    step = "up" if tail.side == "left" else "down"
    for _ in range(count):
        t = tail.node + (j,)
        piece = make_generator(Cone(t)) & tail.residual.shift(len(t))
        out.append(list(closure_sketch(piece).solid))
        j = zo_step(j, step)
    return out


def _num(x: Dyadic) -> str:
    return x.decimal()


def svg_strip(sketch: ClosureSketch, title: str = "") -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="160" '
        'viewBox="-0.02 -0.06 1.04 0.2" preserveAspectRatio="none">',
    ]
    if title:
        lines.append(f"  <title>{_escape(title)}</title>")
    lines.append('  <line x1="0" y1="0.05" x2="1" y2="0.05" stroke="#888" stroke-width="0.002"/>')
    for k in range(9):
        x = Dyadic(k, 3).decimal()
        lines.append(f'  <line x1="{x}" y1="0.04" x2="{x}" y2="0.06" stroke="#888" stroke-width="0.002"/>')
    for iv in sketch.solid:
        w = (iv.hi - iv.lo).decimal()
        lines.append(
            f'  <rect class="solid" x="{_num(iv.lo)}" y="0.02" width="{w}" height="0.06" fill="{BAR}"/>'
        )
    for t in sketch.tails:
        lines.append(f'  <circle class="anchor" cx="{_num(t.anchor)}" cy="0.05" r="0.006" fill="#cc0000"/>')
        for i, pieces in enumerate(tail_pieces(t)):
            opacity = Dyadic(1, i).decimal()
            for iv in pieces:
                w = (iv.hi - iv.lo).decimal()
                lines.append(
                    f'  <rect class="comb" x="{_num(iv.lo)}" y="0.03" width="{w}" height="0.04" '
                    f'fill="{BAR}" fill-opacity="{opacity}"/>'
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def svg_product(a: ProductRegion, names: tuple, title: str = "") -> str:
    """Rectangles for boxes whose coordinate closures are plain intervals."""
    if len(names) != 2:
        raise ValueError("2-D drawings need exactly two coordinates")
    x_name, y_name = names
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="600" '
        'viewBox="-0.02 -0.02 1.04 1.04">',
    ]
    if title:
        lines.append(f"  <title>{_escape(title)}</title>")
    lines.append('  <rect x="0" y="0" width="1" height="1" fill="none" stroke="#888" stroke-width="0.002"/>')
    for box in sorted(a.boxes, key=str):
        d = dict(box)
        xs = _solids(d.get(x_name))
        ys = _solids(d.get(y_name))
        for ix in xs:
            for iy in ys:
                # y grows downward in SVG
                top = Dyadic(1) - iy.hi
                lines.append(
                    f'  <rect class="solid" x="{_num(ix.lo)}" y="{_num(top)}" '
                    f'width="{(ix.hi - ix.lo).decimal()}" height="{(iy.hi - iy.lo).decimal()}" '
                    f'fill="{BAR}" fill-opacity="0.6"/>'
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _solids(f) -> list:
    if f is None:
        return list(closure_sketch(Region([()])).solid)
    sk = closure_sketch(f)
    pieces = list(sk.solid)
    for t in sk.tails:
        for group in tail_pieces(t):
            pieces.extend(group)
    return pieces


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def ascii_ruler(sketch: ClosureSketch, width: int = 64) -> str:
    """Character strip over [0, 1]: '#' solid, '~' tail pieces, '*' anchors."""
    cells = ["."] * width
    w = Dyadic(width)

    def mark(lo: Dyadic, hi: Dyadic, ch: str):
        a = (lo * w).to_fraction()
        b = (hi * w).to_fraction()
        for i in range(width):
            if i + 1 > a and i < b and cells[i] != "#":
                cells[i] = ch

    for t in sketch.tails:
        for pieces in tail_pieces(t):
            for iv in pieces:
                mark(iv.lo, iv.hi, "~")
    for iv in sketch.solid:
        mark(iv.lo, iv.hi, "#")
    for t in sketch.tails:
        i = min(width - 1, int((t.anchor * w).to_fraction()))
        cells[i] = "*"
    ruler = "0" + " " * (width // 2 - 2) + "1/2" + " " * (width - width // 2 - 3) + "1"
    return "|" + "".join(cells) + "|\n" + " " + ruler[: width + 1] + "\n"


def render(a, names: tuple = (), fmt: str = "svg", title: str = "") -> str:
    if isinstance(a, ProductRegion):
        if fmt != "svg":
            raise ValueError("products are drawn as SVG only")
        return svg_product(a, names, title)
    sk = closure_sketch(a)
    if fmt == "ascii":
        return ascii_ruler(sk)
    return svg_strip(sk, title)

"""Region expressions: a small precedence grammar and its canonical printer.

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := '!' factor | atom
    atom   := cone(n,...) | q(n,...;r) | up(n) | down(n) | phi(level,{zset})
            | 0 | 1 | '(' expr ')' | '{' name ':' expr (',' name ':' expr)* '}'

``+`` is join, ``*`` is meet and ``!`` is complement.  Braces build a product
box with named coordinates.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .region import ONE, ZERO, Cone, Generator, Q, RayDown, RayUp, Region, make_generator, phi
from .zset import ZSet

__all__ = [
    "ParseError",
    "Parsed",
    "parse_expression",
    "parse_with_info",
    "format_region",
    "format_generator",
]


class ParseError(ValueError):
    """Syntax or semantic error with a byte offset into the source text."""

    def __init__(self, offset: int, message: str, expected: frozenset = frozenset()):
        self.offset = offset
        self.expected = expected
        detail = message
        if expected:
            detail += " (expected one of: " + ", ".join(sorted(expected)) + ")"
        super().__init__(f"offset {offset}: {detail}")


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<dots>\.\.)|(?P<punct>[()+*!{},;:]))"
)


@dataclass
class _Tok:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    raw = text.encode("utf-8")
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            stripped = len(rest) - len(rest.lstrip())
            off = len(text[: pos + stripped].encode("utf-8"))
            raise ParseError(off, f"unexpected character {rest.lstrip()[0]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind if kind not in ("punct", "dots") else m.group(kind), m.group(kind), len(text[:start].encode("utf-8"))))
        pos = m.end()
    toks.append(_Tok("end", "", len(raw)))
    return toks


@dataclass
class Parsed:
    """Parse result: the value, the generator if the text is one, and whether
    interval-only ray generators occur."""

    value: object
    generator: Optional[Generator]
    rays: bool


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.rays = False

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, *kinds: str) -> _Tok:
        tok = self.peek()
        if tok.kind not in kinds:
            found = tok.text or "end of input"
            raise ParseError(tok.offset, f"unexpected {found!r}", frozenset(kinds))
        self.i += 1
        return tok

    def integer(self) -> tuple[int, int]:
        tok = self.take("int")
        return int(tok.text), tok.offset

    def nonzero(self) -> int:
        value, off = self.integer()
        if value == 0:
            raise ParseError(off, "0 is not an element of Z0")
        return value

    def positive(self, what: str) -> int:
        value, off = self.integer()
        if value < 1:
            raise ParseError(off, f"{what} must be a positive integer")
        return value

    # grammar ---------------------------------------------------------------

    def expr(self):
        value = self.term()
        while self.peek().kind == "+":
            self.i += 1
            value = _combine(value, self.term(), "join")
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind == "*":
            self.i += 1
            value = _combine(value, self.factor(), "meet")
        return value

    def factor(self):
        if self.peek().kind == "!":
            self.i += 1
            return ~self.factor()
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            if tok.text in ("0", "1"):
                self.i += 1
                return ZERO if tok.text == "0" else ONE
            raise ParseError(tok.offset, f"unexpected number {tok.text}", frozenset({"0", "1"}))
        if tok.kind == "(":
            self.i += 1
            value = self.expr()
            self.take(")")
            return value
        if tok.kind == "{":
            return self.product()
        if tok.kind == "name":
            return make_generator(self.generator()) if tok.text != "phi" else self.phi()
        raise ParseError(
            tok.offset,
            f"unexpected {tok.text or 'end of input'!r}",
            frozenset({"cone", "q", "up", "down", "phi", "0", "1", "(", "{", "!"}),
        )

    def generator(self) -> Generator:
        tok = self.take("name")
        name = tok.text
        if name not in ("cone", "q", "up", "down"):
            raise ParseError(tok.offset, f"unknown atom {name!r}", frozenset({"cone", "q", "up", "down", "phi"}))
        self.take("(")
        if name == "cone":
            path = []
            if self.peek().kind != ")":
                path.append(self.nonzero())
                while self.peek().kind == ",":
                    self.i += 1
                    path.append(self.nonzero())
            self.take(")")
            return Cone(tuple(path))
        if name == "q":
            start = self.peek().offset
            path = []
            if self.peek().kind == "int":
                path.append(self.nonzero())
                while self.peek().kind == ",":
                    self.i += 1
                    path.append(self.nonzero())
            if not path:
                raise ParseError(start, "q needs a nonempty path")
            self.take(";")
            n = self.positive("q parameter")
            self.take(")")
            return Q(tuple(path), n)
        n = self.positive("ray parameter")
        self.take(")")
        self.rays = True
        return RayUp(n) if name == "up" else RayDown(n)

    def phi(self) -> Region:
        self.take("name")
        self.take("(")
        level = self.positive("level")
        self.take(",")
        zs = self.zset()
        self.take(")")
        return phi(level, zs)

    def zset(self) -> ZSet:
        self.take("{")
        runs = []
        if self.peek().kind != "}":
            runs.append(self.zrun())
            while self.peek().kind == ",":
                self.i += 1
                runs.append(self.zrun())
        self.take("}")
        return ZSet(runs)

    def zrun(self) -> tuple:
        lo = hi = None
        if self.peek().kind == "int":
            lo = self.nonzero()
            if self.peek().kind != "..":
                return (lo, lo)
        self.take("..")
        if self.peek().kind == "int":
            hi = self.nonzero()
        return (-math.inf if lo is None else lo, math.inf if hi is None else hi)

    def product(self):
        from .products import ProductRegion

        self.take("{")
        factors = {}
        while True:
            name_tok = self.take("name")
            if name_tok.text in factors:
                raise ParseError(name_tok.offset, f"coordinate {name_tok.text!r} given twice")
            self.take(":")
            value = self.expr()
            if not isinstance(value, Region):
                raise ParseError(name_tok.offset, "product factors must be one-dimensional")
            factors[name_tok.text] = value
            if self.peek().kind == ",":
                self.i += 1
                continue
            self.take("}")
            return ProductRegion.box(factors)


def _combine(x, y, op: str):
    from .products import ProductRegion

    if isinstance(x, ProductRegion) or isinstance(y, ProductRegion):
        x, y = ProductRegion.lift(x), ProductRegion.lift(y)
    return x | y if op == "join" else x & y


def parse_with_info(text: str) -> Parsed:
    p = _Parser(text)
    gen = None
    # a lone generator atom is remembered for formula dispatch
    if p.peek().kind == "name" and p.peek().text != "phi":
        save = p.i
        try:
            g = p.generator()
            if p.peek().kind == "end":
                gen = g
        except ParseError:
            pass
        p.i = save
        p.rays = False
    value = p.expr()
    p.take("end")
    return Parsed(value, gen, p.rays)


def parse_expression(text: str):
    """Parse to a :class:`Region` (or a ``ProductRegion`` for braced boxes)."""
    return parse_with_info(text).value


# printing --------------------------------------------------------------------


def box_key(box) -> tuple:
    return tuple((lv, z.runs) for lv, z in box)


def _format_box(box) -> str:
    if not box:
        return "1"
    path = []
    for lv, z in box:
        if lv == len(path) + 1 and len(z.runs) == 1 and z.runs[0][0] == z.runs[0][1]:
            path.append(next(iter(z)))
        else:
            break
    parts = [f"cone({','.join(str(n) for n in path)})"] if path else []
    parts += [f"phi({lv},{z})" for lv, z in box[len(path):]]
    return "*".join(parts)


def format_region(a: Region) -> str:
    """Canonical text; ``parse_expression`` reads it back to the same value."""
    if not a.boxes:
        return "0"
    return " + ".join(_format_box(b) for b in sorted(a.boxes, key=box_key))


def format_generator(g: Generator) -> str:
    if isinstance(g, Cone):
        return f"cone({','.join(str(n) for n in g.path)})"
    if isinstance(g, Q):
        return f"q({','.join(str(n) for n in g.path)};{g.n})"
    if isinstance(g, RayUp):
        return f"up({g.n})"
    if isinstance(g, RayDown):
        return f"down({g.n})"
    raise TypeError(g)


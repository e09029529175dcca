"""Command-line front end.

    pointfree contact real "cone(1)" "cone(2)"
    pointfree closure interval "up(1)"
    pointfree axioms interval --family CA --trials 10000 --seed 7
    pointfree sweep presentation --depth 3 --entry 4 --r 4
    pointfree render real "q(1;1)" --format ascii
    pointfree corpus corpus/examples.jsonl

Exit status: 0 when a query was evaluated (whatever the verdict), 1 when an
axiom suite, sweep or corpus run found failures, 2 on parse or semantic
errors.  The default seed comes from POINTFREE_SEED.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import shlex
import sys

from . import witness as W
from .axioms import check_axioms
from .dyadic import Dyadic
from .engine import (
    TreeCone,
    TreeD,
    complement,
    contact,
    cover_separated,
    is_bounded,
    restrict,
    separated_bounded,
    tree_translate,
    well_inside,
)
from .geometry import IntervalSet, closure_sketch, delta_interval, geo_contact, region_from_intervals
from .models import Cube, Relative, UnitInterval, geo_kind, is_product, parse_model
from .products import ProductRegion
from .region import Region
from .render import render
from .sweeps import Bounds, check_equivalences
from .syntax import ParseError, format_generator, parse_with_info
from .zset import ZSet, format_path, parse_path, path_relation, path_tlam, zo_step

__all__ = ["main", "run_corpus"]


class UsageError(ValueError):
    pass


def _default_seed() -> int:
    raw = os.environ.get("POINTFREE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"POINTFREE_SEED must be an integer, got {raw!r}") from None


def _rays_allowed(model) -> bool:
    if isinstance(model, Relative):
        return _rays_allowed(model.base)
    return isinstance(model, (UnitInterval, Cube))


def _model(text: str):
    try:
        return parse_model(text)
    except ParseError as exc:
        raise UsageError(f"in model {text!r}: {exc}") from None


def _operand(text: str, model):
    parsed = parse_with_info(text)
    if parsed.rays and not _rays_allowed(model):
        raise UsageError(f"up/down are generators of the interval model, not of {model}")
    value = parsed.value
    if is_product(getattr(model, "base", model)) and isinstance(value, Region):
        value = ProductRegion.lift(value)
    return value


def _bool(v) -> str:
    return "true" if v else "false"


def _sketch_text(a, model) -> str:
    if isinstance(a, ProductRegion):
        if a.is_zero():
            return "∅"
        lines = []
        for box in sorted(a.boxes, key=str):
            d = dict(box)
            names = sorted(set(d) | set(getattr(model, "names", ())))
            parts = [f"{n}: {closure_sketch(d[n]) if n in d else IntervalSet([(Dyadic(0), Dyadic(1))])}" for n in names]
            lines.append("{" + ", ".join(parts) + "}")
        return "\n".join(lines)
    return str(closure_sketch(a))


def _witness_text(w) -> list:
    out = []
    if not w:
        return out
    if "point" in w:
        p = w["point"]
        if isinstance(p, dict):
            out.append("point: " + ", ".join(f"{k}={v}" for k, v in sorted(p.items())))
        else:
            out.append(f"point: {p}")
    if "bounded" in w:
        a, b = w["bounded"]
        out.append(f"bounded pair: {a} | {b}")
    if w.get("unbounded"):
        out.append("both unbounded")
    return out


# commands ------------------------------------------------------------------------


def cmd_contact(args):
    model = _model(args.model)
    v = contact(_operand(args.a, model), _operand(args.b, model), model)
    print(_bool(v.value))
    if args.witness:
        for line in _witness_text(v.witness):
            print(line)
    return 0


def cmd_ll(args):
    model = _model(args.model)
    print(_bool(well_inside(_operand(args.a, model), _operand(args.b, model), model)))
    return 0


def cmd_separated(args):
    model = _model(args.model)
    c, d = _operand(args.a, model), _operand(args.b, model)
    print(_bool(separated_bounded(c, d, model)))
    if args.cover and isinstance(c, Region) and not isinstance(model, Relative):
        found = cover_separated(c, d, model)
        if found is None:
            print("cover: none within bounds")
        else:
            for label, gens in zip("cd", found):
                print(f"cover {label}: " + " + ".join(format_generator(g) for g in gens))
    return 0


def cmd_bounded(args):
    model = _model(args.model)
    print(_bool(is_bounded(_operand(args.a, model), model)))
    return 0


def cmd_closure(args):
    model = _model(args.model)
    print(_sketch_text(restrict(model, _operand(args.a, model)), model))
    return 0


def cmd_eq(args):
    model = _model(args.model)
    a = restrict(model, _operand(args.a, model))
    b = restrict(model, _operand(args.b, model))
    print(_bool(a.equals(b)))
    return 0


def cmd_leq(args):
    model = _model(args.model)
    a = restrict(model, _operand(args.a, model))
    b = restrict(model, _operand(args.b, model))
    print(_bool(a <= b))
    return 0


def cmd_gcontact(args):
    model = _model(args.model)
    a = restrict(model, _operand(args.a, model))
    b = restrict(model, _operand(args.b, model))
    print(_bool(geo_contact(a, b, geo_kind(model))))
    return 0


def cmd_complement(args):
    model = _model(args.model)
    print(complement(model, _operand(args.a, model)))
    return 0


def cmd_model(args):
    print(_model(args.model))
    return 0


def cmd_norm(args):
    print(parse_with_info(args.a).value)
    return 0


def cmd_delta(args):
    print(delta_interval(parse_path(args.path)))
    return 0


def cmd_fromintervals(args):
    s = IntervalSet.parse(args.intervals)
    print(region_from_intervals([(iv.lo, iv.hi) for iv in s]))
    return 0


def cmd_step(args):
    print(zo_step(int(args.n), args.direction))
    return 0


def cmd_zset(args):
    x = ZSet.parse(args.s1)
    if args.op == "complement":
        print(~x)
        return 0
    if args.s2 is None:
        raise UsageError(f"zset {args.op} needs two sets")
    y = ZSet.parse(args.s2)
    print(x | y if args.op == "union" else x & y)
    return 0


def cmd_tlam(args):
    print(format_path(path_tlam(parse_path(args.path))))
    return 0


def cmd_pathrel(args):
    print(path_relation(parse_path(args.t), parse_path(args.u)))
    return 0


def _tree_item(text: str):
    s = text.replace(" ", "")
    if s.startswith("c(") and s.endswith(")"):
        return TreeCone(parse_path(s[1:]))
    if s.startswith("d(") and s.endswith(")") and ";" in s:
        path, n = s[2:-1].split(";")
        return TreeD(parse_path(f"({path})"), int(n))
    raise UsageError(f"tree generators look like c(1,5) or d(1;2), got {text!r}")


def cmd_tree(args):
    print(tree_translate(_tree_item(args.g)))
    return 0


WITNESSES = {
    "C5": lambda a, b, m: W.c5_witness(a, b, m),
    "C6": lambda a, b, m: W.c6_witness(a, m),
    "BC1": lambda a, b, m: W.bc1_witness(a, b, m),
    "BC2": lambda a, b, m: W.bc2_witness(a, b, m),
    "BC3": lambda a, b, m: W.bc3_witness(a, m),
}


def _witness_ok(axiom: str, a, b, w, model) -> bool:
    C = lambda x, y: contact(x, y, model).value  # noqa: E731
    if axiom == "C5":
        return not C(a, w) and not C(b, complement(model, w))
    if axiom == "C6":
        return not w.is_zero() and not C(w, a)
    if axiom == "BC1":
        return is_bounded(w, model) and well_inside(a, w, model) and well_inside(w, b, model)
    if axiom == "BC2":
        return is_bounded(w, model) and C(a, w & b)
    if axiom == "BC3":
        return not w.is_zero() and is_bounded(w, model) and well_inside(w, a, model)
    raise UsageError(f"unknown axiom {axiom!r}")


def cmd_witness(args):
    model = _model(args.model)
    axiom = args.axiom.upper()
    if axiom not in WITNESSES:
        raise UsageError(f"witnesses exist for {sorted(WITNESSES)}")
    a = restrict(model, _operand(args.a, model))
    b = restrict(model, _operand(args.b, model)) if args.b else None
    if axiom in ("C5", "BC1", "BC2") and b is None:
        raise UsageError(f"{axiom} needs two operands")
    if args.candidate:
        w = restrict(model, _operand(args.candidate, model))
    else:
        try:
            w = WITNESSES[axiom](a, b, model)
        except W.WitnessError as exc:
            print(f"no witness: {exc}")
            return 1
    ok = _witness_ok(axiom, a, b, w, model)
    if args.candidate:
        print(_bool(ok))
    else:
        print(w)
        print("verified" if ok else "REJECTED")
    return 0 if ok or args.candidate else 1


def cmd_axioms(args):
    model = _model(args.model)
    seed = args.seed if args.seed is not None else _default_seed()
    reports = check_axioms(model, args.family, args.trials, seed, args.existential_trials)
    failed = False
    for r in reports:
        print(r.to_json() if args.json else r.summary())
        failed |= not r.passed
        if not args.json:
            for f in r.failures[:5]:
                print("    " + json.dumps(f, ensure_ascii=False))
    if not args.json:
        print("pass" if not failed else "FAIL")
    return 1 if failed else 0


def cmd_sweep(args):
    rep = check_equivalences(args.which, Bounds(args.depth, args.entry, args.r))
    print(rep.summary())
    for m in rep.mismatches[:20]:
        print("    " + json.dumps(m, ensure_ascii=False))
    return 0 if rep.passed else 1


def cmd_render(args):
    model = _model(args.model)
    a = restrict(model, _operand(args.a, model))
    names = getattr(model, "names", ())
    if isinstance(a, ProductRegion) and len(names) != 2:
        raise UsageError("only two-coordinate products can be drawn")
    text = render(a, names, args.format, title=args.a)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _run_entry(entry: dict) -> tuple:
    argv = [entry["command"]]
    if entry.get("model") is not None:
        argv.append(entry["model"])
    for key in ("a", "b"):
        if entry.get(key) is not None:
            argv.append(entry[key])
    argv += entry.get("args", [])
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return argv, code, out.getvalue().strip()


def run_corpus(path: str) -> list:
    """Evaluate every line of a JSON-lines corpus; returns (index, ok, detail) triples.

    An entry is ``{model, command, a, b, expect}`` plus optional ``args`` (extra
    argv), ``exit`` (expected status, default 0) and ``match`` (``full``,
    ``last``, ``contains`` or ``endswith``).  ``expect: "error"`` asks for exit 2.
    """
    results = []
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("//")]
    for i, line in enumerate(lines):
        entry = json.loads(line)
        argv, code, got = _run_entry(entry)
        want = entry["expect"]
        match = entry.get("match", "full")
        if want == "error":
            ok = code == 2
        elif code != entry.get("exit", 0):
            ok = False
        elif match == "last":
            ok = got.splitlines()[-1:] == [want]
        elif match == "contains":
            ok = want in got
        elif match == "endswith":
            ok = got.endswith(want)
        else:
            ok = got == want
        results.append((i, ok, f"{shlex.join(argv)} -> {got!r} (exit {code}); expected {want!r}"))
    return results


def cmd_corpus(args):
    results = run_corpus(args.file)
    bad = 0
    for i, ok, detail in results:
        if not ok or args.verbose:
            print(("ok   " if ok else "FAIL ") + f"#{i}: {detail}")
        bad += not ok
    print(f"{len(results) - bad}/{len(results)} corpus entries met")
    return 1 if bad else 0


# argument parsing ----------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointfree", description="Contact algebras on dyadic regions.")
    sub = p.add_subparsers(dest="command", required=True)

    def query(name, fn, operands, help_text):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("model")
        for op in operands:
            q.add_argument(op)
        q.set_defaults(fn=fn)
        return q

    q = query("contact", cmd_contact, "ab", "decide contact")
    q.add_argument("--witness", action="store_true", help="print a contact point")
    query("ll", cmd_ll, "ab", "decide a << b")
    q = query("separated", cmd_separated, "ab", "separation of two bounded regions")
    q.add_argument("--cover", action="store_true", help="also search separated generator covers")
    query("bounded", cmd_bounded, "a", "membership in the bounded ideal")
    query("closure", cmd_closure, "a", "exact closure sketch")
    query("eq", cmd_eq, "ab", "equality in the model")
    query("leq", cmd_leq, "ab", "order in the model")
    query("gcontact", cmd_gcontact, "ab", "geometric oracle on closures")
    query("complement", cmd_complement, "a", "complement inside the model")
    query("model", cmd_model, "", "canonical model descriptor")

    q = sub.add_parser("witness", help="construct or check an existential-axiom witness")
    q.add_argument("model")
    q.add_argument("axiom", help="C5, C6, BC1, BC2 or BC3")
    q.add_argument("a")
    q.add_argument("b", nargs="?")
    q.add_argument("--candidate", help="check this region instead of constructing one")
    q.set_defaults(fn=cmd_witness)

    q = sub.add_parser("norm", help="canonical form of an expression")
    q.add_argument("a")
    q.set_defaults(fn=cmd_norm)
    q = sub.add_parser("delta", help="the dyadic interval of a path")
    q.add_argument("path")
    q.set_defaults(fn=cmd_delta)
    q = sub.add_parser("fromintervals", help="region whose closure is a union of dyadic intervals")
    q.add_argument("intervals")
    q.set_defaults(fn=cmd_fromintervals)
    q = sub.add_parser("step", help="neighbour in the nonzero integers")
    q.add_argument("n")
    q.add_argument("direction", choices=["up", "down"])
    q.set_defaults(fn=cmd_step)
    q = sub.add_parser("zset", help="set operations on nonzero integers")
    q.add_argument("op", choices=["union", "intersection", "complement"])
    q.add_argument("s1")
    q.add_argument("s2", nargs="?")
    q.set_defaults(fn=cmd_zset)
    q = sub.add_parser("tlam", help="the left neighbour path")
    q.add_argument("path")
    q.set_defaults(fn=cmd_tlam)
    q = sub.add_parser("pathrel", help="prefix relation of two paths")
    q.add_argument("t")
    q.add_argument("u")
    q.set_defaults(fn=cmd_pathrel)
    q = sub.add_parser("tree", help="translate a tree generator c(t) or d(t;n)")
    q.add_argument("g")
    q.set_defaults(fn=cmd_tree)

    q = sub.add_parser("axioms", help="seeded axiom suite")
    q.add_argument("model")
    q.add_argument("--family", required=True, choices=["CA", "NCA", "LCA", "LL"])
    q.add_argument("--trials", type=int, default=10_000)
    q.add_argument("--existential-trials", type=int, default=None)
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("--json", action="store_true")
    q.set_defaults(fn=cmd_axioms)

    q = sub.add_parser("sweep", help="exhaustive equivalence sweep")
    q.add_argument("which", choices=["formula-real", "formula-interval", "presentation", "circle", "relative", "product"])
    q.add_argument("--depth", type=int, default=3)
    q.add_argument("--entry", type=int, default=4)
    q.add_argument("--r", type=int, default=4)
    q.set_defaults(fn=cmd_sweep)

    q = sub.add_parser("render", help="draw a closure as SVG or ASCII")
    q.add_argument("model")
    q.add_argument("a")
    q.add_argument("--format", choices=["svg", "ascii"], default="svg")
    q.add_argument("-o", "--output")
    q.set_defaults(fn=cmd_render)

    q = sub.add_parser("corpus", help="run a JSON-lines corpus")
    q.add_argument("file")
    q.add_argument("-v", "--verbose", action="store_true")
    q.set_defaults(fn=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except (ParseError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

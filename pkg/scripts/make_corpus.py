"""Write corpus/examples.jsonl from the hand-listed examples below.

Every expectation is typed in by hand from the worked examples; nothing here is
computed by the package.
"""

import json
from pathlib import Path

Q11 = "cone(-1)*phi(2,{2..}) + cone(1)*phi(2,{..-2})"

E = [
    # nonzero integers and paths
    (None, "step", "1", None, "-1", ["down"]),
    (None, "step", "-1", None, "1", ["up"]),
    (None, "step", "5", None, "4", ["down"]),
    (None, "zset", "complement", "{1}", "{..-1,2..}"),
    (None, "zset", "intersection", "{1,2}", "{2}", ["{2,3}"]),
    (None, "zset", "union", "{-3..-1}", "{-3..4}", ["{1..4}"]),
    (None, "tlam", "(3,2)", None, "(3,1)"),
    (None, "tlam", "(3,1)", None, "(3,-1)"),
    (None, "tlam", "(5)", None, "(4)"),
    (None, "pathrel", "(1)", "(1,5)", "u-extends-t"),
    (None, "pathrel", "(1,2)", "(1,3)", "incomparable"),
    (None, "pathrel", "()", "(7)", "u-extends-t"),
    # region algebra
    ("real", "eq", "phi(1,{1,2})*phi(1,{2,3})", "phi(1,{2})", "true"),
    (None, "norm", "!phi(1,{1})", None, "phi(1,{..-1,2..})"),
    ("real", "eq", "!phi(1,{1})", "phi(1,{..-1}) + phi(1,{2..})", "true"),
    (None, "norm", "phi(1,{1})*phi(2,{7})", None, "cone(1,7)"),
    ("real", "eq", "phi(1,{1})*phi(2,{7})", "0", "false"),
    ("real", "leq", "phi(1,{1})", "phi(1,{1,2})", "true"),
    ("real", "leq", "phi(1,{1})*phi(2,{3})", "phi(1,{1})", "true"),
    ("real", "leq", "phi(1,{1})", "phi(2,{1})", "false"),
    ("real", "eq", "phi(1,{1})*!phi(2,{1})", "0", "false"),
    ("real", "eq", "cone(1,5)", "phi(1,{1})*phi(2,{5})", "true"),
    ("real", "eq", "q(1;1)", "phi(1,{-1})*phi(2,{2..}) + phi(1,{1})*phi(2,{..-2})", "true"),
    ("interval", "eq", "up(3)", "phi(1,{4..})", "true"),
    ("real", "bounded", "cone(1)", None, "true"),
    ("real", "bounded", "q(1;2)", None, "true"),
    ("real", "bounded", "phi(1,{5..})", None, "false"),
    # geometry oracle
    (None, "delta", "(1)", None, "[1/2, 3/4]"),
    (None, "delta", "(-1)", None, "[1/4, 1/2]"),
    (None, "delta", "(1,1)", None, "[5/8, 11/16]"),
    ("real", "closure", "phi(1,{2..})", None, "[3/4, 1]"),
    ("real", "closure", "q(1;1)", None, "[7/16, 9/16]"),
    ("real", "closure", "q(1;2)", None, "[15/32, 17/32]"),
    ("real", "closure", "phi(1,{2..})*phi(2,{1})", None, "tail(anchor=1, side=left, node=(), start=2, residual=cone(1))"),
    ("real", "gcontact", "cone(1)", "cone(2)", "true"),
    ("interval", "gcontact", "cone(1)", "cone(2)", "true"),
    ("interval", "gcontact", "down(1)", "up(1)", "false"),
    ("interval", "gcontact", "phi(1,{..-1})", "phi(1,{1..})", "true"),
    ("circle", "gcontact", "phi(1,{..-1})", "phi(1,{1..})", "true"),
    ("interval", "gcontact", "phi(1,{..-2})", "phi(1,{2..})", "false"),
    ("circle", "gcontact", "phi(1,{..-2})", "phi(1,{2..})", "true"),
    (None, "fromintervals", "[1/4, 1/2]", None, "cone(-1)"),
    (None, "fromintervals", "[0, 1/2]", None, "phi(1,{..-1})"),
    (None, "fromintervals", "[1/2, 9/16]", None, "cone(1)*phi(2,{..-2})"),
    # generator tables
    ("real", "contact", "cone(1)", "cone(2)", "true"),
    ("real", "contact", "cone(1)", "cone(2,-3)", "false"),
    ("real", "contact", "q(1;2)", "cone(1,-2)", "true"),
    ("real", "contact", "q(1;1)", "q(2;1)", "false"),
    ("interval", "contact", "cone(2)", "up(2)", "true"),
    ("interval", "contact", "cone(2,5)", "up(2)", "false"),
    ("real", "separated", "cone(1)", "cone(3)", "true"),
    ("real", "separated", "cone(1)", "cone(2)", "false"),
    ("real", "separated", "q(1;2)", "cone(2,3)", "true"),
    ("real", "contact", "0", "cone(1)", "false"),
    ("real", "contact", "q(1;3)", "0", "false"),
    ("real", "contact", "cone(1)", "cone(1)", "true"),
    ("real", "contact", "q(-2,3;2)", "q(-2,3;2)", "true"),
    ("real", "contact", "phi(1,{..-1})", "phi(1,{1..})", "true"),
    ("real", "ll", "0", "cone(1)", "true"),
    ("real", "ll", "0", "0", "true"),
    # [5/8, 11/16] sits 1/16 away from the complement of cone(1); the point 5/8
    # is shared with the sibling cell of (1,-1), so cone(1,1) is not well inside itself
    ("real", "ll", "cone(1,1)", "cone(1)", "true"),
    ("real", "ll", "cone(1,1)", "cone(1,1)", "false"),
    ("real", "closure", "cone(1,-1)", None, "[9/16, 5/8]"),
    ("real", "closure", "cone(1,-2)", None, "[17/32, 9/16]"),
    ("real", "closure", "cone(1)*phi(2,{..-1})", None, "[1/2, 5/8]"),
    ("real", "ll", "cone(1,-2)", "cone(1)*phi(2,{..-1})", "true"),
    (None, "tree", "c(1,5)", None, "cone(1,5)"),
    (None, "tree", "d(1;1)", None, Q11),
    (None, "tree", "c()", None, "1"),
    # constructions
    ("alex(real)", "contact", "phi(1,{..-2})", "phi(1,{2..})", "true"),
    ("real", "contact", "phi(1,{..-2})", "phi(1,{2..})", "false"),
    ("alex(real)", "contact", "cone(1)", "cone(3)", "false"),
    ("model", None, None, None, None),
    ("rel(real, cone(1))", "contact", "cone(1,1)", "cone(1,2)", "true"),
    ("interval", "contact", "cone(1)", "cone(2)", "true"),
    ("rel(real, cone(1))", "complement", "cone(1,1)", None, "cone(1)*phi(2,{..-1,2..})"),
    ("real:2", "contact", "{x: cone(1), y: cone(1)}", "{x: cone(2), y: cone(2)}", "true"),
    ("real:2", "contact", "{x: cone(1)}", "{x: cone(3), y: cone(5)}", "false"),
    ("real:2", "contact", "{x: cone(1)}", "{x: cone(3), y: q(-1;2)}", "false"),
    ("real:2", "contact", "{x: cone(1)}", "{x: cone(3)}", "false"),
    ("cube:x,y", "contact", "{x: down(1)}", "{y: up(1)}", "true"),
    ("real:2", "bounded", "{x: cone(1), y: cone(2)}", None, "true"),
    ("real:2", "bounded", "{x: cone(1)}", None, "false"),
    ("torus:a,b,c", "bounded", "{a: cone(1)}", None, "true"),
    ("torus:a,b,c", "bounded", "1", None, "true"),
    ("torus:a,b,c", "bounded", "{a: phi(1,{..-1}), c: q(3;1)}", None, "true"),
    # axiom suite
    ("interval", "axioms", None, None, "pass", ["--family", "CA", "--trials", "10000", "--seed", "7"], "last"),
    ("interval", "witness", "C6", "!cone(1)", "true", ["--candidate", "cone(1,-2)"]),
    ("interval", "witness", "C6", "!cone(1)", "verified", [], "last"),
    ("real", "witness", "BC3", "phi(1,{1..})", "true", ["--candidate", "cone(2)"]),
    ("real", "closure", "cone(2)", None, "[3/4, 7/8]"),
    ("real", "witness", "BC3", "phi(1,{1..})", "verified", [], "last"),
    (None, "sweep", "presentation", None, " pass", [], "endswith"),
    (None, "sweep", "circle", None, " pass", [], "endswith"),
    (None, "sweep", "relative", None, " pass", [], "endswith"),
    # front end
    ("real", "eq", "cone(1,5) + q(1;2)", "cone(1)*phi(2,{5}) + (phi(1,{-1})*phi(2,{3..}) + phi(1,{1})*phi(2,{..-3}))", "true"),
    (None, "norm", "phi(2,{0})", None, "error"),
    ("real", "contact", "up(1)", "cone(1)", "error"),
    ("interval", "closure", "up(1)", None, "[3/4, 1]"),
    ("real", "render", "cone(1)", None, 'x="0.5" y="0.02" width="0.25"', [], "contains"),
    ("real", "render", "q(1;1)", None, 'x="0.4375" y="0.02" width="0.125"', [], "contains"),
    ("real:2", "render", "{x: cone(1), y: cone(1)}", None, 'x="0.5" y="0.25" width="0.25" height="0.25"', [], "contains"),
]

# closure of up(n) and down(n) for n = 1..16
for n in range(1, 17):
    E.append(("interval", "closure", f"up({n})", None, f"[{(1 << (n + 1)) - 1}/{1 << (n + 1)}, 1]"))
    E.append(("interval", "closure", f"down({n})", None, f"[0, 1/{1 << (n + 1)}]"))

EXTRA = [
    {"model": "rel(real, 1)", "command": "model", "expect": "real"},
    {"model": "rel(interval, 1)", "command": "model", "expect": "interval"},
]


def entries():
    for e in E:
        if e[0] == "model":
            yield from EXTRA
            continue
        model, command, a, b, expect = e[:5]
        args = e[5] if len(e) > 5 else []
        match = e[6] if len(e) > 6 else "full"
        out = {"model": model, "command": command, "a": a, "b": b, "expect": expect}
        if args:
            out["args"] = args
        if match != "full":
            out["match"] = match
        yield {k: v for k, v in out.items() if v is not None or k == "expect"}


if __name__ == "__main__":
    path = Path(__file__).resolve().parent.parent / "corpus" / "examples.jsonl"
    with path.open("w", encoding="utf-8") as fh:
        for entry in entries():
            fh.write(json.dumps(entry, ensure_ascii=False) + "\n")
    print(f"wrote {path}")

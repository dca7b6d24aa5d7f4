"""Command-line front end: ``propwheel dims|basis|eval|check|oracle``."""
from __future__ import annotations

import argparse
import json
import sys

from ..diagrams import Element, WheeledDiagram, dimension, enumerate_basis, to_dot, to_json
from ..koszul import Permutation
from . import parser as expr


class CommandError(Exception):
    pass


def _dims_table(q_max, l_max):
    return {(q, l): dimension(q, l) for q in range(q_max + 1) for l in range(l_max + 1)}


def cmd_dims(args, out):
    table = _dims_table(args.q_max, args.l_max)
    if args.format == "json":
        rows = [{"q": q, "l": l, "dim": d} for (q, l), d in table.items()]
        out.write(json.dumps({"dims": rows}, indent=1) + "\n")
        return 0
    if args.format == "dot":
        raise CommandError("dims has no DOT rendering")
    width = max(len(str(d)) for d in table.values()) + 1
    out.write("q\\l" + "".join(f"{l:>{width}}" for l in range(args.l_max + 1)) + "\n")
    for q in range(args.q_max + 1):
        out.write(f"{q:>3}" + "".join(f"{table[(q, l)]:>{width}}" for l in range(args.l_max + 1)) + "\n")
    return 0


def _diagram_json(d: WheeledDiagram):
    return {"fibers": [list(f) for f in d.fibers], "wheels": [list(w) for w in d.wheels],
            "degree": d.degree, "expr": expr.element_text(Element.basis(d))}


def cmd_basis(args, out):
    n = dimension(args.q, args.l)
    if n > args.max_dim:
        raise CommandError(f"dimension {n} of ({args.q},{args.l}) exceeds --max-dim {args.max_dim}")
    basis = enumerate_basis(args.q, args.l)
    if args.format == "json":
        out.write(json.dumps({"q": args.q, "l": args.l, "dim": n,
                              "basis": [_diagram_json(d) for d in basis]}, indent=1) + "\n")
    elif args.format == "dot":
        out.write(to_dot(Element(args.q, args.l, {d: 1 for d in basis}), f"basis_{args.q}_{args.l}"))
    else:
        for d in basis:
            out.write(f"{d}  degree {d.degree}  = {expr.element_text(Element.basis(d))}\n")
    return 0


def cmd_eval(args, out):
    text = sys.stdin.read() if args.expr == "-" else args.expr
    value = expr.eval_text(text)
    if args.format == "json":
        out.write(to_json(value) + "\n")
    elif args.format == "dot":
        out.write(to_dot(value))
    else:
        out.write(expr.element_text(value) + "\n")
    return 0


def cmd_check(args, out):
    from .checks import SUITES, run_suite
    try:
        results = run_suite(args.suite, args.seed)
    except KeyError:
        raise CommandError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    ok = all(r[2] for r in results)
    if args.format == "json":
        out.write(json.dumps({"suite": args.suite, "seed": args.seed, "ok": ok,
                              "checks": [{"suite": s, "name": n, "ok": o} for s, n, o in results]},
                             indent=1) + "\n")
    else:
        for s, n, o in results:
            out.write(f"{'pass' if o else 'FAIL'}  {s}: {n}\n")
        out.write(f"{args.suite}: {'pass' if ok else 'FAIL'}\n")
    return 0 if ok else 1


def _parse_perm(text: str, n: int) -> Permutation:
    cycles, cur = [], None
    for tok in text.replace("(", " ( ").replace(")", " ) ").split():
        if tok == "(":
            cur = []
        elif tok == ")":
            if cur:
                cycles.append(cur)
            cur = None
        elif cur is not None and tok.isdigit():
            cur.append(int(tok))
        else:
            raise CommandError(f"bad permutation {text!r}")
    try:
        return Permutation.from_cycles(n, cycles)
    except ValueError as e:
        raise CommandError(str(e))


def cmd_oracle(args, out):
    from .. import ext_oracle as eo
    limits = eo.OracleLimits(max_dim=args.max_dim)
    a = args.args
    sub = args.sub

    def ints(k):
        if len(a) != k or not all(x.isdigit() for x in a):
            raise CommandError(f"oracle {sub} expects {k} integer arguments")
        return [int(x) for x in a]

    if sub == "ext":
        l, q = ints(2)
        result = eo.report(l, q, 0, limits)
    elif sub == "lambda":
        j, q = ints(2)
        result = eo.report(0, q, j, limits)
    elif sub == "mixed":
        l, j, q = ints(3)
        result = eo.report(l, q, j, limits)
    elif sub == "lambda-lambda":
        n, m = ints(2)
        dims = eo.ext_lambda_lambda(n, m, limits)
        result = {"n": n, "m": m, "dims": {str(k): v for k, v in dims.items()}}
    elif sub == "action":
        if len(a) != 4 or a[0] not in ("inputs", "outputs"):
            raise CommandError("oracle action expects SIDE PERM L Q, SIDE = inputs|outputs")
        side, l, q = a[0], int(a[2]), int(a[3])
        p = _parse_perm(a[1], q if side == "inputs" else l)
        basis = eo.ExtBasis(q, l, 0, limits)
        m = basis.matrix(p, side)
        result = {"side": side, "perm": p.cycle_str(), "l": l, "q": q,
                  "basis": [str(d) for d in basis.diagrams],
                  "matrix": [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]}
    elif sub == "characters":
        (q,) = ints(1)
        if q > 4:
            raise CommandError("character tables are limited to q <= 4")
        table = eo.character_table(q, limits=limits)
        result = {"q": q, "classes": [{"cycle_type": list(k), "by_wheels": {str(j): str(v) for j, v in row.items()},
                                       "total": str(sum(row.values()))} for k, row in table.items()]}
    elif sub == "yoneda":
        n, k = ints(2)
        y = eo.YonedaOracle(limits)
        z = y.product_with_y(y.pi_power(n), 1, n, k)
        cls = y.class_of(z, n + 1, 1)
        result = {"x": f"pi^{n}", "y": f"Y({k})",
                  "class": [{"diagram": str(d), "coeff": str(c)} for d, c in cls.items()]}
    else:
        raise CommandError(f"unknown oracle command {sub!r}")
    if args.format == "text" and "dims" in result:
        out.write(" ".join(f"{k}:{v}" for k, v in result["dims"].items()) + "\n")
    elif args.format == "text" and "matrix" in result:
        for name, row in zip(result["basis"], result["matrix"]):
            out.write(" ".join(f"{x:>3}" for x in row) + f"   {name}\n")
    else:
        out.write(json.dumps(result, indent=1) + "\n")
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--max-dim", type=int, default=10_000, help="resource guard")

    p = argparse.ArgumentParser(prog="propwheel", description="Wheeled PROP calculator and Ext oracle")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dims", parents=[common], help="dimension table")
    s.add_argument("q_max", type=int, nargs="?", default=3)
    s.add_argument("l_max", type=int, nargs="?", default=3)
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("basis", parents=[common], help="list the basis of E(q,l)")
    s.add_argument("q", type=int)
    s.add_argument("l", type=int)
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("eval", parents=[common], help="evaluate an expression ('-' reads stdin)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", parents=[common], help="run invariant suites")
    s.add_argument("suite", nargs="?", default="all")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("oracle", parents=[common], help="bar-resolution Ext computations")
    s.add_argument("sub", choices=["ext", "lambda", "lambda-lambda", "mixed", "action",
                                   "characters", "yoneda"])
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CommandError, ValueError, RuntimeError) as e:
        print(f"propwheel: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Subcommands: enumerate | apply | btilde | rmatrix | kmatrix | kcase |
kenergy | check | graph.  JSON is the single interchange format; DOT is
output-only.  Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crystal import AffineElement, compositions, etilde, ftilde
from .icrystal import btilde, icrystal_graph, graph_to_dot
from .kmatrix import a3_case, k_apply, k_energy, k_inverse
from .rmatrix import OrientedSlot, r_apply
from .satake import SatakeDiagram
from . import verify


def _element(text: str) -> AffineElement:
    return AffineElement.from_json(json.loads(text))


def _alpha(text: str) -> tuple[int, ...]:
    """A composition, either as a JSON list ("[2,0,1]") or bare "2,0,1"."""
    if text.lstrip().startswith("["):
        return tuple(int(a) for a in json.loads(text))
    return tuple(int(a) for a in text.split(","))


def _emit_element(e: AffineElement | None):
    print(json.dumps(None if e is None else e.to_json()))


def _cmd_enumerate(args) -> int:
    out = list(compositions(args.n, args.s))
    if args.json:
        print(json.dumps([list(a) for a in out]))
    else:
        for a in out:
            print(json.dumps(list(a)))
    return 0


def _cmd_apply(args) -> int:
    e = _element(args.infile)
    op = etilde if args.op.lower() == "e" else ftilde
    _emit_element(op(args.i, e))
    return 0


def _cmd_btilde(args) -> int:
    diagram = SatakeDiagram.from_name(args.family, args.n)
    fs = btilde(diagram, args.i, _element(args.infile))
    print(json.dumps(fs.to_json(), ensure_ascii=False))
    return 0


def _cmd_rmatrix(args) -> int:
    s1 = OrientedSlot(_element(args.in1), at_inverse=args.inv1)
    s2 = OrientedSlot(_element(args.in2), at_inverse=args.inv2)
    kind = args.kind.lower() if args.kind else None
    o1, o2 = r_apply(s1, s2, kind=kind)
    print(json.dumps([o1.elem.to_json(), o2.elem.to_json()]))
    return 0


def _cmd_kmatrix(args) -> int:
    diagram = SatakeDiagram.from_name(args.family, args.n)
    e = _element(args.infile)
    fn = k_inverse if args.inverse else k_apply
    _emit_element(fn(diagram, args.s, e, offset=args.offset))
    return 0


def _cmd_kcase(args) -> int:
    case = a3_case(args.n, _alpha(args.alpha))
    print(json.dumps({"case": case.index, "i": case.i, "iprime": case.iprime}))
    return 0


def _cmd_kenergy(args) -> int:
    diagram = SatakeDiagram.from_name(args.family, args.n)
    alpha = _alpha(args.alpha)
    print(json.dumps(k_energy(diagram, sum(alpha), alpha)))
    return 0


def _cmd_graph(args) -> int:
    diagram = SatakeDiagram.from_name(args.family, args.n)
    graph = icrystal_graph(diagram, args.n, args.s, dual=args.dual)
    if args.dot:
        print(graph_to_dot(graph))
    else:
        print(json.dumps({",".join(map(str, v)): sorted(
            {",".join(map(str, w)) for w, _i, _c in nbrs})
            for v, nbrs in graph.items()}))
    return 0


def _cmd_check(args) -> int:
    diagram = None
    if args.family:
        diagram = SatakeDiagram.from_name(args.family, args.n)
    which = args.which
    if which == "reflection":
        report = verify.check_reflection(diagram, args.s, args.s2)
    elif which == "ybe":
        report = verify.check_ybe(args.n, args.s, args.s2, args.s3)
    elif which == "equivariance":
        report = verify.check_equivariance(diagram, args.s)
    elif which == "bijection":
        report = verify.check_bijection(diagram, args.s)
    elif which == "partition":
        report = verify.check_partition(args.n, args.s)
    elif which == "connected":
        report = verify.check_connected(diagram, args.s, dual=args.dual)
    elif which == "rmorphism":
        report = verify.check_r_morphism(args.kind, args.n, args.s, args.s2)
    elif which == "rinverse":
        report = verify.check_r_inverse(args.kind, args.n, args.s, args.s2)
    elif which == "literal":
        report = verify.check_literal_formula_counterexamples()
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(which)
    if args.json:
        print(json.dumps(report.to_json(), ensure_ascii=False))
    else:
        print(report.summary())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list compositions of s into n parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("apply", help="apply a crystal operator E or F")
    p.add_argument("--op", choices=["e", "f", "E", "F"], required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_apply)

    p = sub.add_parser("btilde", help="apply an icrystal operator")
    p.add_argument("--family", choices=["a1", "a3", "a4"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_btilde)

    p = sub.add_parser("rmatrix", help="apply a combinatorial R-matrix")
    p.add_argument("--kind", choices=["rr", "dr", "dd"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--inv1", action="store_true")
    p.add_argument("--inv2", action="store_true")
    p.add_argument("--in1", required=True, metavar="JSON")
    p.add_argument("--in2", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_rmatrix)

    p = sub.add_parser("kmatrix", help="apply a combinatorial K-matrix")
    p.add_argument("--family", choices=["a1", "a3", "a4"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--in", dest="infile", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_kmatrix)

    p = sub.add_parser("kcase", help="A3 case index of a composition (s odd)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_kcase)

    p = sub.add_parser("kenergy", help="K-matrix energy I(alpha)")
    p.add_argument("--family", choices=["a1", "a3", "a4"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True, metavar="JSON")
    p.set_defaults(fn=_cmd_kenergy)

    p = sub.add_parser("check", help="run an exhaustive checker")
    p.add_argument("which", choices=["reflection", "ybe", "equivariance",
                                     "bijection", "partition", "connected",
                                     "rmorphism", "rinverse", "literal"])
    p.add_argument("--family", choices=["a1", "a3", "a4"])
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--s3", type=int)
    p.add_argument("--kind", choices=["rr", "dr", "dd"])
    p.add_argument("--dual", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("graph", help="icrystal graph (adjacency JSON or DOT)")
    p.add_argument("--family", choices=["a1", "a3", "a4"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=_cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

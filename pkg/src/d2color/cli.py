"""Command-line interface: ``d2color <command> [FILE]``.

Graphs are read from FILE or standard input.  Domain errors exit with code 1
and print a JSON diagnostic on stderr; usage and parse errors exit with 2.
"""
from __future__ import annotations

import argparse
import sys

from . import generators, io
from .classify import VertexClass, classify, compute_params
from .colorer import ListAssignment, color_theorem1, verify_coloring
from .density import densest_subgraph, min_potential
from .discharge import audit
from .errors import D2ColorError, ParseError
from .exact import chi2_exact, chi2_list_exact, find_list_coloring
from .graph import square
from .rational import as_fraction, to_json as q_json, validate_c_eps
from .reducer import reduction_sequence


def _q(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def _read_input(args) -> str:
    if args.file in (None, "-"):
        return sys.stdin.read()
    try:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc.strerror}") from None


def _graph(args):
    return io.read_graph(_read_input(args), args.input_format)


def _c_eps(args):
    if args.c is None or args.eps is None:
        raise ParseError("--c and --eps are required for this command")
    return validate_c_eps(args.c, args.eps)


def _load_lists(path: str) -> ListAssignment:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = io.load_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return ListAssignment.from_json(obj)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad list assignment: {exc}") from None


def _emit(args, obj, human: str) -> None:
    print(io.dumps(obj) if args.format == "json" else human)


def cmd_square(args) -> int:
    h = square(_graph(args))
    if args.format == "json":
        print(io.dumps({"n": h.n, "edges": [list(e) for e in h.edges()]}))
    else:
        sys.stdout.write(io.emit_edge_list(h))
    return 0


def cmd_mad(args) -> int:
    g = _graph(args)
    res = densest_subgraph(g)
    value = 2 * res.value
    witness = sorted(res.witness)
    _emit(
        args,
        {"mad": q_json(value), "witness": witness},
        f"{_q(value)}\nwitness: {' '.join(map(str, witness))}",
    )
    return 0


def cmd_potential(args) -> int:
    c, eps = _c_eps(args)
    res = min_potential(_graph(args), c, eps)
    witness = sorted(res.witness)
    _emit(
        args,
        {"c": c, "eps": q_json(eps), "min_potential": q_json(res.min_value), "witness": witness},
        f"{_q(res.min_value)}\nwitness: {' '.join(map(str, witness))}",
    )
    return 0


def cmd_classify(args) -> int:
    c, eps = _c_eps(args)
    g = _graph(args)
    p = compute_params(g, c, eps)
    cl = classify(g, p)
    lines = [f"K: {p.K}", f"n1: {cl.n1}", f"n2: {cl.n2}"]
    for tag in VertexClass:
        lines.append(f"{tag.value}: {' '.join(map(str, cl.members(tag)))}")
    _emit(args, {"params": p.to_json(), **cl.to_json()}, "\n".join(lines))
    return 0


def cmd_reduce(args) -> int:
    c, eps = _c_eps(args)
    g = _graph(args)
    trace = reduction_sequence(g, compute_params(g, c, eps))
    print(io.dumps(trace.to_json()))
    return 0 if trace.complete else 1


def cmd_color(args) -> int:
    c, eps = _c_eps(args)
    g = _graph(args)
    if args.lists:
        la = _load_lists(args.lists)
    else:
        K = compute_params(g, c, eps).K
        la = ListAssignment.sampled(g.n, K, 4 * K, args.seed)
    col = color_theorem1(g, c, eps, la)
    verdict = verify_coloring(g, la, col)
    out = {
        **io.coloring_to_json(col),
        "valid": verdict.valid,
        "violations": [{"kind": v.kind, "vertices": list(v.vertices)} for v in verdict.violations],
    }
    if args.format == "json":
        print(io.dumps(out))
    else:
        print(io.dumps(io.coloring_to_json(col)))
        print(f"valid: {str(verdict.valid).lower()}")
    return 0 if verdict.valid else 1


def cmd_audit(args) -> int:
    c, eps = _c_eps(args)
    g = _graph(args)
    report = audit(g, compute_params(g, c, eps))
    if args.format == "json":
        print(io.dumps(report.to_json()))
    else:
        lines = [
            f"threshold: {_q(report.threshold)}",
            f"min final charge: {'-' if report.min_final is None else _q(report.min_final)}",
            f"conserved: {str(report.conserved).lower()}",
            f"certifying: {str(report.certifying).lower()}",
            f"violations: {' '.join(map(str, report.violations))}",
        ]
        lines += [f"{v}: {_q(q)} case {lab}" for v, (q, lab) in enumerate(zip(report.ledger.final, report.cases))]
        print("\n".join(lines))
    return 0


def cmd_exact(args) -> int:
    g = _graph(args)
    if args.mode == "chi2":
        k = chi2_exact(g)
        _emit(args, {"chi2": k}, str(k))
    elif args.mode == "list":
        if not args.lists:
            raise ParseError("--lists is required for --mode list")
        col = find_list_coloring(g, _load_lists(args.lists))
        obj = {"colorable": col is not None, **({} if col is None else io.coloring_to_json(col))}
        _emit(args, obj, f"colorable: {str(col is not None).lower()}")
    else:
        if args.k is None:
            raise ParseError("--k is required for --mode choose")
        ok = chi2_list_exact(g, args.k)
        _emit(args, {"k": args.k, "choosable": ok}, f"choosable: {str(ok).lower()}")
    return 0


RANDOM_FAMILIES = ("random", "random_bounded_mad", "tree", "subdivided_wheel")


def cmd_gen(args) -> int:
    name, params = args.name, args.params
    try:
        ints = [int(x) for x in params]
    except ValueError:
        raise ParseError(f"generator arguments must be integers: {params}") from None
    try:
        if name in ("cube", "dodecahedron", "petersen"):
            g = generators.CATALOG[name]()
        elif name in generators.CATALOG:
            g = generators.CATALOG[name](*ints)
        elif name == "random":
            if args.p is None:
                raise ParseError("--p is required for random")
            g = generators.erdos_renyi(*ints, args.p, args.seed)
        elif name == "random_bounded_mad":
            if args.bound is None:
                raise ParseError("--bound is required for random_bounded_mad")
            g = generators.random_bounded_mad(*ints, as_fraction(args.bound), args.seed, p=args.p)
        elif name == "tree":
            g = generators.random_tree(*ints, args.seed)
        elif name == "subdivided_wheel":
            g = generators.subdivided_wheel(*ints)
        else:
            raise ParseError(f"unknown generator {name!r}")
    except TypeError as exc:
        raise ParseError(f"{name}: {exc}") from None
    if args.format == "json":
        print(io.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}))
    else:
        sys.stdout.write(io.emit_edge_list(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--seed", type=int, default=0)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("file", nargs="?", help="graph file (default: stdin)")
    graph_in.add_argument("--input-format", choices=("auto", "edges", "dimacs"), default="auto")

    theorem = argparse.ArgumentParser(add_help=False)
    theorem.add_argument("--c", type=int)
    theorem.add_argument("--eps", help="rational literal p/q")

    parser = argparse.ArgumentParser(prog="d2color", description="2-distance list coloring toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("square", parents=[common, graph_in], help="emit the square").set_defaults(run=cmd_square)
    sub.add_parser("mad", parents=[common, graph_in], help="exact maximum average degree").set_defaults(run=cmd_mad)
    for name, run, text in (
        ("potential", cmd_potential, "minimum potential and witness"),
        ("classify", cmd_classify, "vertex classes and K"),
        ("reduce", cmd_reduce, "reduction trace (JSON)"),
        ("audit", cmd_audit, "discharging report"),
    ):
        sub.add_parser(name, parents=[common, graph_in, theorem], help=text).set_defaults(run=run)

    color = sub.add_parser("color", parents=[common, graph_in, theorem], help="constructive list coloring")
    color.add_argument("--lists", help="JSON list assignment (default: seeded lists of size K from 4K colors)")
    color.set_defaults(run=cmd_color)

    exact = sub.add_parser("exact", parents=[common, graph_in], help="exact solvers on small graphs")
    exact.add_argument("--mode", choices=("chi2", "list", "choose"), default="chi2")
    exact.add_argument("--lists", help="JSON list assignment for --mode list")
    exact.add_argument("--k", type=int, help="list size for --mode choose")
    exact.set_defaults(run=cmd_exact)

    gen = sub.add_parser("gen", parents=[common], help="catalog and random graphs")
    gen.add_argument("name", help=f"one of {', '.join([*generators.CATALOG, *RANDOM_FAMILIES])}")
    gen.add_argument("params", nargs="*")
    gen.add_argument("--p", type=float, help="edge probability for random families")
    gen.add_argument("--bound", help="rational mad bound for random_bounded_mad")
    gen.set_defaults(run=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except ParseError as exc:
        print(io.dumps(exc.to_json()), file=sys.stderr)
        return 2
    except D2ColorError as exc:
        print(io.dumps(exc.to_json()), file=sys.stderr)
        return 1
    except ValueError as exc:
        # raised by generators and constructors on out-of-range arguments
        print(io.dumps({"error": "invalid_argument", "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or parse
error, 3 numeric failure (snapping or eigen-decomposition).
"""

from __future__ import annotations

import argparse
import sys

from . import characters, diagram, groups, serialize, verify
from .specs import SpecError, build_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="snapping tolerance (default 1e-6)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="character table seed (default 0)")

    p = _Parser(prog="quatmckay", description="McKay graphs of finite subgroups of SU(2) and SU(2)xSU(2)", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="write the group's elements as JSON")
    b.add_argument("spec")
    b.add_argument("--out")

    g = sub.add_parser("graph", parents=[common], help="McKay graph as JSON and/or DOT")
    g.add_argument("spec")
    g.add_argument("--dot")
    g.add_argument("--json")

    c = sub.add_parser("classify", parents=[common], help="diagram type of each component of a graph JSON")
    c.add_argument("graph")

    v = sub.add_parser("verify", parents=[common], help="run verification suites on one group")
    v.add_argument("spec")
    v.add_argument("--suite", choices=["su2", "parity", "so4", "apps", "all"], default="all")
    v.add_argument("--report")

    s = sub.add_parser("survey", parents=[common], help="run every suite over the corpus")
    s.add_argument("--max-order", type=int, default=groups.ORDER_CAP)
    s.add_argument("--report")
    return p


def _apply_tolerance(tol: float) -> None:
    characters.SNAP_TOL = tol
    characters.RESIDUAL_TOL = tol
    characters.ORTHO_TOL = tol
    diagram.RANK_TOL = tol


def _suites(spec: str, which: str, seed: int) -> list[verify.VerificationReport]:
    if which == "all":
        return verify.run_suites(spec, seed)[1]
    g = build_group(spec)
    minus_one = g.minus_one_index is not None
    su2 = g.ambient == groups.SU2
    plan = {
        "su2": verify.verify_su2 if su2 else None,
        "parity": verify.verify_parity if minus_one else None,
        "so4": (verify.verify_so4 if minus_one else verify.verify_so4_structure) if not su2 else None,
        "apps": verify.verify_applications if minus_one and not su2 else None,
    }
    if plan[which] is None:
        raise ValueError(f"suite {which} does not apply to {spec}")
    return [plan[which](g, verify.analyze(g, seed))]


def _print_report(rep: verify.VerificationReport, out) -> None:
    print(f"{rep.group} [{rep.suite}] {'PASS' if rep.passed else 'FAIL'}", file=out)
    for c in rep.checks:
        wit = ", ".join(f"{k}={v}" for k, v in verify._jsonable(c.witnesses).items())
        print(f"  {'ok  ' if c.passed else 'FAIL'} {c.name}: {c.detail}" + (f" ({wit})" if wit else ""), file=out)


def run(argv=None, out=None) -> int:
    """Execute one command line; returns the exit code."""
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    seed = getattr(args, "seed", 0)
    saved = (characters.SNAP_TOL, characters.RESIDUAL_TOL, characters.ORTHO_TOL, diagram.RANK_TOL)
    if hasattr(args, "tol"):
        if args.tol <= 0:
            print("error: --tol must be positive", file=sys.stderr)
            return EXIT_USAGE
        _apply_tolerance(args.tol)
    try:
        return _dispatch(args, seed, out)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (characters.CharacterError, diagram.DiagramError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (groups.GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        characters.SNAP_TOL, characters.RESIDUAL_TOL, characters.ORTHO_TOL, diagram.RANK_TOL = saved


def _dispatch(args, seed: int, out) -> int:
    if args.command == "build":
        g = build_group(args.spec)
        if args.out:
            serialize.emit_group_json(g, args.out)
        else:
            out.write(serialize.group_json(g))
        return EXIT_OK

    if args.command == "graph":
        graph = verify.analyze(build_group(args.spec), seed).graph
        if args.dot:
            serialize.emit_dot(graph, args.dot)
        if args.json:
            serialize.emit_graph_json(graph, args.json)
        if not (args.dot or args.json):
            out.write(serialize.graph_json(graph))
        return EXIT_OK

    if args.command == "classify":
        graph = serialize.read_graph_json(args.graph)
        colours = [None] if graph.dim_w == 2 else [1, 2]
        for k in colours:
            for comp, t in diagram.classify_components(graph.adjacency(k)):
                prefix = "" if k is None else f"colour {k}: "
                print(f"{prefix}{t} vertices={comp.tolist()}", file=out)
        return EXIT_OK

    if args.command == "verify":
        reports = _suites(args.spec, args.suite, seed)
        for rep in reports:
            _print_report(rep, out)
        if args.report:
            payload = {"spec": args.spec, "seed": seed, "reports": [r.to_dict() for r in reports]}
            serialize._write(serialize.report_json(payload), args.report)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL

    if args.command == "survey":
        result = verify.survey(args.max_order, seed)
        for e in result["entries"]:
            failed = [r["suite"] for r in e["reports"] if not r["passed"]]
            print(f"{'PASS' if e['passed'] else 'FAIL'} {e['spec']} order={e['order']}" + (f" failed={failed}" if failed else ""), file=out)
        print(f"{result['groups']} groups, {'all passed' if result['passed'] else 'FAILURES'}", file=out)
        if args.report:
            serialize._write(serialize.report_json(result), args.report)
        return EXIT_OK if result["passed"] else EXIT_FAIL

    raise AssertionError(args.command)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

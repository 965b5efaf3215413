"""
Command-line entry point.

    knotcluster validate fixtures/borromean.json
    knotcluster alexander fixtures/knot2112.json --method all
    knotcluster knot-cluster fixtures/figure_eight.json --replay figure_eight.replay.json
    knotcluster verify --all --report excel
    knotcluster export fixtures/knot2112.json --what quiver --fmt dot
    knotcluster gen-two-bridge 2 1 1 2 --out knot.json

Exit codes: 0 when every requested check passes, 1 on a failed check,
2 on unreadable input.
"""
import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from agents.verify_agent import (
    METHODS,
    alexander_by_method,
    corpus_summary,
    validate_diagram,
    verify_corpus,
    verify_diagram,
)
from algebra.cluster import dump_seed
from algebra.quiver import quiver_of, raw_quiver_dot
from config.settings import CLOCK_SENSE, CLOCKWISE, COUNTERCLOCKWISE, fixture_path
from diagrams.exceptions import DiagramError, ParseError
from diagrams.io import export_dot, export_json, load_diagram
from diagrams.pd import export_pd
from diagrams.two_bridge import two_bridge
from invariants.alexander import coefficient_list, compare
from invariants.exceptions import LatticeError
from invariants.kauffman import hasse_dot, opposite_sense, poset_of, state_dump
from planner.exceptions import PlanningError
from planner.mutation_planner import (
    execute,
    format_cycles,
    load_replay,
    plan,
    plan_to_json,
    replay,
    sigma_pairs,
)
from utils.logger import KnotClusterLogger
from utils.report_generator import generate_report, render_text

logger = KnotClusterLogger("cli")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _sense(args) -> str:
    sense = args.seed_of_truth or CLOCK_SENSE
    return opposite_sense(sense) if args.flip_clock else sense


def _load(path: str):
    return load_diagram(path if path.startswith("gen:") else fixture_path(path))


def cmd_validate(args) -> int:
    d = _load(args.path)
    report = validate_diagram(d)
    _emit(render_text([report]), None)
    if args.report:
        generate_report([report], args.report, args.out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_alexander(args) -> int:
    d = _load(args.path)
    methods = METHODS if args.method == "all" else (args.method,)
    values = {m: alexander_by_method(d, m, _sense(args)) for m in methods}
    reference = values[methods[0]]
    agree = all(compare(v, reference) for v in values.values())
    if args.json:
        doc = {
            "diagram": d.name,
            "polynomials": {m: {"coefficients": coefficient_list(v), "offset": 0} for m, v in values.items()},
            "agree": agree,
        }
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        lines = [f"{m}: {v.to_text()}" for m, v in values.items()]
        lines.append(f"agree: {str(agree).lower()}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if agree else EXIT_CHECK_FAILED


def cmd_knot_cluster(args) -> int:
    d = _load(args.path)
    if args.replay:
        doc = load_replay(args.replay)
        result = replay(d, doc.sequence, doc.expected)
        output = {
            "diagram": d.name,
            "word": doc.sequence,
            "sigma": format_cycles([tuple(pair) for pair in doc.expected.sigma]),
            "seed": dump_seed(result.seed),
            "mismatches": result.mismatches,
        }
        _emit(json.dumps(output, indent=2), args.out)
        return EXIT_OK if result.ok else EXIT_CHECK_FAILED

    p = plan(d)
    seed = execute(d, p)
    output = {
        "diagram": d.name,
        "plan": plan_to_json(p),
        "sigma": format_cycles(sigma_pairs(p)),
        "seed": dump_seed(seed),
    }
    _emit(json.dumps(output, indent=2), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    sense = _sense(args)
    if args.all:
        reports = verify_corpus(sense=sense)
        logger.info(f"Corpus summary: {corpus_summary(reports)}")
    elif args.path:
        d = _load(args.path)
        reports = [verify_diagram(d, replay_file=args.replay, sense=sense)]
    else:
        raise ParseError("verify needs a diagram path or --all")
    _emit(render_text(reports), None)
    if args.report:
        generate_report(reports, args.report, args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_export(args) -> int:
    d = _load(args.path)
    what, fmt = args.what, args.fmt
    if what == "diagram":
        if fmt == "json":
            text = json.dumps(export_json(d), indent=2)
        elif fmt == "pd":
            text = export_pd(d)
        else:
            text = export_dot(d)
    elif what == "quiver":
        q = quiver_of(d)
        text = json.dumps(q.to_json(), indent=2) if fmt == "json" else q.to_dot(d.name or "quiver")
    elif what == "raw-quiver":
        text = raw_quiver_dot(d)
    elif what == "hasse":
        segment = args.segment if args.segment is not None else d.labels[0]
        poset = poset_of(d, segment, _sense(args))
        if fmt == "json":
            text = json.dumps(state_dump(d, poset), indent=2)
        else:
            text = hasse_dot(poset, f"T({segment})")
    else:
        text = json.dumps(plan_to_json(plan(d)), indent=2)
    _emit(text, args.out)
    return EXIT_OK


def cmd_gen_two_bridge(args) -> int:
    d = two_bridge(args.cf)
    _emit(json.dumps(export_json(d), indent=2), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcluster",
        description="Knot clusters, Kauffman state lattices and Alexander polynomials of link diagrams"
    )
    parser.add_argument("--seed-of-truth", choices=[COUNTERCLOCKWISE, CLOCKWISE], default=None,
                        help="Pin the rotation sense counted as 'up' in state lattices")
    parser.add_argument("--flip-clock", action="store_true",
                        help="Reverse the lattice orientation (fault injection)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Load a diagram and run the structural checks")
    p.add_argument("path")
    p.add_argument("--report", choices=["excel", "text", "json"])
    p.add_argument("--out")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("alexander", help="Alexander polynomial by one or all pipelines")
    p.add_argument("path")
    p.add_argument("--method", choices=list(METHODS) + ["all"], default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_alexander)

    p = sub.add_parser("knot-cluster", help="Plan, mutate and dump the knot cluster")
    p.add_argument("path")
    p.add_argument("--replay", help="Replay document with a fixed mutation word")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_knot_cluster)

    p = sub.add_parser("verify", help="Run the full theorem suite")
    p.add_argument("path", nargs="?")
    p.add_argument("--all", action="store_true", help="Verify every prime corpus entry")
    p.add_argument("--replay")
    p.add_argument("--report", choices=["excel", "text", "json"])
    p.add_argument("--out")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("export", help="Export a diagram, quiver, Hasse diagram or plan")
    p.add_argument("path")
    p.add_argument("--what", choices=["quiver", "raw-quiver", "hasse", "diagram", "plan"], required=True)
    p.add_argument("--fmt", choices=["dot", "json", "pd"], default="dot")
    p.add_argument("--segment", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_export)

    p = sub.add_parser("gen-two-bridge", help="Write the 2-bridge diagram of a continued fraction")
    p.add_argument("cf", nargs="+", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_gen_two_bridge)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, ValidationError, FileNotFoundError, json.JSONDecodeError) as e:
        logger.error(f"Unreadable input: {str(e)}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BAD_INPUT
    except (DiagramError, LatticeError, PlanningError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())

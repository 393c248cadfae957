"""Command-line surface: analyze, compose, generate, verify.

Exit codes: 0 = all checks pass, 1 = usage/input error, 2 = mathematical
mismatch (formula disagrees with the oracle).  ``--json`` switches the whole
output stream to JSON; identical invocations with identical seeds produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict
from pathlib import Path

from . import cm, formulas, glue, invariants, oracle
from .graphs import (
    Graph,
    GraphError,
    bipartition,
    parse_graph,
    relabel,
    serialize_graph,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class CliError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except GraphError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _emit(report: dict, as_json: bool):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_table(report)


def _print_table(report: dict, indent: str = ""):
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_table(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                _print_table(item, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


def _analyze_report(g: Graph, args) -> tuple[dict, int]:
    warnings: list[str] = []
    report: dict = {
        "vertices": g.n_vertices,
        "edges": g.n_edges,
        "bipartite": bipartition(g) is not None,
    }
    labeling = cm.find_cm_labeling(g)
    report["cm"] = labeling is not None
    if labeling is not None:
        report["cm_labeling"] = {
            "pairs": [list(p) for p in labeling.pairs],
            "order_relation": sorted(list(p) for p in labeling.order_relation),
        }
    elif any(g.degree(v) == 0 for v in g.vertices):
        warnings.append("graph has isolated vertices; the C-M recognizer requires none")
    inv = invariants.invariant_report(g)
    report["invariants"] = asdict(inv)
    formula_vals = None
    if labeling is not None:
        formula_vals = formulas.cm_values(g, trusted=True)
        report["formula"] = asdict(formula_vals)
    exit_code = EXIT_OK
    if args.oracle or args.betti:
        try:
            vals = oracle.oracle_values(g, args.max_vertices)
        except oracle.OracleCapError as exc:
            raise CliError(str(exc)) from exc
        report["oracle"] = {
            "depth": vals.depth,
            "reg": vals.reg,
            "pd": vals.pd,
            "dim": vals.dim,
        }
        if args.betti:
            report["oracle"]["betti"] = vals.betti.to_triples()
        if formula_vals is not None and (
            formula_vals.depth != vals.depth or formula_vals.reg != vals.reg
        ):
            warnings.append(
                "FAIL: formula (depth=%d, reg=%d) != oracle (depth=%d, reg=%d)"
                % (formula_vals.depth, formula_vals.reg, vals.depth, vals.reg)
            )
            exit_code = EXIT_MISMATCH
    report["warnings"] = warnings
    return report, exit_code


def cmd_analyze(args) -> int:
    g = _load_graph(args.file)
    report, code = _analyze_report(g, args)
    _emit(report, args.json)
    return code


def cmd_compose(args) -> int:
    raw1 = _load_graph(args.g1)
    g1 = relabel(raw1, {v: f"g1.{v}" for v in raw1.vertices})
    u1 = f"g1.{args.u1}"
    report: dict = {"op": args.op}
    warnings: list[str] = []
    try:
        if args.op == "pendant":
            out = glue.clique_sum_p2(g1, u1, new_vertex="p")
            depth = formulas.clique_sum_p2_depth(g1, u1, trusted=args.trusted)
            report["predicted"] = {"depth": depth, "provenance": "pendant"}
        else:
            if not args.g2 or not args.u2:
                raise CliError("--g2 and --u2 are required for circ/star")
            raw2 = _load_graph(args.g2)
            g2 = relabel(raw2, {v: f"g2.{v}" for v in raw2.vertices})
            u2 = f"g2.{args.u2}"
            warnings += glue.p2_operand_warnings(g1, u1, g2, u2)
            if args.op == "circ":
                out = glue.circ(g1, u1, g2, u2, v_name="v")
                vals = formulas.circ_values(g1, u1, g2, u2, trusted=args.trusted)
            else:
                out = glue.star_glue(g1, u1, g2, u2, u_name="u")
                vals = formulas.star_values(g1, u1, g2, u2, trusted=args.trusted)
            report["predicted"] = asdict(vals)
    except (GraphError, formulas.HypothesisError) as exc:
        raise CliError(str(exc)) from exc
    Path(args.output).write_text(serialize_graph(out))
    report["output"] = args.output
    report["vertices"] = out.n_vertices
    report["edges"] = out.n_edges
    report["warnings"] = warnings
    _emit(report, args.json)
    return EXIT_OK


def _file_seed(seed: int, index: int) -> int:
    # stable per-file derivation so a corpus is reproducible from one seed
    return seed * 1_000_003 + index


def cmd_generate(args) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    files = []
    for i in range(args.count):
        g = cm.random_cm_graph(args.pairs, args.density, _file_seed(args.seed, i))
        name = f"cm_{args.pairs}_{args.seed}_{i}.graph"
        (outdir / name).write_text(serialize_graph(g))
        files.append(name)
    _emit({"directory": str(outdir), "files": files}, args.json)
    return EXIT_OK


def _random_operand(rng: random.Random, max_pairs: int) -> Graph:
    pairs = rng.randint(1, max_pairs)
    density = rng.random()
    return cm.random_cm_graph(pairs, density, rng.getrandbits(32))


def _random_leaf(rng: random.Random, g: Graph) -> glue.LeafSite:
    sites = glue.leaf_sites(g)
    # a C-M bipartite graph always has a leaf (top/bottom of the poset)
    return sites[rng.randrange(len(sites))]


def _verify_trial(theorem: str, rng: random.Random, max_pairs: int, cap: int) -> dict:
    if theorem == "cm-values":
        g = _random_operand(rng, max_pairs)
        want = formulas.cm_values(g, trusted=True)
        got = oracle.oracle_values(g, cap)
        return _trial_record(g, want.depth, want.reg, got.depth, got.reg)
    if theorem == "leaf":
        g = _random_operand(rng, max_pairs)
        site = _random_leaf(rng, g)
        want = formulas.leaf_delete_values(g, site.leaf, trusted=True)
        got = oracle.oracle_values(glue.delete_leaf(g, site.leaf), cap)
        return _trial_record(g, want.depth, want.reg, got.depth, got.reg)
    if theorem == "pendant":
        g = _random_operand(rng, max_pairs)
        site = _random_leaf(rng, g)
        depth = formulas.clique_sum_p2_depth(g, site.leaf, trusted=True)
        got = oracle.oracle_values(glue.clique_sum_p2(g, site.leaf, "pend"), cap)
        return _trial_record(g, depth, None, got.depth, None)
    # circ / star need two disjoint operands
    g1 = _random_operand(rng, max_pairs)
    g1 = relabel(g1, {v: f"a.{v}" for v in g1.vertices})
    g2 = _random_operand(rng, max_pairs)
    g2 = relabel(g2, {v: f"b.{v}" for v in g2.vertices})
    s1 = _random_leaf(rng, g1)
    s2 = _random_leaf(rng, g2)
    if theorem == "circ":
        want = formulas.circ_values(g1, s1.leaf, g2, s2.leaf, trusted=True)
        composed = glue.circ(g1, s1.leaf, g2, s2.leaf, v_name="vv")
    elif theorem == "star":
        want = formulas.star_values(g1, s1.leaf, g2, s2.leaf, trusted=True)
        composed = glue.star_glue(g1, s1.leaf, g2, s2.leaf, u_name="uu")
    else:
        raise CliError(f"unknown theorem {theorem!r}")
    got = oracle.oracle_values(composed, cap)
    return _trial_record(composed, want.depth, want.reg, got.depth, got.reg)


def _trial_record(g: Graph, fd, fr, od, orr) -> dict:
    ok = fd == od and (fr is None or fr == orr)
    rec = {
        "ok": ok,
        "formula": {"depth": fd, "reg": fr},
        "oracle": {"depth": od, "reg": orr},
    }
    if not ok:
        rec["graph"] = serialize_graph(g)
    return rec


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    cap = oracle.oracle_cap(args.max_vertices)
    passed = failed = 0
    first_counterexample = None
    for i in range(args.trials):
        rec = _verify_trial(args.theorem, rng, args.max_pairs, cap)
        if rec["ok"]:
            passed += 1
        else:
            failed += 1
            if first_counterexample is None:
                first_counterexample = {"trial": i, **rec}
    summary = {
        "theorem": args.theorem,
        "trials": args.trials,
        "passed": passed,
        "failed": failed,
    }
    if first_counterexample is not None:
        summary["first_counterexample"] = first_counterexample
    _emit(summary, args.json)
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eideal",
        description="Depth and regularity of edge ideals of glued C-M bipartite graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one graph file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="run the homological oracle")
    p.add_argument("--betti", action="store_true", help="include the Betti table (implies --oracle)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compose", help="glue two graphs and predict depth/reg")
    p.add_argument("--op", choices=["circ", "star", "pendant"], required=True)
    p.add_argument("--g1", required=True)
    p.add_argument("--u1", required=True, help="leaf of g1 (un-prefixed name)")
    p.add_argument("--g2")
    p.add_argument("--u2", help="leaf of g2 (un-prefixed name)")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--trusted", action="store_true", help="skip the C-M re-verification")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("generate", help="write a corpus of random C-M graphs")
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="random sweep: formula vs oracle")
    p.add_argument(
        "--theorem",
        choices=["leaf", "circ", "star", "pendant", "cm-values"],
        required=True,
    )
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-pairs", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "betti", False):
        args.oracle = True
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

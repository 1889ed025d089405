"""Command-line front end: gen, linegraph and verify subcommands.

Exit codes follow one contract everywhere: 0 all checks pass, 1 a
counterexample was found (for the tightness checks that is the expected
outcome, since they construct one), 2 usage, input or budget errors.
Reports are JSON on stdout (or --out) and are byte-identical across runs
with the same inputs and seeds, except for the timing field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

from . import edgelist
from .graph import BudgetExceeded, Graph
from .linegraph import LineGraph, bcdc, line_graph, line_graph_of_hl
from .menger import FaultCampaign, check_component_lemma, check_tightness, \
    run_campaign
from .topologies import NAMED_FAMILIES, construction_record, generate, \
    hl_from_graph

CHECKS = ("smec", "ft-smec", "cond-ft-smec", "lemma32", "lemma41",
          "appendixA", "tight-uncond", "tight-cond")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlmenger",
        description="Generate hypercube-like networks and verify "
                    "Menger-type edge connectivity of their line graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a network as an edge list")
    _add_family_args(gen)
    gen.add_argument("--out", help="output path (default stdout)")
    gen.add_argument("--construction",
                     help="write the per-level bijection record as JSON")

    lg = sub.add_parser("linegraph", help="emit the line graph of a network")
    src = lg.add_mutually_exclusive_group()
    src.add_argument("--in", dest="infile", help="input edge-list file")
    src.add_argument("--family", choices=NAMED_FAMILIES + ("random",))
    lg.add_argument("--n", type=int, help="dimension (with --family/--bcdc)")
    lg.add_argument("--seed", type=int, help="seed for --family random")
    lg.add_argument("--bcdc", action="store_true",
                    help="emit the data-center pair: subdivided crossed cube "
                         "and its line graph")
    lg.add_argument("--out", help="line-graph output path (default stdout)")
    lg.add_argument("--out-original", dest="out_original",
                    help="with --bcdc: output path for the original graph")
    lg.add_argument("--provenance",
                    help="write line-vertex -> base-edge map as JSON")

    ver = sub.add_parser("verify", help="run a verification check")
    ver.add_argument("--check", required=True, choices=CHECKS)
    vsrc = ver.add_mutually_exclusive_group()
    vsrc.add_argument("--in", dest="infile",
                      help="edge-list of the base network to verify")
    vsrc.add_argument("--family", choices=NAMED_FAMILIES + ("random",))
    ver.add_argument("--n", type=int, help="dimension (with --family)")
    ver.add_argument("--seed", type=int, default=0,
                     help="seed for random family and sampling (default 0)")
    ver.add_argument("--m", type=int, help="maximum fault-set size")
    ver.add_argument("--mode", choices=("exhaustive", "sample"),
                     default="exhaustive")
    ver.add_argument("--samples", type=int, default=10000,
                     help="sample count in sample mode (default 10000)")
    ver.add_argument("--adversarial", action="store_true",
                     help="prepend the deterministic adversarial suite")
    ver.add_argument("--all-witnesses", dest="all_witnesses",
                     action="store_true",
                     help="tightness checks: test every admissible far "
                          "vertex, not only the lowest")
    ver.add_argument("--budget", type=int, default=10_000_000,
                     help="max fault sets an exhaustive sweep may visit")
    ver.add_argument("--jobs", type=int, default=1,
                     help="worker processes for campaign evaluation")
    ver.add_argument("--out", help="write the JSON report here instead of stdout")
    return parser


def _add_family_args(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--family", required=True,
                     choices=NAMED_FAMILIES + ("random",))
    cmd.add_argument("--n", type=int, required=True, help="dimension >= 1")
    cmd.add_argument("--seed", type=int, help="seed for --family random")


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    network = generate(args.family, args.n, args.seed)
    _emit(edgelist.dumps(network.graph), args.out)
    if args.construction:
        with open(args.construction, "w", encoding="utf-8") as fh:
            json.dump(construction_record(network), fh, indent=2,
                      sort_keys=True)
            fh.write("\n")
    return 0


def _load_line_graph(args) -> LineGraph:
    if args.infile:
        base = edgelist.read_file(args.infile)
        return line_graph(base)
    if not args.family or args.n is None:
        raise ValueError("need --in or --family plus --n")
    return line_graph_of_hl(generate(args.family, args.n, args.seed))


def cmd_linegraph(args) -> int:
    if args.bcdc:
        if args.n is None:
            raise ValueError("--bcdc requires --n")
        pair = bcdc(args.n)
        if args.out_original or args.out:
            if args.out_original:
                _emit(edgelist.dumps(pair.original), args.out_original)
            if args.out:
                _emit(edgelist.dumps(pair.logical.graph), args.out)
        else:
            sys.stdout.write("# original graph\n")
            sys.stdout.write(edgelist.dumps(pair.original))
            sys.stdout.write("# logical graph\n")
            sys.stdout.write(edgelist.dumps(pair.logical.graph))
        lg = pair.logical
    else:
        lg = _load_line_graph(args)
        _emit(edgelist.dumps(lg.graph), args.out)
    if args.provenance:
        record = {
            "line_vertex_to_base_edge": [list(e) for e in lg.edge_of_vertex],
        }
        if lg.f_vertices is not None:
            record["f_vertices"] = sorted(lg.f_vertices)
        with open(args.provenance, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def _verify_target(args, base: Graph) -> dict:
    if args.infile:
        with open(args.infile, "rb") as fh:
            digest = hashlib.sha256(fh.read()).hexdigest()
        return {"input_digest": digest, "n_vertices": base.n_vertices,
                "n_edges": len(base.edges)}
    target = {"family": args.family, "n": args.n}
    if args.family == "random":
        target["seed"] = args.seed
    return target


def cmd_verify(args) -> int:
    if args.infile:
        network = hl_from_graph(edgelist.read_file(args.infile))
    else:
        if not args.family or args.n is None:
            raise ValueError("need --in or --family plus --n")
        network = generate(args.family, args.n, args.seed)
    L = line_graph_of_hl(network)
    n = network.dimension
    target = _verify_target(args, network.graph)
    mode = "sampled" if args.mode == "sample" else "exhaustive"

    def campaign(m: int, conditional: bool) -> FaultCampaign:
        return FaultCampaign(
            mode=mode, m=m, conditional=conditional,
            samples=args.samples if mode == "sampled" else 0,
            seed=args.seed, adversarial=args.adversarial,
            budget=args.budget)

    check = args.check
    if check == "smec":
        report = run_campaign(
            L, FaultCampaign(mode="exhaustive", m=0, budget=args.budget),
            jobs=args.jobs, target=target)
        report.check_name = "smec"
    elif check == "ft-smec":
        m = args.m if args.m is not None else max(2 * n - 4, 0)
        report = run_campaign(L, campaign(m, False), jobs=args.jobs,
                              target=target)
    elif check == "cond-ft-smec":
        m = args.m if args.m is not None else max(4 * n - 10, 0)
        report = run_campaign(L, campaign(m, True), jobs=args.jobs,
                              target=target)
    elif check in ("lemma32", "lemma41", "appendixA"):
        if check == "lemma32":
            if n < 3:
                raise ValueError("lemma32 requires dimension >= 3")
            budget, floor = 4 * n - 7, n * (1 << (n - 1)) - 1
        elif check == "lemma41":
            if n < 4:
                raise ValueError("lemma41 requires dimension >= 4")
            budget, floor = 6 * n - 13, n * (1 << (n - 1)) - 2
        else:
            if n != 4:
                raise ValueError("appendixA is the n=4 case")
            budget, floor = 11, 30
        if args.m is not None:
            budget = args.m
        report = check_component_lemma(
            L, budget, floor, campaign(budget, False), jobs=args.jobs,
            target=target)
        report.check_name = check
    elif check in ("tight-uncond", "tight-cond"):
        report = check_tightness(L, conditional=(check == "tight-cond"),
                                 all_witnesses=args.all_witnesses,
                                 target=target)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown check {check}")

    text = report.to_json() + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report.counts.get("failures", 0) else 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "linegraph":
            return cmd_linegraph(args)
        if args.command == "verify":
            return cmd_verify(args)
        raise ValueError(f"unknown command {args.command}")
    except (ValueError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""
Subcommand implementations. Each returns (exit code, JSON-ready report); main() prints the report.

Exit codes: 0 the property holds / arrows, 1 it fails / does not arrow, 2 usage or input
errors, 3 search budget exhausted.
"""

import argparse
import random
from itertools import combinations
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from dagster import get_dagster_logger

from models import (
    BelGadget,
    ColoredConstruction,
    EdgeColoring,
    Embedding,
    GadgetCertificate,
    Graph,
    UsageError,
)

from coloring import is_mono_free
from config import (
    CONSTRUCTION_CONFIGS,
    CommandConfig,
    get_construction_config,
    list_all_experiments,
    resolve_params,
)
from engine import (
    ArrowingEngine,
    check_lower_bounds,
    is_ramsey_minimal,
    is_signal_sender,
    ramsey_number_desk,
    s_min_degree_witness_search,
    uncovered_subsets,
    verify_apex_property,
    verify_bel_property,
)
from graphs import find_embedding
from graphs.stats import graph_stats
from utils.dot_export import to_dot
from utils.graph_codec import (
    coloring_to_json,
    encode_graph6,
    graph_to_dict,
    read_coloring,
    read_graph,
    write_graph,
)
from utils.named_graphs import NAMED_EXAMPLES, load_graph

logger = get_dagster_logger("cli.commands")

Report = Dict[str, Any]
Outcome = Tuple[int, Report]

HOLDS, FAILS = 0, 1


def _exit(holds: bool) -> int:
    return HOLDS if holds else FAILS


def parse_edge(text: str) -> Tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError as e:
        raise UsageError(f"edge must be written u,v; got {text!r}") from e
    return u, v


def parse_vertices(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise UsageError(f"vertex list must be comma-separated integers; got {text!r}") from e


def _write_coloring(config: CommandConfig, coloring: EdgeColoring) -> Optional[str]:
    if config.output is None:
        return None
    Path(config.output).write_text(coloring_to_json(coloring) + "\n", encoding="utf-8")
    logger.info(f"witness written to {config.output}")
    return config.output


# ============================================================================
# construct / convert / stats / list
# ============================================================================


def _write_construction(config: CommandConfig, construction: ColoredConstruction) -> List[str]:
    path = Path(config.output)
    if config.format == "dot":
        path.write_text(to_dot(construction.graph, construction.psi, construction.name), encoding="utf-8")
        return [str(path)]
    write_graph(path, construction.graph, config.format)
    written = [str(path)]
    if construction.psi is not None:
        psi_path = path.with_name(path.stem + ".coloring.json")
        psi_path.write_text(coloring_to_json(construction.psi) + "\n", encoding="utf-8")
        written.append(str(psi_path))
    return written


def cmd_construct(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    try:
        registered = get_construction_config(args.name)
    except ValueError as e:
        raise UsageError(f"{e}; known constructions: {sorted(CONSTRUCTION_CONFIGS)}") from e
    raw = {param: getattr(args, param, None) for param in registered["params"]}
    construction = registered["builder"](resolve_params(args.name, raw), engine)
    report = construction.summary()
    if config.output is not None:
        report["files"] = _write_construction(config, construction)
    else:
        report["graph"] = graph_to_dict(construction.graph)
        report["coloring"] = construction.psi.to_dict() if construction.psi is not None else None
    logger.info(f"{args.name}: n={construction.graph.n}, m={construction.graph.num_edges}")
    return HOLDS, report


def cmd_convert(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    g = load_graph(args.input)
    report: Report = {"n": g.n, "edges": g.num_edges, "format": config.format}
    if config.output is not None:
        write_graph(config.output, g, config.format)
        report["files"] = [config.output]
    elif config.format == "graph6":
        report["graph6"] = encode_graph6(g)
    elif config.format == "dot":
        report["dot"] = to_dot(g)
    else:
        report["graph"] = graph_to_dict(g)
    return HOLDS, report


def cmd_stats(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    rows = []
    for arg in args.inputs:
        row = {"name": arg}
        row.update(graph_stats(load_graph(arg)).to_dict())
        rows.append(row)
    return HOLDS, {"graphs": rows}


def cmd_list(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    constructions = {
        name: {"description": c["description"], "params": c["params"], "defaults": c["defaults"]}
        for name, c in CONSTRUCTION_CONFIGS.items()
    }
    return HOLDS, {
        "constructions": constructions,
        "named_graphs": NAMED_EXAMPLES,
        "experiments": list_all_experiments(),
    }


# ============================================================================
# arrow / verify
# ============================================================================


def cmd_arrow(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    f, h = load_graph(args.f), load_graph(args.h)
    result = engine.arrows(f, h)
    report = result.to_dict(with_timing=not config.deterministic)
    if result.witness is not None:
        report["witness_file"] = _write_coloring(config, result.witness)
    return _exit(result.arrows), report


def verify_mono_free(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    g, h = load_graph(args.g), load_graph(args.h)
    free, found = is_mono_free(read_coloring(args.coloring, g), h)
    report: Report = {"property": "mono_free", "holds": free}
    if found is not None:
        color, embedding = found
        report["copy"] = {"color": color.value, **embedding.to_dict()}
    return _exit(free), report


def verify_sender(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    g, h = load_graph(args.g), load_graph(args.h)
    e = parse_edge(args.e) if args.e else tuple(sorted(g.role("e")))
    f = parse_edge(args.f_edge) if args.f_edge else tuple(sorted(g.role("f")))
    holds = is_signal_sender(g, e, f, h, engine=engine)
    return _exit(holds), {"property": "signal_sender", "holds": holds, "e": list(e), "f": list(f)}


def verify_bel(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    g, h = load_graph(args.g), load_graph(args.h)
    template = load_graph(args.template)
    psi = read_coloring(args.psi, template)
    if args.embedding:
        embedding = Embedding(tuple(parse_vertices(args.embedding)))
    else:
        embedding = find_embedding(template, g)
        if embedding is None:
            raise UsageError("template does not embed in the gadget graph; pass --embedding")
    cert = GadgetCertificate(g, BelGadget(embedding, psi), h)
    holds = verify_bel_property(cert, h, engine=engine)
    return _exit(holds), {"property": "bel", "holds": holds, "embedding": list(embedding.mapping)}


def verify_apex(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    g, h = load_graph(args.g), load_graph(args.h)
    s = args.s if not args.s[:1].isdigit() else parse_vertices(args.s)
    subsets = None
    if args.sample:
        members = sorted(g.role(s)) if isinstance(s, str) else sorted(s)
        everything = list(combinations(members, args.d))
        rng = random.Random(config.seed)
        subsets = rng.sample(everything, min(args.sample, len(everything)))
    holds = verify_apex_property(g, s, args.d, h, subsets)
    report: Report = {"property": "apex", "holds": holds, "d": args.d}
    if subsets is not None:
        report["sampled"] = [list(x) for x in subsets]
    if not holds:
        report["uncovered"] = [list(x) for x in uncovered_subsets(g, s, args.d, h, subsets)]
    return _exit(holds), report


def verify_minimal(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    f, h = load_graph(args.f), load_graph(args.h)
    holds = is_ramsey_minimal(f, h, engine=engine)
    return _exit(holds), {"property": "ramsey_minimal", "holds": holds}


def verify_epsilon(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    f, h = load_graph(args.f), load_graph(args.h)
    found = engine.epsilon_counterexample(f, h, args.eps)
    report: Report = {"property": "epsilon_arrowing", "eps": args.eps, "holds": found is None}
    if found is not None:
        subset, witness = found
        report["subset"] = list(subset)
        report["witness"] = witness.to_dict()
    return _exit(found is None), report


VERIFIERS = {
    "mono-free": verify_mono_free,
    "sender": verify_sender,
    "bel": verify_bel,
    "apex": verify_apex,
    "minimal": verify_minimal,
    "epsilon": verify_epsilon,
}


def cmd_verify(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    return VERIFIERS[args.property](args, config, engine)


# ============================================================================
# search
# ============================================================================


def search_ramsey_number(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    h = load_graph(args.h)
    value = ramsey_number_desk(h, args.n_max, engine=engine)
    status = "exact" if value is not None else f"not found <= {args.n_max}"
    return _exit(value is not None), {"search": "ramsey_number", "value": value, "status": status}


def search_s_upper(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    h = load_graph(args.h)
    candidates = [load_graph(c) for c in args.candidates.split(",")]
    result = s_min_degree_witness_search(h, candidates, engine=engine)
    report: Report = {
        "search": "s_upper",
        "value": result.best,
        "status": "upper bound",
        "candidates_arrowing": result.candidates_arrowing,
        "bounds": check_lower_bounds(result.witness, h),
    }
    if config.output is not None:
        write_graph(config.output, result.witness, config.format)
        report["witness_file"] = config.output
    else:
        report["witness"] = graph_to_dict(result.witness)
    return HOLDS, report


SEARCHES = {"ramsey_number": search_ramsey_number, "s_upper": search_s_upper}


def cmd_search(args: argparse.Namespace, config: CommandConfig, engine: ArrowingEngine) -> Outcome:
    return SEARCHES[args.kind](args, config, engine)

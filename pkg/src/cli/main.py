"""
ramsey-forge command line.

stdout carries exactly one JSON report per invocation; diagnostics go to stderr.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from dagster import get_dagster_logger

from models import BudgetExhausted, RamseyForgeError, UsageError

from config import CONSTRUCTION_CONFIGS, CommandConfig, default_threads
from utils.graph_codec import dumps_report

from . import commands

USAGE, BUDGET = 2, 3

COMMANDS: Dict[str, Callable] = {
    "construct": commands.cmd_construct,
    "arrow": commands.cmd_arrow,
    "verify": commands.cmd_verify,
    "search": commands.cmd_search,
    "convert": commands.cmd_convert,
    "stats": commands.cmd_stats,
    "list": commands.cmd_list,
}


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so bad usage maps to exit code 2 with a JSON report."""

    def error(self, message):
        raise UsageError(message)


def _common_options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="file for graphs or witnesses")
    common.add_argument("--format", default="json", help="graph6, json or dot (default: json)")
    common.add_argument("--max-nodes", type=int, help="search-node limit per engine call")
    common.add_argument("--timeout-ms", type=int, help="wall-clock limit per engine call")
    common.add_argument("--threads", type=int, help="engine worker processes (default: $RAMSEY_FORGE_THREADS or 1)")
    common.add_argument("--deterministic", action="store_true", help="sequential canonical search, reproducible output")
    common.add_argument("--seed", type=int, help="seed for sampled checks")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    return common


def _construction_options(parser: argparse.ArgumentParser) -> None:
    seen = set()
    for registered in CONSTRUCTION_CONFIGS.values():
        for param, kind in registered["params"].items():
            if param in seen:
                continue
            seen.add(param)
            flag = "--" + param.replace("_", "-")
            parser.add_argument(flag, dest=param, help=f"{kind} parameter")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(prog="ramsey-forge", description="Ramsey arrowing, gadgets and desk-scale searches")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    construct = sub.add_parser("construct", parents=[common], help="build a registered construction")
    construct.add_argument("name", help="construction id (see `list`)")
    _construction_options(construct)

    arrow = sub.add_parser("arrow", parents=[common], help="decide F -> H")
    arrow.add_argument("--f", required=True, help="host graph F")
    arrow.add_argument("--h", required=True, help="target graph H")

    verify = sub.add_parser("verify", help="check a gadget or coloring property")
    props = verify.add_subparsers(dest="property", required=True, parser_class=_Parser)
    mono = props.add_parser("mono-free", parents=[common])
    mono.add_argument("--g", required=True)
    mono.add_argument("--coloring", required=True, help="JSON coloring of G")
    mono.add_argument("--h", required=True)
    sender = props.add_parser("sender", parents=[common])
    sender.add_argument("--g", required=True)
    sender.add_argument("--h", required=True)
    sender.add_argument("--e", help="edge u,v (default: role e)")
    sender.add_argument("--f", dest="f_edge", help="edge u,v (default: role f)")
    bel = props.add_parser("bel", parents=[common])
    bel.add_argument("--g", required=True)
    bel.add_argument("--h", required=True)
    bel.add_argument("--template", required=True, help="template graph")
    bel.add_argument("--psi", required=True, help="JSON coloring of the template")
    bel.add_argument("--embedding", help="image of each template vertex, comma-separated")
    apex = props.add_parser("apex", parents=[common])
    apex.add_argument("--g", required=True)
    apex.add_argument("--h", required=True)
    apex.add_argument("--d", required=True, type=int)
    apex.add_argument("--s", default="S", help="role name or comma-separated vertices (default: S)")
    apex.add_argument("--sample", type=int, help="check only this many random d-subsets (uses --seed)")
    minimal = props.add_parser("minimal", parents=[common])
    minimal.add_argument("--f", required=True)
    minimal.add_argument("--h", required=True)
    epsilon = props.add_parser("epsilon", parents=[common])
    epsilon.add_argument("--f", required=True)
    epsilon.add_argument("--h", required=True)
    epsilon.add_argument("--eps", required=True, type=float)

    search = sub.add_parser("search", help="desk-scale searches")
    kinds = search.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    ramsey = kinds.add_parser("ramsey_number", parents=[common])
    ramsey.add_argument("--h", required=True)
    ramsey.add_argument("--n-max", required=True, type=int)
    s_upper = kinds.add_parser("s_upper", parents=[common])
    s_upper.add_argument("--h", required=True)
    s_upper.add_argument("--candidates", required=True, help="comma-separated graphs")

    convert = sub.add_parser("convert", parents=[common], help="rewrite a graph as graph6, JSON or DOT")
    convert.add_argument("--input", "-i", required=True)

    stats = sub.add_parser("stats", parents=[common], help="GraphStats of each input")
    stats.add_argument("inputs", nargs="+")

    sub.add_parser("list", parents=[common], help="registered constructions and named graphs")
    return parser


def command_config(args: argparse.Namespace) -> CommandConfig:
    threads = args.threads
    if threads is None:
        threads = 1 if args.deterministic else default_threads()
    inputs = [str(v) for k in ("f", "g", "h", "input") if (v := getattr(args, k, None)) is not None]
    inputs += list(getattr(args, "inputs", []))
    return CommandConfig(
        inputs=inputs,
        output=args.output,
        format=args.format,
        max_nodes=args.max_nodes,
        timeout_ms=args.timeout_ms,
        threads=threads,
        deterministic=args.deterministic,
        seed=args.seed,
        verbose=args.verbose,
    ).check_invariants()


def configure_logging(verbose: bool) -> logging.Handler:
    """Route every library logger to stderr."""
    root = get_dagster_logger()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    root.propagate = False
    return handler


def _emit(report: Dict) -> None:
    sys.stdout.write(dumps_report(report) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    config: Optional[CommandConfig] = None
    handler = None
    try:
        args = build_parser().parse_args(argv)
        config = command_config(args)
        handler = configure_logging(config.verbose)
        code, report = COMMANDS[args.command](args, config, config.to_engine())
    except BudgetExhausted as e:
        report = {"error": str(e), "verdict": "budget"}
        if e.stats is not None:
            stats = e.stats.to_dict()
            if config is not None and config.deterministic:
                stats.pop("wall_time_ms", None)
            report["stats"] = stats
        print(f"error: {e}", file=sys.stderr)
        _emit(report)
        return BUDGET
    except (RamseyForgeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        _emit({"error": str(e)})
        return USAGE
    finally:
        if handler is not None:
            get_dagster_logger().removeHandler(handler)
    _emit(report)
    return code


if __name__ == "__main__":
    sys.exit(main())

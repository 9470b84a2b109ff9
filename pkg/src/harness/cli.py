"""Command-line surface: analyze, cycle, oracle, lemma, search, gen.

Results are printed to stdout as JSON; logs go to stderr. Exit status is 0
for every completed run (violations included) and 2 for input or hypothesis
errors.
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel

from ..config import get_settings
from ..generators import (
    BRUTE_FORCE_MAX_N,
    NAMED_GRAPHS,
    PLANTED_KINDS,
    CertifiedGraph,
    clique_join,
    complete_multipartite,
    named_graph,
    planted_lemma_instance,
    random_free_graph,
)
from ..graph import Graph, is_complete, is_connected, members, min_degree
from ..invariants import connectivity, independence_number, toughness
from ..monitoring.logger import get_logger, log_context, setup_logging
from ..monitoring.metrics import get_metrics_collector
from ..oracle import hamiltonian_cycle_oracle, hamiltonian_path_oracle
from ..patterns import is_p3_kp1_free
from ..pipeline import PipelineOptions, TheoremInstance, construct_hamiltonian_cycle
from ..utils.errors import HypothesisError, PreconditionError, ToughHamError
from ..utils.helpers import parse_rational
from .formats import emit_graph6, read_graph, write_graph
from .runner import resolve_source, run_lemma_suite
from .tightness import ENUMERATE_MAX_N, tightness_search

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2


class AnalyzeReport(BaseModel):
    schema_version: int = 1
    graph6: str
    n: int
    edges: int
    connected: bool
    complete: bool
    min_degree: Optional[int] = None
    kappa: Optional[int] = None
    min_cut: Optional[List[int]] = None
    alpha: Optional[int] = None
    toughness: Optional[Dict[str, Any]] = None
    freeness: Dict[str, Optional[List[int]]]
    hamiltonian: Optional[str] = None


def _emit(payload: Any) -> None:
    if isinstance(payload, BaseModel):
        print(payload.model_dump_json(indent=2))
    else:
        print(json.dumps(payload, indent=2))


def _ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise PreconditionError("integer_list", f"expected integers, got {text!r}") from None


def _key_values(items: Sequence[str]) -> Dict[str, Any]:
    """Parse key=value pairs; integer lists and integers are converted."""
    out: Dict[str, Any] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise PreconditionError("parameter", f"expected key=value, got {item!r}")
        if "," in value:
            out[key] = _ints(value)
        elif value.lstrip("-").isdigit():
            out[key] = int(value)
        else:
            out[key] = value
    return out


def _family(name: str, params: Sequence[str]) -> CertifiedGraph | Graph:
    """Build a generator family member from its command-line parameters."""
    if name == "multipartite":
        return complete_multipartite(_ints(params[0]))
    if name == "clique_join":
        if len(params) != 2:
            raise PreconditionError("parameter", "clique_join takes M and C1,C2,...")
        return clique_join(int(params[0]), _ints(params[1]))
    if name == "planted":
        if not params:
            raise PreconditionError("parameter", f"planted takes a kind from {list(PLANTED_KINDS)}")
        return planted_lemma_instance(params[0], **_key_values(params[1:]))
    if name == "random":
        if len(params) != 4:
            raise PreconditionError("parameter", "random takes N P K SEED")
        return random_free_graph(int(params[0]), float(params[1]), int(params[2]), int(params[3]))
    if name in NAMED_GRAPHS:
        return named_graph(name, int(params[0]) if params else 0)
    known = sorted([*NAMED_GRAPHS, "multipartite", "clique_join", "planted", "random"])
    raise PreconditionError("family", f"unknown family {name!r}; known: {known}")


def _certificate(spec: str) -> CertifiedGraph:
    """``family:param:param`` as accepted by ``gen``, e.g. ``clique_join:45:92,3,3``."""
    name, *params = spec.split(":")
    built = _family(name, params)
    if not isinstance(built, CertifiedGraph):
        raise PreconditionError("certificate", f"family {name!r} carries no toughness certificate")
    return built


def cmd_analyze(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    settings = get_settings()
    report = AnalyzeReport(
        graph6=emit_graph6(g),
        n=g.n,
        edges=g.edge_count(),
        connected=is_connected(g),
        complete=is_complete(g),
        freeness={},
    )
    if g.n >= 1:
        kappa, cut = connectivity(g)
        report.min_degree = min_degree(g)
        report.kappa = kappa
        report.min_cut = None if cut is None else members(cut)
        report.alpha = independence_number(g)[0]
        if g.n <= BRUTE_FORCE_MAX_N:
            report.toughness = toughness(g, limit=BRUTE_FORCE_MAX_N).to_dict()
    for k in (1, 2, 3):
        free, witness = is_p3_kp1_free(g, k)
        report.freeness[str(k)] = None if free else witness.to_list()
    if 3 <= g.n <= settings.oracle_max_n:
        report.hamiltonian = hamiltonian_cycle_oracle(g).verdict.value
    _emit(report)
    return EXIT_OK


def cmd_cycle(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    t = parse_rational(args.t)
    if args.certificate:
        cg = _certificate(args.certificate)
        if emit_graph6(cg.graph) != emit_graph6(g):
            raise HypothesisError("certificate", f"{args.file} is not the graph {args.certificate}")
        inst = TheoremInstance.from_certified(cg, t)
    else:
        inst = TheoremInstance.from_graph(g, t)
    options = PipelineOptions(allow_shortcuts=not args.no_shortcuts)
    trace = construct_hamiltonian_cycle(inst, options)
    _emit(trace)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    if args.path or args.ends:
        u, v = args.ends if args.ends else (None, None)
        answer = hamiltonian_path_oracle(g, u, v)
    else:
        answer = hamiltonian_cycle_oracle(g)
    _emit({"schema_version": 1, "graph6": emit_graph6(g), **answer.to_dict()})
    return EXIT_OK


def cmd_lemma(args: argparse.Namespace) -> int:
    overrides = {
        "kind": args.source,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "samples": args.samples,
        "k": args.k,
        "seed": args.seed,
    }
    source = resolve_source(args.lemma_id, overrides)
    report = run_lemma_suite(args.lemma_id, source, args.budget)
    _emit({**report.model_dump(), "passed": report.passed, "fingerprint": report.fingerprint()})
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    report = tightness_search(
        parse_rational(args.t_max), args.n_max, args.budget, args.seed, args.enumerate_max_n
    )
    _emit(report)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    built = _family(args.family, args.params)
    g = built.graph if isinstance(built, CertifiedGraph) else built
    payload: Dict[str, Any] = {
        "schema_version": 1,
        "family": args.family,
        "n": g.n,
        "graph6": emit_graph6(g),
    }
    if isinstance(built, CertifiedGraph):
        payload["certificate"] = built.to_dict()
    if args.out:
        write_graph(g, args.out)
        payload["path"] = args.out
    _emit(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toughham", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants, toughness and freeness of a graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cycle", help="run the hamiltonian cycle construction")
    p.add_argument("file")
    p.add_argument("--t", default="15", help="toughness the graph is claimed to have")
    p.add_argument(
        "--certificate", metavar="FAMILY", help="certifying family, e.g. multipartite:16,16"
    )
    p.add_argument("--no-shortcuts", action="store_true", help="skip the degree shortcuts")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("oracle", help="exact hamiltonicity")
    p.add_argument("file")
    p.add_argument("--path", action="store_true", help="ask for a hamiltonian path")
    p.add_argument("--ends", nargs=2, type=int, metavar=("U", "V"), help="pin the path ends")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lemma", help="run a lemma check suite")
    p.add_argument("lemma_id")
    p.add_argument("--source", choices=("enumerate", "free", "random", "planted"))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--k", type=int, help="isolated vertices in the forbidden P3 u kP1")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, help="maximum number of instances")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("search", help="nonhamiltonian free graphs of high toughness")
    p.add_argument("--t-max", default="15")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--budget", type=int, default=0, help="random samples after the enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--enumerate-max-n", type=int, default=ENUMERATE_MAX_N)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="build a graph from a generator family")
    p.add_argument("family", help="multipartite, clique_join, planted, random or a named graph")
    p.add_argument("params", nargs="*")
    p.add_argument("--out", help="write the graph here (.g6 or .edges)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging()
    get_metrics_collector().start_server()
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        with log_context(command=args.command):
            return handler(args)
    except (ToughHamError, OSError, ValueError) as e:
        logger.error("command_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

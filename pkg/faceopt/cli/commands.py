"""
faceopt subcommands
"""
import argparse
import logging
from collections import Counter
from typing import Optional

from faceopt.approx.neat import approximate
from faceopt.cli import cli
from faceopt.cli.io import CommandResult, embedding_payload, read_formula, read_graph
from faceopt.errors import InvalidParams
from faceopt.gadgets.edges import gen_parallel_edge, gen_wheel_edge
from faceopt.gadgets.minmax5 import gen_minmax5_instance
from faceopt.gadgets.random_graphs import gen_random_biconnected
from faceopt.graph.rotation import face_sizes
from faceopt.minmaxface.dispatch import decide_minmax
from faceopt.models.graph_document import GraphDocument
from faceopt.oracle.enumeration import choice_space, exact_min_max_face
from faceopt.spqr.builder import build_spqr
from faceopt.uniform.dispatch import recognize_uniform

logger = logging.getLogger(__name__)

GEN_FAMILIES = ("parallel", "wheel", "minmax5", "random")


def _answer(found: bool) -> str:
    return "yes" if found else "no"


def _positive(value: Optional[int], flag: str) -> Optional[int]:
    if value is not None and value <= 0:
        raise InvalidParams(f"{flag} must be positive, got {value}")
    return value


# decide

def _configure_decide(parser: argparse.ArgumentParser):
    parser.add_argument("--k", type=int, required=True, help="Face size bound")


@cli.command(
    name="decide",
    description="Decide whether some embedding has every face of size at most k",
    configure=_configure_decide,
    metadata={"category": "decision"}
)
def decide(args: argparse.Namespace, path: str) -> CommandResult:
    g = read_graph(path)
    rot = decide_minmax(g, args.k, limit=_positive(args.limit, "--limit"))
    logger.info(f"decide k={args.k} on n={g.n}, m={g.m}: {_answer(rot is not None)}")
    if rot is None:
        return CommandResult(1, {"k": args.k, "answer": "no"}, "embedding.jinja")
    return CommandResult(0, {"k": args.k, "answer": "yes", "embedding": embedding_payload(g, rot)}, "embedding.jinja")


# minimize

def _configure_minimize(parser: argparse.ArgumentParser):
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--approx", dest="mode", action="store_const", const="approx",
                      help="Neat-embedding approximation, within 6 times the optimum (default)")
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact",
                      help="Exact optimum by enumerating all embeddings")
    parser.set_defaults(mode="approx")


@cli.command(
    name="minimize",
    description="Embedding with a small largest face",
    configure=_configure_minimize,
    metadata={"category": "optimization"}
)
def minimize(args: argparse.Namespace, path: str) -> CommandResult:
    g = read_graph(path)
    if args.mode == "exact":
        build_spqr(g)
        largest, rot = exact_min_max_face(g, _positive(args.limit, "--limit"))
        payload = {"mode": "exact", "max_face": largest, "embedding": embedding_payload(g, rot)}
    else:
        rot, largest, state = approximate(g)
        payload = {
            "mode": "approx",
            "max_face": largest,
            "embedding": embedding_payload(g, rot),
            "r_nodes": [state.reports[nid].to_dict() for nid in sorted(state.reports)],
        }
    logger.info(f"minimize ({args.mode}) on n={g.n}, m={g.m}: max face {largest}")
    return CommandResult(0, payload, "embedding.jinja")


# uniform

def _configure_uniform(parser: argparse.ArgumentParser):
    parser.add_argument("--k", type=int, default=None, help="Required face size (default: the Euler value)")


@cli.command(
    name="uniform",
    description="Find an embedding whose faces all have the same size",
    configure=_configure_uniform,
    metadata={"category": "decision"}
)
def uniform(args: argparse.Namespace, path: str) -> CommandResult:
    g = read_graph(path)
    if args.k is not None and args.k < 2:
        raise InvalidParams(f"k must be at least 2, got {args.k}")
    found = recognize_uniform(g, args.k, limit=_positive(args.limit, "--limit"))
    if found is None:
        logger.info(f"uniform on n={g.n}, m={g.m}: no")
        return CommandResult(1, {"k": args.k, "answer": "no"}, "embedding.jinja")
    k, rot = found
    logger.info(f"uniform on n={g.n}, m={g.m}: {k}-uniform")
    return CommandResult(0, {"k": k, "answer": "yes", "embedding": embedding_payload(g, rot)}, "embedding.jinja")


# enumerate

@cli.command(
    name="enumerate",
    description="Count all embeddings and histogram their face sizes",
    metadata={"category": "oracle"}
)
def enumerate_(args: argparse.Namespace, path: str) -> CommandResult:
    g = read_graph(path)
    space = choice_space(g, _positive(args.limit, "--limit"))
    multisets: Counter = Counter()
    largest: Counter = Counter()
    for rot in space.embeddings():
        sizes = face_sizes(g, rot)
        multisets[tuple(sorted(Counter(sizes).items()))] += 1
        largest[max(sizes)] += 1
    payload = {
        "count": len(space),
        "min_max_face": min(largest),
        "max_face_histogram": {str(size): count for size, count in sorted(largest.items())},
        "multisets": [
            {"sizes": [list(pair) for pair in key], "embeddings": count}
            for key, count in sorted(multisets.items())
        ],
    }
    logger.info(f"enumerate on n={g.n}, m={g.m}: {len(space)} embeddings")
    return CommandResult(0, payload, "histogram.jinja")


# spqr

@cli.command(
    name="spqr",
    description="Dump the SPQR-tree of a biconnected graph",
    metadata={"category": "structure"}
)
def spqr(args: argparse.Namespace, path: str) -> CommandResult:
    tree = build_spqr(read_graph(path))
    logger.info(f"spqr: {tree!r}")
    return CommandResult(0, {"tree": tree.to_dict()}, "spqr.jinja")


# gen

def _configure_gen(parser: argparse.ArgumentParser):
    parser.add_argument("family", choices=GEN_FAMILIES, help="Instance family")
    parser.add_argument("formula", nargs="?", default=None, help="CNF file (JSON or DIMACS) for minmax5")
    parser.add_argument("--d", type=int, default=None, help="Short side length d of a (1,d)-edge")
    parser.add_argument("--k", type=int, default=None, help="Odd target face size of a wheel edge")
    parser.add_argument("--n", type=int, default=None, help="Vertex count of a random graph")
    parser.add_argument("--m", type=int, default=None, help="Edge count of a random graph")


def _required(args: argparse.Namespace, *names: str):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise InvalidParams(f"gen {args.family} needs {', '.join(missing)}")


@cli.command(
    name="gen",
    description="Generate gadget, hardness and random instances as graph JSON",
    configure=_configure_gen,
    takes_input=False,
    metadata={"category": "generator"}
)
def gen(args: argparse.Namespace, path: Optional[str]) -> CommandResult:
    if args.family == "parallel":
        _required(args, "d")
        payload = gen_parallel_edge(args.d).to_document().to_dict()
    elif args.family == "wheel":
        _required(args, "d", "k")
        payload = gen_wheel_edge(args.d, args.k).to_document().to_dict()
    elif args.family == "random":
        _required(args, "n", "m")
        g = gen_random_biconnected(args.n, args.m, seed=args.seed)
        payload = GraphDocument.from_multigraph(g).to_dict()
    else:
        if args.formula is None:
            raise InvalidParams("gen minmax5 needs a formula file")
        instance = gen_minmax5_instance(read_formula(args.formula))
        payload = instance.to_document().to_dict()
        payload["variables"] = {
            str(var): {"edge": gadget.edge, "positive_apex": gadget.positive_apex}
            for var, gadget in sorted(instance.variables.items())
        }
    payload["family"] = args.family
    logger.info(f"gen {args.family}: {len(payload['vertices'])} vertices, {len(payload['edges'])} edges")
    return CommandResult(0, payload)

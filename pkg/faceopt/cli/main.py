"""
faceopt command-line entry point
"""
import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from faceopt import __version__
from faceopt.cli import cli, load_commands
from faceopt.cli.io import SCHEMA, CommandResult, batch_inputs, error_document
from faceopt.cli.renderer import ReportRenderer
from faceopt.config import faceopt_config
from faceopt.errors import FaceoptError
from faceopt.utils.logging_utils import command_var, instance_id_var, setup_logging

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_LIMIT = 1000000
INTERNAL_ERROR = 4

Outcome = Tuple[int, Dict[str, Any], str]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for every random choice")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="Largest embedding count to enumerate")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes in batch directory mode")
    common.add_argument("--format", choices=("json", "text"), default="json", help="Output format")
    common.add_argument("--log-level", default=None, help="Logging level on stderr")

    parser = argparse.ArgumentParser(prog="faceopt", description="Face sizes of planar embeddings")
    parser.add_argument("--version", action="version", version=f"faceopt {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in cli.list_commands():
        command.add_to(subparsers, parents=[common])
    return parser


def run_instance(name: str, args: argparse.Namespace, path: Optional[str]) -> Outcome:
    """Exit code, result document and text template for one instance"""
    command_token = command_var.set(name)
    instance_token = instance_id_var.set(os.path.basename(path) if path else "-")
    command = cli.get_command(name)
    try:
        result: CommandResult = command.execute(args, path)
    except FaceoptError as e:
        return e.exit_code, error_document(name, e), "summary.jinja"
    except (ValidationError, OSError, ValueError) as e:
        return 2, error_document(name, e), "summary.jinja"
    except Exception as e:
        logger.debug(f"Internal error in {name}", exc_info=True)
        return INTERNAL_ERROR, error_document(name, e), "summary.jinja"
    finally:
        instance_id_var.reset(instance_token)
        command_var.reset(command_token)
    return result.exit_code, result.document(name), result.template


def _init_worker(level: str):
    setup_logging(level)
    load_commands()


def run_batch(name: str, args: argparse.Namespace, paths: List[str], level: str) -> Tuple[int, Dict[str, Any]]:
    worker = partial(run_instance, name, args)
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs, initializer=_init_worker, initargs=(level,)) as pool:
            outcomes = list(pool.map(worker, paths))
    else:
        outcomes = [worker(path) for path in paths]
    results = []
    for path, (_, doc, _) in zip(paths, outcomes):
        results.append({"input": path, **doc})
    code = max((code for code, _, _ in outcomes), default=0)
    logger.info(f"Batch {name}: {len(paths)} instances, exit code {code}")
    return code, {"schema": SCHEMA, "command": name, "status": "success", "results": results}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand, print its result on stdout and return the exit code"""
    load_commands()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    level = args.log_level or faceopt_config.log_level
    setup_logging(level)
    if args.jobs < 1:
        print(f"faceopt: --jobs must be positive, got {args.jobs}", file=sys.stderr)
        return 2

    command = cli.get_command(args.command)
    path = getattr(args, "input", None)
    paths = batch_inputs(path) if command.takes_input and path is not None else None
    if paths is not None:
        code, doc = run_batch(args.command, args, paths, level)
        template = "summary.jinja"
    else:
        code, doc, template = run_instance(args.command, args, path)

    renderer = ReportRenderer()
    if args.format == "text":
        output = renderer.render(template, doc)
    else:
        output = renderer.render_json(doc)
    sys.stdout.write(output if output.endswith("\n") else output + "\n")
    return code


def main():
    sys.exit(run())

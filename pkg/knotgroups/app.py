"""Command-line application: configuration, logging and dispatch."""
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from knotgroups.cli.commands import COMMANDS
from knotgroups.cli.parser import build_parser
from knotgroups.config.loader import Config
from knotgroups.errors import KnotGroupsError, VerificationError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def configure_logging(level: str):
    """Log to stderr so stdout carries only results."""
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        config = Config(args.config)
    except (OSError, ValueError) as e:
        print(f"error: failed to load configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.truncate is not None:
        config.truncate = args.truncate
    if args.seed is not None:
        config.seed = args.seed
    configure_logging(args.log_level or config.log_level)
    logger = logging.getLogger(__name__)

    handler = COMMANDS[args.command]
    try:
        result = handler(args, config)
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ValidationError, ValueError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KnotGroupsError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED

    if args.json:
        print(result.payload.model_dump_json(indent=2))
    else:
        print(result.text)
    logger.debug(f"Command {args.command} finished (ok={result.ok})")
    return EXIT_OK if result.ok else EXIT_FAILED

# sslocus/cli.py
"""
Command line interface.

    sslocus describe <spec-file> [--format text|json|html]
    sslocus verify --p <prime> [--max-p N] [--workers N] [--format text|json|html]
    sslocus convert-height --m <1..4> --j <int> [--format text|json]

Exit codes: 0 success, 2 usage or parse error, 3 validation failure, 4 a verification check failed.
"""

import argparse
import logging
import sys

from . import __version__
from .config import load_config, log_level
from .errors import BoundExceeded, ConfigError, InvalidSpec, NotAnOddPrime, SpecFileError
from .manager import LocusManager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_VERIFY_FAILED = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr.")

    parser = argparse.ArgumentParser(
        prog="sslocus",
        description="Geometry of supersingular loci of unitary Shimura varieties, with a finite-geometry oracle.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    describe = commands.add_parser("describe", parents=[common], help="Describe the geometry for a JSON spec file.")
    describe.add_argument("spec_file", help="Path to the spec file.")
    describe.add_argument("--format", choices=["text", "json", "html"], default="text")

    verify = commands.add_parser("verify", parents=[common], help="Check the local table against enumeration over GF(p^2).")
    verify.add_argument("--p", type=int, required=True, help="Odd prime to enumerate over.")
    verify.add_argument("--max-p", type=int, default=None, help="Largest prime accepted (default 7 or SSLOCUS_MAX_P).")
    verify.add_argument("--workers", type=int, default=None, help="Processes for the line enumeration.")
    verify.add_argument("--format", choices=["text", "json", "html"], default="text")

    height = commands.add_parser("convert-height", parents=[common], help="Print the quasi-isogeny height m*j.")
    height.add_argument("--m", type=int, required=True, choices=range(1, 5), metavar="{1..4}")
    height.add_argument("--j", type=int, required=True)
    height.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _error(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _run(manager: LocusManager, args) -> int:
    color = manager.config.get("color", True) and sys.stdout.isatty()

    if args.command == "describe":
        data = manager.describe(args.spec_file)
        sys.stdout.write(manager.render(data, args.format, color))
        return EXIT_OK

    if args.command == "verify":
        data = manager.verify(args.p, max_p=args.max_p, workers=args.workers)
        sys.stdout.write(manager.render(data, args.format, color))
        return EXIT_OK if data["passed"] else EXIT_VERIFY_FAILED

    data = manager.convert_height(args.m, args.j)
    sys.stdout.write(manager.render(data, args.format, color))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_config({"max_p": getattr(args, "max_p", None), "workers": getattr(args, "workers", None)})
    except ConfigError as e:
        return _error(str(e), EXIT_USAGE)
    if args.verbose:
        config["log_level"] = "DEBUG"

    logging.basicConfig(
        level=log_level(config),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    manager = LocusManager(config)
    try:
        return _run(manager, args)
    except (SpecFileError, NotAnOddPrime, BoundExceeded) as e:
        return _error(str(e), EXIT_USAGE)
    except InvalidSpec as e:
        logger.debug("Validation failed with %s violation(s)", len(e.violations))
        return _error(str(e), EXIT_INVALID)
    except ValueError as e:
        return _error(str(e), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())

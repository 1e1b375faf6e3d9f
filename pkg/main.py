import argparse
import logging
import sys

from src.confg.config import settings
from src.errors import EngineException
from src.routes import export, structure, verify

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """
    The command line parser with every command group included

    :return: the parser
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="mds-duality",
        description="Duals of finite monotonic distributive semilattices and mechanical checks of their theorems",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for routes in (verify, export, structure):
        routes.register(subparsers)
    return parser


def configure_logging(verbose: int) -> None:
    level = {0: settings.log_level.upper(), 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    """
    Run one command

    :param argv: arguments without the program name; defaults to ``sys.argv[1:]``
    :type argv: list[str] | None
    :return: exit status: 0 all verdicts pass, 1 some verdict fails, 2 document or I/O error, 3 invalid arguments
    :rtype: int
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 3
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except EngineException as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e.detail}", file=sys.stderr)
        return e.status_code


if __name__ == "__main__":
    sys.exit(main())

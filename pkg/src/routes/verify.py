import argparse
import logging
from pathlib import Path

from src.confg.config import settings
from src.duality.relations import MDSAlgebra
from src.duality.space import DSSpace
from src.repository import documents as repos_documents
from src.schemas import FuzzReport, VerificationReport
from src.services import verifier
from src.services.verifier import SUITES

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    """
    Add the ``verify``, ``fuzz`` and ``catalog`` commands

    :param subparsers: the sub-command table of the main parser
    :type subparsers: argparse._SubParsersAction
    :return: None
    """
    parser = subparsers.add_parser("verify", help="check theorem suites on algebra, space or relation documents")
    parser.add_argument("paths", nargs="+", type=Path)
    parser.add_argument("--suite", default="all", help=f"one of all, {', '.join(SUITES)}")
    parser.add_argument("--format", choices=("text", "json"), default=None)
    parser.add_argument("--timing", action="store_true", default=None)
    parser.set_defaults(handler=verify)

    parser = subparsers.add_parser("fuzz", help="verify a seeded stream of random instances")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--count", type=int, default=None)
    parser.add_argument("--max-size", dest="max_size", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out", type=Path, default=None, help="directory for shrunk counterexamples")
    parser.add_argument("--format", choices=("text", "json"), default=None)
    parser.add_argument("--timing", action="store_true", default=None)
    parser.set_defaults(handler=fuzz)

    parser = subparsers.add_parser("catalog", help="verify every small distributive semilattice with random operators")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--operators", type=int, default=40, help="random operators per semilattice")
    parser.add_argument("--max-size", dest="max_size", type=int, default=6)
    parser.add_argument("--suite", default="representation", help=f"one of all, {', '.join(SUITES)}")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out", type=Path, default=None, help="directory for failing instances")
    parser.add_argument("--format", choices=("text", "json"), default=None)
    parser.add_argument("--timing", action="store_true", default=None)
    parser.set_defaults(handler=catalog)


def verify_path(path: Path, suite: str, timing: bool | None = None) -> VerificationReport:
    """
    Verify one document with the suite matching its kind

    :param path: the document file
    :type path: Path
    :param suite: suite name or ``all``
    :type suite: str
    :param timing: record wall-clock time
    :type timing: bool | None
    :return: the report, with the document name as instance id
    :rtype: VerificationReport
    """
    doc, instance = repos_documents.load_instance(path)
    if isinstance(instance, MDSAlgebra):
        return verifier.verify_algebra(instance, suite, doc.name, timing)
    if isinstance(instance, DSSpace):
        return verifier.verify_space(instance, suite, doc.name, timing)
    return verifier.verify_relation(instance, suite, doc.name, timing)


def verify(args: argparse.Namespace) -> int:
    """
    Print one report per document

    :param args: parsed ``paths``, ``suite``, ``format`` and ``timing``
    :type args: argparse.Namespace
    :return: 0 when every verdict passes, 1 otherwise
    :rtype: int
    """
    fmt = args.format or settings.report_format
    # unknown suites fail before any file is read
    verifier.registry.select("algebra", args.suite)
    reports = [verify_path(path, args.suite, args.timing) for path in args.paths]
    for report in reports:
        print(report.json(indent=2, exclude_none=True) if fmt == "json" else verifier.render_text(report))
    return 0 if all(report.passed for report in reports) else 1


def _report_batch(report: FuzzReport, out: Path | None, fmt: str) -> int:
    if out is not None:
        for doc in report.counterexamples:
            saved = repos_documents.save(out / f"{doc.name}.{'json' if fmt == 'json' else 'txt'}", doc, fmt)
            logger.info("counterexample written to %s", saved)
    print(report.json(indent=2, exclude_none=True) if fmt == "json" else verifier.render_fuzz_text(report))
    return 0 if report.passed else 1


def fuzz(args: argparse.Namespace) -> int:
    fmt = args.format or settings.report_format
    report = verifier.fuzz(args.seed, args.count, args.max_size, args.workers, args.timing)
    return _report_batch(report, args.out, fmt)


def catalog(args: argparse.Namespace) -> int:
    """
    Sweep the catalog of semilattices up to ``--max-size`` elements

    :param args: parsed ``seed``, ``operators``, ``max_size``, ``suite``, ``workers``, ``out``, ``format`` and ``timing``
    :type args: argparse.Namespace
    :return: 0 when every instance passes, 1 otherwise
    :rtype: int
    """
    fmt = args.format or settings.report_format
    report = verifier.sweep_catalog(args.seed, args.operators, args.max_size, args.suite, args.workers, args.timing)
    return _report_batch(report, args.out, fmt)

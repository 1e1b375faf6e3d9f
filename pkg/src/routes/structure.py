import argparse
from pathlib import Path

from src.confg.config import settings
from src.core.bitset import members
from src.core.semilattice import MeetSemilattice, filters, order_ideals, irreducible_filters, is_distributive
from src.duality import axioms
from src.duality.relations import MDSAlgebra, relation_from_algebra_S
from src.errors import DocumentError
from src.repository import documents as repos_documents
from src.schemas import AlgebraDocument, AnalysisReport


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("dualize", help="print the dual space of an algebra with its relation R_m")
    parser.add_argument("path", type=Path)
    parser.add_argument("--format", choices=("text", "json"), default=None)
    parser.set_defaults(handler=dualize)

    parser = subparsers.add_parser("analyze", help="print filters, ideals and irreducible filters of an algebra")
    parser.add_argument("path", type=Path)
    parser.add_argument("--format", choices=("text", "json"), default=None)
    parser.set_defaults(handler=analyze)


def _algebra_document(path: Path) -> AlgebraDocument:
    doc = repos_documents.load(path)
    if not isinstance(doc, AlgebraDocument):
        raise DocumentError(f"{path}: expected an algebra document")
    return doc


def dualize(args: argparse.Namespace) -> int:
    """
    Print ``X(A)`` and ``R_m`` as a relation document, ready to be verified again

    :param args: parsed ``path`` and ``format``
    :type args: argparse.Namespace
    :return: 0
    :rtype: int
    """
    doc = _algebra_document(args.path)
    M = repos_documents.to_algebra(doc)
    dual = repos_documents.from_relation(relation_from_algebra_S(M), name=f"{doc.name}-dual")
    fmt = args.format or settings.report_format
    print(repos_documents.serialize_json(dual) if fmt == "json" else repos_documents.serialize_text(dual), end="")
    return 0


def analysis(doc: AlgebraDocument) -> AnalysisReport:
    """
    Structure of an algebra document; non-distributive semilattices are reported with their witness

    :param doc: the document
    :type doc: AlgebraDocument
    :return: the analysis
    :rtype: AnalysisReport
    """
    A: MeetSemilattice = repos_documents.to_semilattice(doc)
    verdict = is_distributive(A)

    def named(family) -> list[list[str]]:
        return [[A.names[a] for a in members(S)] for S in family]

    report = AnalysisReport(
        name=doc.name,
        size=A.size,
        distributive=verdict.holds,
        witness=None if verdict.holds else [A.names[i] for i in verdict.witness],
        filters=named(filters(A)),
        ideals=named(order_ideals(A)),
        irreducible_filters=named(irreducible_filters(A)),
    )
    if verdict.holds:
        M: MDSAlgebra = repos_documents.to_algebra(doc)
        flags = {v.name: v.algebraic for v in axioms.axiom_report(M)}
        flags["modal"] = axioms.is_modal(M)
        flags["boolean"] = axioms.is_boolean(A)
        report.axioms = flags
    return report


def _render(report: AnalysisReport) -> str:
    def sets(family: list[list[str]]) -> str:
        return " ".join("{" + ",".join(S) + "}" for S in family)

    lines = [f"{report.name}: {report.size} elements"]
    if report.distributive:
        lines.append("distributive: yes")
    else:
        lines.append(f"distributive: no, witness ({', '.join(report.witness)})")
    lines += [f"filters: {sets(report.filters)}",
              f"ideals: {sets(report.ideals)}",
              f"irreducible filters: {sets(report.irreducible_filters)}"]
    if report.axioms is not None:
        lines += [f"{name}: {'yes' if holds else 'no'}" for name, holds in report.axioms.items()]
    return "\n".join(lines)


def analyze(args: argparse.Namespace) -> int:
    report = analysis(_algebra_document(args.path))
    fmt = args.format or settings.report_format
    print(report.json(indent=2, exclude_none=True) if fmt == "json" else _render(report))
    return 0

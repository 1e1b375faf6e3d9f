import argparse
from pathlib import Path

from src.duality.relations import MDSAlgebra, relation_from_algebra_S
from src.duality.space import DSSpace, d_semilattice
from src.errors import DocumentError
from src.repository import documents as repos_documents
from src.services import export as export_service
from src.services.export import TARGETS


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("export-dot", help="write a Graphviz DOT graph of a document")
    parser.add_argument("path", type=Path)
    parser.add_argument("--what", default="hasse", help=f"one of {', '.join(TARGETS)}")
    parser.set_defaults(handler=export_dot)


def dot_text(path: Path, what: str) -> str:
    """
    DOT text for a document.

    ``hasse`` draws the algebra (``D(X)`` for spaces and relations), ``dual`` the specialization order
    of the space, ``relation`` the point/set graph of ``R_m`` or of the relation itself.

    :param path: the document file
    :type path: Path
    :param what: one of ``hasse``, ``dual``, ``relation``
    :type what: str
    :return: the graph
    :rtype: str
    """
    what = export_service.check_target(what)
    doc, instance = repos_documents.load_instance(path)
    if isinstance(instance, MDSAlgebra):
        A, X = instance.algebra, instance.dual.space
        relation = relation_from_algebra_S(instance) if what == "relation" else None
    elif isinstance(instance, DSSpace):
        X = instance
        A = d_semilattice(X)
        relation = None
    else:
        X = instance.space
        A = d_semilattice(X)
        relation = instance
    if what == "hasse":
        return export_service.order_dot(doc.name, A.order, A.names)
    if what == "dual":
        return export_service.order_dot(doc.name, X.order, X.labels)
    if relation is None:
        raise DocumentError(f"{doc.name}: a space document carries no relation")
    return export_service.relation_dot(doc.name, relation)


def export_dot(args: argparse.Namespace) -> int:
    print(dot_text(args.path, args.what), end="")
    return 0

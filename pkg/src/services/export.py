import logging
from pathlib import Path

import networkx as nx
from jinja2 import Environment, FileSystemLoader

from src.core.order import Poset
from src.duality.relations import Multirelation
from src.errors import UsageError

logger = logging.getLogger(__name__)

TARGETS = ("hasse", "dual", "relation")

environment = Environment(
    loader=FileSystemLoader(Path(__file__).parent / 'templates'),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def _quote(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def cover_edges(order: Poset) -> list[tuple[int, int]]:
    """
    Edges of the Hasse diagram, as the transitive reduction of the strict order

    :param order: the poset
    :type order: Poset
    :return: cover pairs ``(lower, upper)`` sorted by index
    :rtype: list[tuple[int, int]]
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(order.size))
    graph.add_edges_from((x, y) for x in range(order.size) for y in range(order.size) if order.lt(x, y))
    return sorted(nx.transitive_reduction(graph).edges())


def order_dot(name: str, order: Poset, labels: tuple[str, ...]) -> str:
    nodes = [{"id": i, "label": _quote(labels[i])} for i in range(order.size)]
    return environment.get_template("order.dot.j2").render(name=_quote(name), nodes=nodes, edges=cover_edges(order))


def relation_dot(name: str, rel: Multirelation) -> str:
    """
    Bipartite graph from the points to the sets that may be second components, with an edge per pair
    """
    X = rel.space
    sets = list(rel.allowed())
    index = {Y: i for i, Y in enumerate(sets)}
    points = [{"id": x, "label": _quote(X.labels[x])} for x in range(X.size)]
    boxes = [{"id": i, "label": _quote(X.label(Y))} for i, Y in enumerate(sets)]
    edges = [(x, index[Y]) for x, Y in rel.pairs()]
    return environment.get_template("relation.dot.j2").render(name=_quote(name), points=points, sets=boxes,
                                                              edges=edges)


def check_target(what: str) -> str:
    if what not in TARGETS:
        raise UsageError(f"unknown export target {what!r}; expected one of {', '.join(TARGETS)}")
    return what

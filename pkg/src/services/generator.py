import itertools
import logging
import random
from typing import Callable, Iterator

import networkx as nx

from src.core.bitset import members, mask_of, is_subset
from src.core.order import Poset, all_upsets
from src.core.semilattice import MeetSemilattice, Homomorphism, is_distributive
from src.duality.axioms import BooleanMDS
from src.duality.relations import MDSAlgebra, NeighborhoodFrame

logger = logging.getLogger(__name__)


def _poset_from_dag(size: int, edges: list[tuple[int, int]]) -> Poset:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from(edges)
    closure = nx.transitive_closure_dag(graph)
    ups = tuple(mask_of([x, *closure.successors(x)]) for x in range(size))
    return Poset(size, ups)


def _strict_graph(P: Poset) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(P.size))
    graph.add_edges_from((x, y) for x in range(P.size) for y in members(P.ups[x]) if x != y)
    return graph


def upset_algebra(P: Poset) -> MeetSemilattice:
    """
    ``⟨Up(P), ∩, P⟩``; every finite distributive semilattice is isomorphic to one of these

    :param P: the poset
    :type P: Poset
    :return: the semilattice of upsets, elements in increasing mask order
    :rtype: MeetSemilattice
    """
    family = list(all_upsets(P))
    index = {U: i for i, U in enumerate(family)}
    table = tuple(tuple(index[U & V] for V in family) for U in family)
    names = tuple("{" + ",".join(f"p{x}" for x in members(U)) + "}" for U in family)
    return MeetSemilattice(table, index[P.universe], names)


def catalog(max_size: int) -> list[MeetSemilattice]:
    """
    All distributive semilattices with at most ``max_size`` elements, one per isomorphism type.

    Posets are grown by adding a new maximal point above one of the downsets of a smaller poset;
    a poset whose upset lattice is already too large is not extended, since adding points only
    adds upsets.

    :param max_size: largest carrier size
    :type max_size: int
    :return: the upset lattices, smallest first
    :rtype: list[MeetSemilattice]
    """
    if max_size < 1:
        return []
    level = [Poset(0, ())]
    found = [upset_algebra(level[0])]
    while level:
        grown: list[Poset] = []
        graphs: list[nx.DiGraph] = []
        for P in level:
            new = 1 << P.size
            for D in _downsets(P):
                ups = tuple(P.ups[x] | new if D >> x & 1 else P.ups[x] for x in range(P.size))
                Q = Poset(P.size + 1, ups + (new,))
                if len(all_upsets(Q)) > max_size:
                    continue
                graph = _strict_graph(Q)
                if any(nx.is_isomorphic(graph, other) for other in graphs):
                    continue
                grown.append(Q)
                graphs.append(graph)
        found.extend(upset_algebra(Q) for Q in grown)
        logger.debug("catalog: %d posets on %d points", len(grown), grown[0].size if grown else 0)
        level = grown
    found.sort(key=lambda A: A.size)
    return found


def _downsets(P: Poset) -> list[int]:
    return [P.universe & ~U for U in all_upsets(P)]


def random_poset(rng: random.Random, size: int, density: float = 0.35) -> Poset:
    edges = [(i, j) for i in range(size) for j in range(i + 1, size) if rng.random() < density]
    return _poset_from_dag(size, edges)


def random_semilattice(rng: random.Random, max_size: int, attempts: int = 200) -> MeetSemilattice:
    """
    Sample a distributive semilattice with at most ``max_size`` elements.

    A random poset's upset lattice is thinned to a random meet-closed subfamily containing the top;
    candidates that are too large or not distributive are rejected.

    :param rng: source of randomness
    :type rng: random.Random
    :param max_size: largest carrier size
    :type max_size: int
    :param attempts: rejection budget before falling back to a chain
    :type attempts: int
    :return: the sampled semilattice
    :rtype: MeetSemilattice
    """
    for _ in range(attempts):
        P = random_poset(rng, rng.randrange(0, max(max_size, 1)))
        upsets = list(all_upsets(P))
        chosen = {P.universe} | {U for U in upsets if rng.random() < 0.5}
        closed = set(chosen)
        changed = True
        while changed:
            changed = False
            for U in list(closed):
                for V in list(closed):
                    if U & V not in closed:
                        closed.add(U & V)
                        changed = True
        if len(closed) > max_size:
            continue
        family = sorted(closed)
        index = {U: i for i, U in enumerate(family)}
        table = tuple(tuple(index[U & V] for V in family) for U in family)
        names = tuple("{" + ",".join(f"p{x}" for x in members(U)) + "}" for U in family)
        A = MeetSemilattice(table, index[P.universe], names)
        if is_distributive(A).holds:
            return A
    logger.warning("rejection sampling exhausted; returning a chain")
    return upset_algebra(Poset.chain(max(max_size, 1) - 1))


def random_operator(rng: random.Random, A: MeetSemilattice) -> tuple[int, ...]:
    """
    A random order preserving map, built along a linear extension so each image sits above
    the images of everything below it
    """
    m = [0] * A.size
    for a in A.order.linear_extension():
        allowed = A.universe
        for b in members(A.order.downs[a]):
            if b != a:
                allowed &= A.order.ups[m[b]]
        m[a] = rng.choice(list(members(allowed)))
    return tuple(m)


def random_mds(rng: random.Random, max_size: int) -> MDSAlgebra:
    A = random_semilattice(rng, max_size)
    return MDSAlgebra(A, random_operator(rng, A))


def random_homomorphism(rng: random.Random, A: MeetSemilattice, B: MeetSemilattice) -> Homomorphism:
    """
    A random homomorphism ``A → B`` found by backtracking from the top down; sending
    everything to the top always succeeds
    """
    order = list(reversed(A.order.linear_extension()))
    h: dict[int, int] = {}

    def consistent() -> bool:
        for x in h:
            for y in h:
                z = A.meet[x][y]
                if z in h and h[z] != B.meet[h[x]][h[y]]:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        candidates = [B.top] if a == A.top else rng.sample(range(B.size), B.size)
        for b in candidates:
            h[a] = b
            if consistent() and extend(i + 1):
                return True
            del h[a]
        return False

    extend(0)
    return Homomorphism(A, B, tuple(h[a] for a in range(A.size)))


def random_frame(rng: random.Random, size: int, kind: str) -> NeighborhoodFrame:
    """
    A random neighborhood frame: sets of points attached to the minimal points and pushed along the order,
    so the relation shrinks (``S``) or grows (``C``) going up
    """
    P = random_poset(rng, size)
    subsets = list(range(1 << size))
    seeds = [frozenset(rng.sample(subsets, min(len(subsets), rng.randrange(0, 3)))) for _ in range(size)]
    image = []
    for x in range(size):
        if kind == "S":
            row = frozenset().union(*(seeds[y] for y in members(P.ups[x])))
        else:
            row = frozenset().union(*(seeds[y] for y in members(P.downs[x])))
        image.append(row)
    return NeighborhoodFrame(P, tuple(image), kind)


def subalgebra(M: MDSAlgebra, keep: int) -> MDSAlgebra | None:
    """
    The least subset containing ``keep`` and the top that is closed under meets and ``m``, or ``None``
    when that is the whole algebra
    """
    A = M.algebra
    closed = keep | (1 << A.top)
    changed = True
    while changed:
        changed = False
        for a in list(members(closed)):
            extra = 1 << M.m[a]
            for b in members(closed):
                extra |= 1 << A.meet[a][b]
            if not is_subset(extra, closed):
                closed |= extra
                changed = True
    if closed == A.universe:
        return None
    elements = list(members(closed))
    index = {a: i for i, a in enumerate(elements)}
    table = tuple(tuple(index[A.meet[a][b]] for b in elements) for a in elements)
    sub = MeetSemilattice(table, index[A.top], tuple(A.names[a] for a in elements))
    if not is_distributive(sub).holds:
        return None
    return MDSAlgebra(sub, tuple(index[M.m[a]] for a in elements), kind=M.kind)


def shrink(M: MDSAlgebra, fails: Callable[[MDSAlgebra], bool]) -> MDSAlgebra:
    """
    Delete elements one at a time, closing the rest under meets and ``m``, while the instance keeps failing

    :param M: a failing instance
    :type M: MDSAlgebra
    :param fails: the failure predicate
    :type fails: Callable[[MDSAlgebra], bool]
    :return: a failing instance from which no single deletion keeps the failure
    :rtype: MDSAlgebra
    """
    current = M
    progress = True
    while progress:
        progress = False
        for a in range(current.algebra.size):
            if a == current.algebra.top:
                continue
            candidate = subalgebra(current, current.algebra.universe & ~(1 << a))
            if candidate is not None and fails(candidate):
                logger.info("shrunk a counterexample from %d to %d elements",
                            current.algebra.size, candidate.algebra.size)
                current = candidate
                progress = True
                break
    return current


def instance_stream(seed: int, count: int, max_size: int) -> Iterator[tuple[str, MDSAlgebra]]:
    """
    The deterministic fuzz instances for a seed, with their ids
    """
    rng = random.Random(seed)
    for i in range(count):
        yield f"fuzz-{seed}-{i:04d}", random_mds(rng, max_size)


def catalog_stream(seed: int, operators: int, max_size: int) -> Iterator[tuple[str, MDSAlgebra]]:
    """
    Every catalog semilattice with at most ``max_size`` elements, each paired with ``operators`` random operators

    :param seed: operator seed
    :type seed: int
    :param operators: operators drawn per semilattice
    :type operators: int
    :param max_size: largest carrier size
    :type max_size: int
    :return: ids ``catalog-<semilattice>-<operator>`` with their algebras
    :rtype: Iterator[tuple[str, MDSAlgebra]]
    """
    rng = random.Random(seed)
    for i, A in enumerate(catalog(max_size)):
        for j in range(operators):
            yield f"catalog-{i:02d}-{j:03d}", MDSAlgebra(A, random_operator(rng, A))


def random_box(rng: random.Random, atoms: int) -> BooleanMDS:
    powerset = BooleanMDS(atoms, tuple(range(1 << atoms)))
    return BooleanMDS(atoms, random_operator(rng, powerset.algebra))


def monotone_boxes(atoms: int) -> Iterator[BooleanMDS]:
    """
    Every monotone box on the powerset of ``atoms`` points; tables are enumerated outright, so keep ``atoms`` at 2 or less
    """
    size = 1 << atoms
    for box in itertools.product(range(size), repeat=size):
        if all(is_subset(box[u], box[v]) for u in range(size) for v in range(size) if is_subset(u, v)):
            yield BooleanMDS(atoms, box)

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

from src.confg.config import settings
from src.core.bitset import members, mask_of, is_subset, full_mask, singleton
from src.core.order import Poset, SubsetFamily, up_closure, down_closure, is_directed
from src.errors import InvalidStructure, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeetSemilattice:
    """
    Finite meet-semilattice with greatest element.

    Elements are the indices ``0..size-1``; ``names`` only label them for documents and reports.
    The semilattice laws are checked on construction.
    """
    meet: tuple[tuple[int, ...], ...]
    top: int
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.meet)
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(n)))
        if len(self.names) != n:
            raise InvalidStructure(f"{len(self.names)} names given for {n} elements")
        if n == 0:
            raise InvalidStructure("a semilattice needs at least its top element")
        if n > settings.max_poset_size:
            raise InvalidStructure(f"semilattice of size {n} exceeds the cap of {settings.max_poset_size}")
        if not 0 <= self.top < n:
            raise InvalidStructure(f"top index {self.top} is out of range")
        for a, row in enumerate(self.meet):
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise InvalidStructure(f"meet row of {self.names[a]} is not a total row over {n} elements")
        label = self.names
        for a in range(n):
            if self.meet[a][a] != a:
                raise InvalidStructure(f"meet is not idempotent: {label[a]}∧{label[a]}={label[self.meet[a][a]]}")
            if self.meet[a][self.top] != a:
                raise InvalidStructure(f"{label[self.top]} is not a top: {label[a]}∧{label[self.top]}"
                                       f"={label[self.meet[a][self.top]]}")
            for b in range(n):
                if self.meet[a][b] != self.meet[b][a]:
                    raise InvalidStructure(f"meet is not commutative: {label[a]}∧{label[b]}={label[self.meet[a][b]]} "
                                           f"but {label[b]}∧{label[a]}={label[self.meet[b][a]]}")
                for c in range(n):
                    left = self.meet[self.meet[a][b]][c]
                    right = self.meet[a][self.meet[b][c]]
                    if left != right:
                        raise InvalidStructure(f"meet is not associative on ({label[a]}, {label[b]}, {label[c]})")

    @classmethod
    def from_order(cls, order: Poset, names: Sequence[str] = ()) -> "MeetSemilattice":
        """
        Build the semilattice of a finite poset in which every pair has a greatest lower bound

        :param order: the order, which must have a greatest element and binary infima
        :type order: Poset
        :param names: optional element labels
        :type names: Sequence[str]
        :return: the semilattice whose natural order is ``order``
        :rtype: MeetSemilattice
        """
        n = order.size
        tops = [i for i in range(n) if order.ups[i] == singleton(i) and order.downs[i] == full_mask(n)]
        if not tops:
            raise InvalidStructure("order has no greatest element")
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                lower = order.downs[a] & order.downs[b]
                greatest = [x for x in members(lower) if is_subset(lower, order.downs[x])]
                if not greatest:
                    raise InvalidStructure(f"elements {a} and {b} have no meet")
                row.append(greatest[0])
            table.append(tuple(row))
        return cls(tuple(table), tops[0], tuple(names))

    @property
    def size(self) -> int:
        return len(self.meet)

    @property
    def universe(self) -> int:
        return full_mask(self.size)

    @cached_property
    def order(self) -> Poset:
        return natural_order(self)

    @cached_property
    def bottom(self) -> int:
        return self.meet_of(self.universe)

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    def meet_of(self, elems: int) -> int:
        # the empty meet is the top
        result = self.top
        for a in members(elems):
            result = self.meet[result][a]
        return result

    def join(self, a: int, b: int) -> int:
        return self.meet_of(self.order.ups[a] & self.order.ups[b])

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidStructure(f"unknown element {name!r}")

    def label(self, elems: int) -> str:
        return "{" + ",".join(self.names[a] for a in members(elems)) + "}"


class DistributivityVerdict(NamedTuple):
    holds: bool
    witness: tuple[int, int, int] | None = None


def natural_order(A: MeetSemilattice) -> Poset:
    """
    The order ``a <= b`` iff ``a∧b = a``

    :param A: the semilattice
    :type A: MeetSemilattice
    :return: the induced poset, with the top as greatest element
    :rtype: Poset
    """
    return Poset.from_relation(A.size, A.leq)


def is_distributive(A: MeetSemilattice) -> DistributivityVerdict:
    """
    Check that ``a∧b <= c`` always splits as ``c = a1∧b1`` with ``a <= a1`` and ``b <= b1``.

    Triples are scanned in index order, so the witness is the first failing ``(a, b, c)``.

    :param A: the semilattice
    :type A: MeetSemilattice
    :return: verdict with the offending triple on failure
    :rtype: DistributivityVerdict
    """
    ups = A.order.ups
    for a in range(A.size):
        for b in range(A.size):
            for c in members(ups[A.meet[a][b]]):
                if A.leq(a, c) or A.leq(b, c):
                    continue
                if not any(A.meet[a1][b1] == c for a1 in members(ups[a]) for b1 in members(ups[b])):
                    return DistributivityVerdict(False, (a, b, c))
    return DistributivityVerdict(True)


def is_filter(A: MeetSemilattice, F: int) -> bool:
    if not F >> A.top & 1 or up_closure(A.order, F) != F:
        return False
    return all(F >> A.meet[a][b] & 1 for a in members(F) for b in members(F))


def is_order_ideal(A: MeetSemilattice, I: int) -> bool:
    return down_closure(A.order, I) == I and is_directed(A.order, I)


def filters(A: MeetSemilattice) -> SubsetFamily:
    """
    ``Fi(A)``, the improper filter ``A`` included.

    Every filter of a finite semilattice is principal, so the family is ``{[a) : a in A}``.
    """
    found = SubsetFamily(A.order, tuple(A.order.ups))
    logger.debug("%d filters over %d elements", len(found), A.size)
    return found


def order_ideals(A: MeetSemilattice, include_empty: bool | None = None) -> SubsetFamily:
    """
    ``Id(A)``: the principal downsets, plus the empty ideal when admitted

    :param A: the semilattice
    :type A: MeetSemilattice
    :param include_empty: list the empty ideal; defaults to ``settings.admit_empty_ideal``
    :type include_empty: bool | None
    :return: the family of order ideals
    :rtype: SubsetFamily
    """
    if include_empty is None:
        include_empty = settings.admit_empty_ideal
    found = list(A.order.downs)
    if include_empty:
        found.append(0)
    return SubsetFamily(A.order, tuple(found))


def filter_generated(A: MeetSemilattice, X: int) -> int:
    """
    ``F(X)``, the least filter containing ``X``; ``F(∅) = {1}``
    """
    return A.order.ups[A.meet_of(X)]


def _is_irreducible(A: MeetSemilattice, F: int, family: SubsetFamily) -> bool:
    if F == A.universe:
        return False
    for F1 in family:
        for F2 in family:
            if F1 & F2 == F and F1 != F and F2 != F:
                return False
    return True


def irreducible_filters(A: MeetSemilattice) -> SubsetFamily:
    """
    ``X(A)``: proper filters that are not the intersection of two filters both different from them

    :param A: the semilattice
    :type A: MeetSemilattice
    :return: the irreducible filters, sorted by mask value
    :rtype: SubsetFamily
    """
    family = filters(A)
    found = tuple(F for F in family if _is_irreducible(A, F, family))
    logger.debug("%d irreducible filters among %d filters", len(found), len(family))
    return SubsetFamily(A.order, found)


class IrreducibilityReport(NamedTuple):
    irreducible: bool
    separates: bool
    complement_is_ideal: bool

    @property
    def agree(self) -> bool:
        return len(set(self)) == 1


def irreducibility_equivalents(A: MeetSemilattice, F: int) -> IrreducibilityReport:
    """
    Evaluate the three equivalent characterizations of an irreducible filter independently:
    the intersection test, the ``a, b ∉ F`` separation condition, and ``F^c`` being an order ideal.

    :param A: a distributive semilattice
    :type A: MeetSemilattice
    :param F: a proper filter
    :type F: int
    :return: the three verdicts
    :rtype: IrreducibilityReport
    """
    if not is_distributive(A).holds:
        raise PreconditionError("irreducibility equivalences need a distributive semilattice")
    if not is_filter(A, F) or F == A.universe:
        raise PreconditionError(f"{A.label(F)} is not a proper filter")
    outside = A.universe & ~F
    separates = True
    for a in members(outside):
        for b in members(outside):
            if not any(A.leq(A.meet[a][f], c) and A.leq(A.meet[b][f], c)
                       for c in members(outside) for f in members(F)):
                separates = False
                break
        if not separates:
            break
    return IrreducibilityReport(
        _is_irreducible(A, F, filters(A)),
        separates,
        is_order_ideal(A, outside),
    )


def separation_witness(A: MeetSemilattice, F: int, I: int) -> int:
    """
    Find an irreducible filter containing ``F`` and missing ``I``; the least by mask value wins

    :param A: the semilattice
    :type A: MeetSemilattice
    :param F: a filter
    :type F: int
    :param I: an order ideal disjoint from ``F``
    :type I: int
    :return: the witness
    :rtype: int
    """
    if F & I:
        raise PreconditionError(f"filter {A.label(F)} meets ideal {A.label(I)}")
    for P in irreducible_filters(A):
        if is_subset(F, P) and not P & I:
            return P
    raise PreconditionError(f"no irreducible filter separates {A.label(F)} from {A.label(I)}")


@dataclass(frozen=True)
class Homomorphism:
    source: MeetSemilattice
    target: MeetSemilattice
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.size:
            raise InvalidStructure(f"map has {len(self.mapping)} entries for a source of size {self.source.size}")
        if any(not 0 <= v < self.target.size for v in self.mapping):
            raise InvalidStructure("map sends an element outside the target")

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def preimage(self, Q: int) -> int:
        return mask_of(a for a in range(self.source.size) if Q >> self.mapping[a] & 1)

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """
        ``other ∘ self``
        """
        if other.source != self.target:
            raise InvalidStructure("maps are not composable")
        return Homomorphism(self.source, other.target, tuple(other.mapping[v] for v in self.mapping))

    @classmethod
    def identity(cls, A: MeetSemilattice) -> "Homomorphism":
        return cls(A, A, tuple(range(A.size)))


def is_homomorphism(h: Homomorphism) -> bool:
    A, B = h.source, h.target
    if h(A.top) != B.top:
        return False
    return all(h(A.meet[a][b]) == B.meet[h(a)][h(b)] for a in range(A.size) for b in range(A.size))


def is_mds_homomorphism(h: Homomorphism, m_src: Sequence[int], m_tgt: Sequence[int]) -> bool:
    """
    A semilattice homomorphism with ``h(ma) = m h(a)`` for every ``a``

    :param h: the map
    :type h: Homomorphism
    :param m_src: operator table of the source
    :type m_src: Sequence[int]
    :param m_tgt: operator table of the target
    :type m_tgt: Sequence[int]
    :return: whether both the semilattice equations and the commutation hold
    :rtype: bool
    """
    if len(m_src) != h.source.size or len(m_tgt) != h.target.size:
        raise InvalidStructure("operator tables do not match the carriers")
    return is_homomorphism(h) and all(h(m_src[a]) == m_tgt[h(a)] for a in range(h.source.size))

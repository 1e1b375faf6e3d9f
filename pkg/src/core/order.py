import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from src.confg.config import settings
from src.core.bitset import full_mask, members, is_subset, all_masks, within
from src.errors import InvalidStructure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Poset:
    """
    Finite partial order on the indices ``0..size-1``.

    ``ups[i]`` is the mask of all ``j`` with ``i <= j``. The order axioms are checked on construction.
    """
    size: int
    ups: tuple[int, ...]

    def __post_init__(self):
        if self.size > settings.max_poset_size:
            raise InvalidStructure(f"poset of size {self.size} exceeds the cap of {settings.max_poset_size}")
        if len(self.ups) != self.size:
            raise InvalidStructure(f"expected {self.size} rows, got {len(self.ups)}")
        for i, row in enumerate(self.ups):
            if not within(row, self.size):
                raise InvalidStructure(f"row {i} mentions an element outside 0..{self.size - 1}")
            if not row >> i & 1:
                raise InvalidStructure(f"order is not reflexive at {i}")
        for i in range(self.size):
            for j in members(self.ups[i]):
                if i != j and self.ups[j] >> i & 1:
                    raise InvalidStructure(f"order is not antisymmetric: {i} <= {j} <= {i}")
                if not is_subset(self.ups[j], self.ups[i]):
                    raise InvalidStructure(f"order is not transitive through {i} <= {j}")

    @classmethod
    def from_relation(cls, size: int, leq: Callable[[int, int], bool]) -> "Poset":
        """
        Build a poset from a comparison predicate

        :param size: number of elements
        :type size: int
        :param leq: predicate ``leq(i, j)`` meaning ``i <= j``
        :type leq: Callable[[int, int], bool]
        :return: the checked poset
        :rtype: Poset
        """
        ups = tuple(sum(1 << j for j in range(size) if leq(i, j)) for i in range(size))
        return cls(size, ups)

    @classmethod
    def chain(cls, size: int) -> "Poset":
        return cls.from_relation(size, lambda i, j: i <= j)

    @classmethod
    def antichain(cls, size: int) -> "Poset":
        return cls.from_relation(size, lambda i, j: i == j)

    @cached_property
    def downs(self) -> tuple[int, ...]:
        return tuple(sum(1 << i for i in range(self.size) if self.ups[i] >> j & 1) for j in range(self.size))

    @property
    def universe(self) -> int:
        return full_mask(self.size)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.ups[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def covers(self) -> list[tuple[int, int]]:
        """
        Pairs ``(i, j)`` with ``i < j`` and nothing strictly between
        """
        pairs = []
        for i in range(self.size):
            for j in members(self.ups[i]):
                if i == j:
                    continue
                between = self.ups[i] & self.downs[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    pairs.append((i, j))
        return pairs

    def linear_extension(self) -> list[int]:
        # fewer elements below means earlier; ties by index
        return sorted(range(self.size), key=lambda i: (bin(self.downs[i]).count("1"), i))


@dataclass(frozen=True)
class SubsetFamily:
    """
    A family of subsets of a poset's elements, kept sorted by mask value.
    """
    universe: Poset
    members: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for mask in self.members:
            if not within(mask, self.universe.size):
                raise InvalidStructure(f"family member {mask:#b} is not a subset of the universe")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __contains__(self, mask: int) -> bool:
        return mask in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.members)

    def index(self, mask: int) -> int:
        return self.members.index(mask)

    def is_closed_under_intersection(self) -> bool:
        return all(a & b in self for a in self.members for b in self.members)

    def is_closed_under_union(self) -> bool:
        return all(a | b in self for a in self.members for b in self.members)


def _check_range(P: Poset, Y: int):
    if not within(Y, P.size):
        raise InvalidStructure(f"subset {Y:#b} is outside the index range of a poset of size {P.size}")


def up_closure(P: Poset, Y: int) -> int:
    """
    Least upset containing ``Y``, i.e. ``[Y)``

    :param P: the poset
    :type P: Poset
    :param Y: subset mask
    :type Y: int
    :return: mask of ``[Y)``
    :rtype: int
    """
    _check_range(P, Y)
    result = 0
    for y in members(Y):
        result |= P.ups[y]
    return result


def down_closure(P: Poset, Y: int) -> int:
    """
    Least downset containing ``Y``, i.e. ``(Y]``

    :param P: the poset
    :type P: Poset
    :param Y: subset mask
    :type Y: int
    :return: mask of ``(Y]``
    :rtype: int
    """
    _check_range(P, Y)
    result = 0
    for y in members(Y):
        result |= P.downs[y]
    return result


def is_upset(P: Poset, Y: int) -> bool:
    return up_closure(P, Y) == Y


def is_downset(P: Poset, Y: int) -> bool:
    return down_closure(P, Y) == Y


def is_directed(P: Poset, Y: int) -> bool:
    """
    Every pair of ``Y`` has an upper bound inside ``Y``. The empty set is directed.
    """
    _check_range(P, Y)
    elements = list(members(Y))
    return all(Y & P.ups[x] & P.ups[y] for x in elements for y in elements)


def is_dually_directed(P: Poset, Y: int) -> bool:
    """
    Every pair of ``Y`` has a lower bound inside ``Y``. The empty set is dually directed.
    """
    _check_range(P, Y)
    elements = list(members(Y))
    return all(Y & P.downs[x] & P.downs[y] for x in elements for y in elements)


def all_upsets(P: Poset) -> SubsetFamily:
    """
    ``Up(P)``: every subset equal to its own up-closure

    :param P: the poset
    :type P: Poset
    :return: the family of upsets, including the empty set and the universe
    :rtype: SubsetFamily
    """
    found = [Y for Y in all_masks(P.size) if up_closure(P, Y) == Y]
    logger.debug("poset of size %d has %d upsets", P.size, len(found))
    return SubsetFamily(P, tuple(found))


def all_downsets(P: Poset) -> SubsetFamily:
    full = P.universe
    return SubsetFamily(P, tuple(full ^ U for U in all_upsets(P)))


def minimal(P: Poset, Y: int) -> Iterable[int]:
    return [y for y in members(Y) if not (P.downs[y] & Y) & ~(1 << y)]


def maximal(P: Poset, Y: int) -> Iterable[int]:
    return [y for y in members(Y) if not (P.ups[y] & Y) & ~(1 << y)]

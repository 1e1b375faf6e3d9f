import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

from src.core.bitset import full_mask, members, mask_of, is_subset, submasks, within
from src.core.order import Poset, SubsetFamily, is_dually_directed
from src.core.semilattice import (
    MeetSemilattice, irreducible_filters, is_distributive, is_filter, is_order_ideal, filters, order_ideals,
)
from src.errors import InvalidStructure, PreconditionError

logger = logging.getLogger(__name__)

# literal scans over subfamilies of the compact opens stop here
BRUTE_FORCE_FAMILY_CAP = 12


def _union_closure(basis: tuple[int, ...]) -> set[int]:
    opens = {0}
    for B in basis:
        opens |= {O | B for O in opens}
    return opens


def _closures(size: int, opens: set[int]) -> list[int]:
    universe = full_mask(size)
    result = []
    for x in range(size):
        outside = 0
        for O in opens:
            if not O >> x & 1:
                outside |= O
        result.append(universe & ~outside)
    return result


def is_t0(size: int, basis: tuple[int, ...]) -> bool:
    """
    Distinct points have distinct closures
    """
    closures = _closures(size, _union_closure(basis))
    return len(set(closures)) == size


def _is_irreducible_closed(C: int, closed: list[int]) -> bool:
    if not C:
        return False
    for Z in closed:
        if is_subset(C, Z):
            continue
        for W in closed:
            if not is_subset(C, W) and is_subset(C, Z | W):
                return False
    return True


def is_sober(size: int, basis: tuple[int, ...]) -> bool:
    """
    Every irreducible closed set is the closure of exactly one point

    :param size: number of points
    :type size: int
    :param basis: masks of the basic opens
    :type basis: tuple[int, ...]
    :return: whether the generated space is sober
    :rtype: bool
    """
    opens = _union_closure(basis)
    universe = full_mask(size)
    closed = [universe & ~O for O in opens]
    closures = _closures(size, opens)
    for C in closed:
        if _is_irreducible_closed(C, closed) and closures.count(C) != 1:
            return False
    return True


@dataclass(frozen=True)
class DSSpace:
    """
    Finite DS-space given by its points and a basis of (compact) opens.

    The order ``x <= y`` means ``y`` lies in the closure of ``x``; opens are downsets and closed sets upsets of it.
    Construction fails unless the basis generates a sober topology.
    """
    size: int
    basis: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(sorted(set(self.basis))))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i}" for i in range(self.size)))
        if len(self.labels) != self.size:
            raise InvalidStructure(f"{len(self.labels)} labels given for {self.size} points")
        for B in self.basis:
            if not within(B, self.size):
                raise InvalidStructure(f"basic open {B:#b} is not a set of points")
        opens = _union_closure(self.basis)
        if self.universe not in opens:
            raise InvalidStructure("the basis does not cover the space")
        if any(O1 & O2 not in opens for O1 in opens for O2 in opens):
            raise InvalidStructure("the basis does not generate a topology")
        if not is_t0(self.size, self.basis):
            raise InvalidStructure("space is not T0")
        if not is_sober(self.size, self.basis):
            raise InvalidStructure("space is not sober: an irreducible closed set has no generic point")

    @property
    def universe(self) -> int:
        return full_mask(self.size)

    @cached_property
    def order(self) -> Poset:
        return Poset(self.size, tuple(_closures(self.size, _union_closure(self.basis))))

    @cached_property
    def opens(self) -> SubsetFamily:
        return SubsetFamily(self.order, tuple(_union_closure(self.basis)))

    @cached_property
    def closed_sets(self) -> SubsetFamily:
        return SubsetFamily(self.order, tuple(self.universe & ~O for O in self.opens))

    @cached_property
    def C(self) -> SubsetFamily:
        """
        ``C(X)``: the nonempty closed sets
        """
        found = SubsetFamily(self.order, tuple(Y for Y in self.closed_sets if Y))
        logger.debug("space of %d points has %d nonempty closed sets", self.size, len(found))
        return found

    @property
    def K(self) -> SubsetFamily:
        """
        Second components of C-side relations: ``C(X)`` together with the empty set
        """
        return self.closed_sets

    @property
    def D(self) -> SubsetFamily:
        """
        ``D(X)``: complements of compact opens, which in a finite space are all closed sets
        """
        return self.closed_sets

    @cached_property
    def S(self) -> SubsetFamily:
        return special_saturated(self)

    def closure(self, Y: int) -> int:
        result = 0
        for y in members(Y):
            result |= self.order.ups[y]
        return result

    def saturation(self, Y: int) -> int:
        result = 0
        for y in members(Y):
            result |= self.order.downs[y]
        return result

    def label(self, Y: int) -> str:
        return "{" + ",".join(self.labels[x] for x in members(Y)) + "}"


def special_saturated(X: DSSpace) -> SubsetFamily:
    """
    ``S(X)``: intersections of dually directed families of compact opens.

    A nonempty finite dually directed family has a least member, and the empty family gives the whole space,
    so the result is every open together with ``X``.

    :param X: the space
    :type X: DSSpace
    :return: the special basic saturated sets
    :rtype: SubsetFamily
    """
    found = SubsetFamily(X.order, tuple(X.opens) + (X.universe,))
    logger.debug("space of %d points has %d special saturated sets", X.size, len(found))
    return found


def _family_order(family: list[int]) -> Poset:
    return Poset.from_relation(len(family), lambda i, j: is_subset(family[i], family[j]))


def saturated_by_families(X: DSSpace) -> set[int]:
    """
    Intersections of every dually directed subfamily of the compact opens, computed literally
    """
    compact_opens = list(X.opens)
    if len(compact_opens) > BRUTE_FORCE_FAMILY_CAP:
        raise PreconditionError(f"{len(compact_opens)} compact opens are too many for a literal scan")
    inclusion = _family_order(compact_opens)
    found = set()
    for chosen in submasks(full_mask(len(compact_opens))):
        if not is_dually_directed(inclusion, chosen):
            continue
        Z = X.universe
        for i in members(chosen):
            Z &= compact_opens[i]
        found.add(Z)
    return found


class SobrietyReport(NamedTuple):
    sober: bool
    t0_and_directed_meets: bool


def sobriety_equivalents(X: DSSpace) -> SobrietyReport:
    """
    Evaluate sobriety by generic points and by the dually directed characterization:
    ``X`` is T0 and ``⋂L`` meets every nonempty closed ``Y`` meeting each member of a dually directed ``L``.

    :param X: the space
    :type X: DSSpace
    :return: both verdicts
    :rtype: SobrietyReport
    """
    sober = is_sober(X.size, X.basis)
    compact_opens = list(X.opens)
    holds = is_t0(X.size, X.basis)
    if len(compact_opens) > BRUTE_FORCE_FAMILY_CAP:
        logger.warning("directed-meet scan reduced to least members: %d compact opens", len(compact_opens))
        families = [0]
    else:
        inclusion = _family_order(compact_opens)
        families = [L for L in submasks(full_mask(len(compact_opens))) if is_dually_directed(inclusion, L)]
    for Y in X.C:
        for L in families:
            chosen = [compact_opens[i] for i in members(L)]
            if all(Y & U for U in chosen):
                meet = X.universe
                for U in chosen:
                    meet &= U
                if not meet & Y:
                    holds = False
    return SobrietyReport(sober, holds)


@dataclass(frozen=True)
class DualSpace:
    """
    The dual space of a distributive semilattice: its irreducible filters with the topology
    generated by ``{β(a)^c : a in A}``.
    """
    algebra: MeetSemilattice
    points: tuple[int, ...]
    space: DSSpace

    def beta(self, a: int) -> int:
        return mask_of(i for i, P in enumerate(self.points) if P >> a & 1)

    @cached_property
    def betas(self) -> tuple[int, ...]:
        return tuple(self.beta(a) for a in range(self.algebra.size))

    def point_index(self, P: int) -> int:
        try:
            return self.points.index(P)
        except ValueError:
            raise InvalidStructure(f"{self.algebra.label(P)} is not an irreducible filter")


@lru_cache(maxsize=256)
def dual_space(A: MeetSemilattice) -> DualSpace:
    """
    Build ``X(A)``

    :param A: a distributive semilattice
    :type A: MeetSemilattice
    :return: the dual space, points indexed in increasing mask order
    :rtype: DualSpace
    """
    verdict = is_distributive(A)
    if not verdict.holds:
        a, b, c = (A.names[i] for i in verdict.witness)
        raise PreconditionError(f"semilattice is not distributive at ({a}, {b}, {c})")
    points = tuple(irreducible_filters(A))
    n = len(points)
    basis = tuple(full_mask(n) & ~mask_of(i for i, P in enumerate(points) if P >> a & 1) for a in range(A.size))
    space = DSSpace(n, basis, tuple(A.label(P) for P in points))
    logger.debug("dual space of a %d element semilattice has %d points", A.size, n)
    return DualSpace(A, points, space)


def beta(A: MeetSemilattice, a: int) -> int:
    """
    ``β(a)``, the irreducible filters containing ``a``, as a mask over the points of ``X(A)``
    """
    return dual_space(A).beta(a)


def filter_to_closed(D: DualSpace, F: int) -> int:
    """
    ``F̂ = ⋂{β(a) : a in F}``
    """
    if not is_filter(D.algebra, F):
        raise InvalidStructure(f"{D.algebra.label(F)} is not a filter")
    result = D.space.universe
    for a in members(F):
        result &= D.betas[a]
    return result


def closed_to_filter(D: DualSpace, Y: int) -> int:
    """
    ``F_Y = {a : Y ⊆ β(a)}``; the empty closed set gives the improper filter

    :param D: the dual space
    :type D: DualSpace
    :param Y: a closed set of points
    :type Y: int
    :return: the filter
    :rtype: int
    """
    if Y not in D.space.K:
        raise InvalidStructure(f"{D.space.label(Y)} is not closed")
    return mask_of(a for a in range(D.algebra.size) if is_subset(Y, D.betas[a]))


def alpha(D: DualSpace, I: int) -> int:
    """
    ``α(I) = {P : P∩I = ∅}``

    :param D: the dual space
    :type D: DualSpace
    :param I: an order ideal
    :type I: int
    :return: the special saturated set
    :rtype: int
    """
    if not is_order_ideal(D.algebra, I):
        raise InvalidStructure(f"{D.algebra.label(I)} is not an order ideal")
    return mask_of(i for i, P in enumerate(D.points) if not P & I)


def ideal_of_saturated(D: DualSpace, Z: int) -> int:
    """
    ``I_A(Z) = {a : β(a)∩Z = ∅}``
    """
    if Z not in D.space.S:
        raise InvalidStructure(f"{D.space.label(Z)} is not a special saturated set")
    return mask_of(a for a in range(D.algebra.size) if not D.betas[a] & Z)


def sat_closed_disjointness(D: DualSpace, Y: int, Z: int) -> tuple[bool, bool]:
    """
    Both sides of ``F_Y ∩ I_A(Z) = ∅  iff  Y ∩ Z ≠ ∅``

    :param D: the dual space
    :type D: DualSpace
    :param Y: a nonempty closed set
    :type Y: int
    :param Z: a special saturated set
    :type Z: int
    :return: the algebraic side and the topological side
    :rtype: tuple[bool, bool]
    """
    if Y not in D.space.C:
        raise InvalidStructure(f"{D.space.label(Y)} is not a nonempty closed set")
    return not closed_to_filter(D, Y) & ideal_of_saturated(D, Z), bool(Y & Z)


def d_semilattice(X: DSSpace) -> MeetSemilattice:
    """
    ``⟨D(X), ∩, X⟩`` as a semilattice whose element ``i`` is the ``i``-th member of ``X.D``
    """
    family = list(X.D)
    table = tuple(tuple(family.index(U & V) for V in family) for U in family)
    return MeetSemilattice(table, family.index(X.universe), tuple(X.label(U) for U in family))


@dataclass(frozen=True)
class PointEmbedding:
    """
    ``H_X`` from a space into the dual of its ``D(X)`` semilattice
    """
    source: DSSpace
    algebra: MeetSemilattice
    dual: DualSpace
    mapping: tuple[int, ...]

    def image(self, Y: int) -> int:
        return mask_of(self.mapping[x] for x in members(Y))

    def element(self, U: int) -> int:
        return list(self.source.D).index(U)


def h_x(X: DSSpace) -> PointEmbedding:
    """
    Map each point ``x`` to ``H_X(x) = {U in D(X) : x in U}``, an irreducible filter of ``D(X)``

    :param X: the space
    :type X: DSSpace
    :return: the embedding
    :rtype: PointEmbedding
    """
    algebra = d_semilattice(X)
    dual = dual_space(algebra)
    family = list(X.D)
    mapping = []
    for x in range(X.size):
        H = mask_of(i for i, U in enumerate(family) if U >> x & 1)
        if H not in dual.points:
            raise InvalidStructure(f"H_X({X.labels[x]}) is not an irreducible filter; sobriety is violated")
        mapping.append(dual.points.index(H))
    return PointEmbedding(X, algebra, dual, tuple(mapping))


def h_x_remark_holds(X: DSSpace) -> bool:
    """
    ``H_X[U] = β_{D(X)}(U)`` for ``U ∈ D(X)``, ``H_X`` carries ``S(X)`` onto ``S(X(D(X)))``, and
    ``Z ∩ U = ∅  iff  H_X[Z] ∩ β_{D(X)}(U) = ∅``
    """
    H = h_x(X)
    target = H.dual.space
    if {H.image(Z) for Z in X.S} != set(target.S):
        return False
    for U in X.D:
        beta_u = H.dual.beta(H.element(U))
        if H.image(U) != beta_u:
            return False
        if any((not Z & U) != (not H.image(Z) & beta_u) for Z in X.S):
            return False
    return True


def filter_closed_bijection(D: DualSpace) -> bool:
    """
    ``F ↦ F̂`` and ``Y ↦ F_Y`` are mutually inverse and order reversing between ``Fi(A)`` and ``K(X(A))``;
    proper filters go to nonempty closed sets
    """
    A = D.algebra
    family = list(filters(A))
    images = [filter_to_closed(D, F) for F in family]
    if any(closed_to_filter(D, Y) != F for F, Y in zip(family, images)):
        return False
    if set(images) != set(D.space.K):
        return False
    if any(bool(Y) != (F != A.universe) for F, Y in zip(family, images)):
        return False
    return all(is_subset(Y2, Y1) == is_subset(F1, F2)
               for F1, Y1 in zip(family, images) for F2, Y2 in zip(family, images))


def ideal_saturated_bijection(D: DualSpace) -> bool:
    """
    ``α`` and ``I_A`` are mutually inverse and order reversing between the nonempty order ideals and ``S(X(A))``,
    with ``α((a]) = β(a)^c``

    :param D: the dual space
    :type D: DualSpace
    :return: whether the correspondence holds
    :rtype: bool
    """
    A = D.algebra
    ideals = list(order_ideals(A, include_empty=False))
    images = [alpha(D, I) for I in ideals]
    if any(ideal_of_saturated(D, Z) != I for I, Z in zip(ideals, images)):
        return False
    if set(images) != set(D.space.S):
        return False
    if any(alpha(D, A.order.downs[a]) != D.space.universe & ~D.betas[a] for a in range(A.size)):
        return False
    return all(is_subset(Z2, Z1) == is_subset(I1, I2)
               for I1, Z1 in zip(ideals, images) for I2, Z2 in zip(ideals, images))


def empty_ideal_collapse(D: DualSpace) -> bool:
    """
    ``α(∅) = α((0]) = X(A)``
    """
    bottom = D.algebra.order.downs[D.algebra.bottom]
    return alpha(D, 0) == alpha(D, bottom) == D.space.universe

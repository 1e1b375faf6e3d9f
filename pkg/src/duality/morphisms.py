import logging
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from src.core.bitset import members, mask_of, is_subset, within
from src.core.semilattice import Homomorphism, is_homomorphism, is_mds_homomorphism
from src.duality.relations import (
    MDSAlgebra, SMultirelation, relation_from_algebra_S, m_R, operator_on_d,
)
from src.duality.space import DSSpace, dual_space, d_semilattice, h_x
from src.errors import InvalidStructure, PreconditionError

logger = logging.getLogger(__name__)


def _h(image: Sequence[int], U: int) -> int:
    return mask_of(x for x, row in enumerate(image) if is_subset(row, U))


def is_meet_relation(source: DSSpace, target: DSSpace, image: Sequence[int]) -> bool:
    """
    ``h_S`` maps ``D(target)`` into ``D(source)`` and each ``S(x)`` is the intersection of the
    members of ``D(target)`` containing it

    :param source: the space of first components
    :type source: DSSpace
    :param target: the space of second components
    :type target: DSSpace
    :param image: ``S(x)`` for each source point, as masks over the target
    :type image: Sequence[int]
    :return: whether both conditions hold
    :rtype: bool
    """
    if len(image) != source.size or any(not within(row, target.size) for row in image):
        return False
    if any(_h(image, U) not in source.D for U in target.D):
        return False
    for row in image:
        hull = target.universe
        for U in target.D:
            if is_subset(row, U):
                hull &= U
        if hull != row:
            return False
    return True


@dataclass(frozen=True)
class MeetRelation:
    """
    ``S ⊆ X1 × X2`` dualizing a homomorphism ``D(X2) → D(X1)``
    """
    source: DSSpace
    target: DSSpace
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if not is_meet_relation(self.source, self.target, self.image):
            raise InvalidStructure("relation is not a meet-relation")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def inverse_image(self, Y: int) -> int:
        """
        ``S⁻¹[Y] = {x : S(x) ∩ Y ≠ ∅}``
        """
        return mask_of(x for x, row in enumerate(self.image) if row & Y)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.image) for y in members(row)]


def h_S(S: MeetRelation, U: int) -> int:
    """
    ``h_S(U) = {x : S(x) ⊆ U}``

    :param S: the meet-relation
    :type S: MeetRelation
    :param U: a member of ``D`` of the target
    :type U: int
    :return: a member of ``D`` of the source
    :rtype: int
    """
    if U not in S.target.D:
        raise InvalidStructure(f"{S.target.label(U)} is not in D of the target space")
    return _h(S.image, U)


def h_s_homomorphism(S: MeetRelation) -> Homomorphism:
    """
    ``h_S`` as a semilattice map between the ``D`` semilattices of the target and the source
    """
    source_family = list(S.source.D)
    target_family = list(S.target.D)
    mapping = tuple(source_family.index(h_S(S, U)) for U in target_family)
    return Homomorphism(d_semilattice(S.target), d_semilattice(S.source), mapping)


def s_h(h: Homomorphism) -> MeetRelation:
    """
    ``S_h ⊆ X(B) × X(A)``: ``(P, Q)`` whenever ``h⁻¹[P] ⊆ Q``

    :param h: a homomorphism ``A → B``
    :type h: Homomorphism
    :return: the dual meet-relation
    :rtype: MeetRelation
    """
    if not is_homomorphism(h):
        raise InvalidStructure("map is not a semilattice homomorphism")
    source = dual_space(h.target)
    target = dual_space(h.source)
    image = []
    for P in source.points:
        inverse = h.preimage(P)
        image.append(mask_of(j for j, Q in enumerate(target.points) if is_subset(inverse, Q)))
    return MeetRelation(source.space, target.space, tuple(image))


class MeetRelationVerdict(NamedTuple):
    relational: bool
    commutes: bool

    @property
    def agree(self) -> bool:
        return self.relational == self.commutes


def is_monotonic_meet_relation(S: MeetRelation, R1: SMultirelation, R2: SMultirelation) -> MeetRelationVerdict:
    """
    Evaluate ``U^c ∈ R2[S(x)]  iff  S⁻¹[U^c] ∈ R1(x)`` and ``h_S(m_R2(U)) = m_R1(h_S(U))`` over ``U ∈ D(X2)``

    :param S: a meet-relation from ``X1`` to ``X2``
    :type S: MeetRelation
    :param R1: relation on ``X1``
    :type R1: SMultirelation
    :param R2: relation on ``X2``
    :type R2: SMultirelation
    :return: both verdicts
    :rtype: MeetRelationVerdict
    """
    if R1.space != S.source or R2.space != S.target:
        raise InvalidStructure("relations do not live on the spaces of the meet-relation")
    X1, X2 = S.source, S.target
    relational = True
    for U in X2.D:
        complement = X2.universe & ~U
        back = S.inverse_image(complement)
        for x in range(X1.size):
            forward = any(complement in R2(y) for y in members(S(x)))
            if forward != (back in R1(x)):
                relational = False
    commutes = all(h_S(S, m_R(R2, U)) == m_R(R1, h_S(S, U)) for U in X2.D)
    return MeetRelationVerdict(relational, commutes)


def inverse_image_identity(S: MeetRelation) -> bool:
    """
    ``S⁻¹[U^c] = h_S(U)^c`` and it is a special saturated set of the source
    """
    for U in S.target.D:
        back = S.inverse_image(S.target.universe & ~U)
        if back != S.source.universe & ~h_S(S, U) or back not in S.source.S:
            return False
    return True


def compose(S1: MeetRelation, S2: MeetRelation) -> MeetRelation:
    """
    ``S2 ∘ S1 = {(x, z) : (x, y) ∈ S1 and (y, z) ∈ S2 for some y}``
    """
    if S1.target != S2.source:
        raise InvalidStructure("meet-relations are not composable")
    image = []
    for row in S1.image:
        reached = 0
        for y in members(row):
            reached |= S2(y)
        image.append(reached)
    return MeetRelation(S1.source, S2.target, tuple(image))


def identity_relation(X: DSSpace) -> MeetRelation:
    """
    The order ``<=`` of the space, which acts as the identity arrow
    """
    return MeetRelation(X, X, X.order.ups)


def is_space_isomorphism(f: Sequence[int], R1: SMultirelation, R2: SMultirelation) -> bool:
    """
    ``f`` is a homeomorphism and ``(x, Z) ∈ R1  iff  (f(x), f[Z]) ∈ R2`` for ``Z ∈ S(X1)``

    :param f: point map from the space of ``R1`` to the space of ``R2``
    :type f: Sequence[int]
    :param R1: source relation
    :type R1: SMultirelation
    :param R2: target relation
    :type R2: SMultirelation
    :return: whether ``f`` is an isomorphism of monotonic spaces
    :rtype: bool
    """
    X1, X2 = R1.space, R2.space
    if len(f) != X1.size or sorted(f) != list(range(X2.size)):
        return False

    def forward(Y: int) -> int:
        return mask_of(f[x] for x in members(Y))

    if {forward(O) for O in X1.opens} != set(X2.opens):
        return False
    return all((Z in R1(x)) == (forward(Z) in R2(f[x])) for x in range(X1.size) for Z in X1.S)


def h_x_monotonic_check(X: DSSpace, R: SMultirelation) -> bool:
    """
    ``H_X`` is an isomorphism between ``⟨X, R⟩`` and the monotonic space of ``⟨D(X), m_R⟩``
    """
    H = h_x(X)
    algebra = operator_on_d(X, R)
    return is_space_isomorphism(H.mapping, R, relation_from_algebra_S(algebra))


class DualEquivalenceReport(NamedTuple):
    algebra_round_trip: bool
    space_round_trip: bool
    identities: bool
    monotonic_arrows: bool
    composition: bool

    @property
    def holds(self) -> bool:
        return all(self)


def _space_round_trip(S: MeetRelation) -> bool:
    h = h_s_homomorphism(S)
    back = s_h(h)
    H1 = h_x(S.source)
    H2 = h_x(S.target)
    return all((S(x) >> y & 1) == (back(H1.mapping[x]) >> H2.mapping[y] & 1)
               for x in range(S.source.size) for y in range(S.target.size))


def dual_equivalence_check(algebras: Sequence[MDSAlgebra],
                           arrows: Sequence[tuple[int, int, Homomorphism]]) -> DualEquivalenceReport:
    """
    Check the functor laws between algebras with monotonic homomorphisms and spaces with monotonic meet-relations

    :param algebras: the objects
    :type algebras: Sequence[MDSAlgebra]
    :param arrows: ``(source index, target index, h)`` with ``h`` a homomorphism between those algebras
    :type arrows: Sequence[tuple[int, int, Homomorphism]]
    :return: one verdict per law
    :rtype: DualEquivalenceReport
    """
    algebra_round_trip = space_round_trip = identities = monotonic_arrows = composition = True
    relations = [relation_from_algebra_S(M) for M in algebras]
    for M, R in zip(algebras, relations):
        X = M.dual.space
        order = identity_relation(X)
        if any(h_S(order, U) != U for U in X.D):
            identities = False
        if s_h(Homomorphism.identity(M.algebra)).image != order.image:
            identities = False
        if not is_monotonic_meet_relation(order, R, R).relational:
            monotonic_arrows = False
        if not _space_round_trip(order):
            space_round_trip = False
    for i, j, h in arrows:
        source, target = algebras[i], algebras[j]
        if h.source != source.algebra or h.target != target.algebra:
            raise PreconditionError(f"arrow {i} -> {j} does not connect the listed algebras")
        S = s_h(h)
        beta_a, beta_b = source.dual.betas, target.dual.betas
        if any(h_S(S, beta_a[a]) != beta_b[h(a)] for a in range(source.algebra.size)):
            algebra_round_trip = False
        if not _space_round_trip(S):
            space_round_trip = False
        verdict = is_monotonic_meet_relation(S, relations[j], relations[i])
        if verdict.relational != is_mds_homomorphism(h, source.m, target.m) or not verdict.agree:
            monotonic_arrows = False
        if compose(identity_relation(S.source), S).image != S.image:
            composition = False
        if compose(S, identity_relation(S.target)).image != S.image:
            composition = False
    for i, j, h in arrows:
        for k, l, g in arrows:
            if j != k:
                continue
            S1, S2 = s_h(g), s_h(h)
            composite = compose(S1, S2)
            if composite.image != s_h(h.then(g)).image:
                composition = False
            if any(h_S(composite, U) != h_S(S1, h_S(S2, U)) for U in S2.target.D):
                composition = False
    logger.info("dual equivalence checked on %d algebras and %d arrows", len(algebras), len(arrows))
    return DualEquivalenceReport(algebra_round_trip, space_round_trip, identities, monotonic_arrows, composition)

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from src.confg.config import settings
from src.core.bitset import full_mask, members, mask_of, is_subset, singleton, count
from src.core.order import all_upsets
from src.core.semilattice import MeetSemilattice, filters, order_ideals, is_distributive
from src.duality.extension import UpsetLattice, m_pi
from src.duality.morphisms import MeetRelation
from src.duality.relations import (
    MDSAlgebra, Multirelation, SMultirelation, CMultirelation, relation_from_algebra_S, relation_from_algebra_C,
    m_R, m_G,
)
from src.duality.space import DSSpace, alpha, filter_to_closed
from src.errors import InvalidStructure, PreconditionError

logger = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class AxiomVerdict(NamedTuple):
    name: str
    algebraic: bool
    r_side: bool
    g_side: bool

    @property
    def agree(self) -> bool:
        return self.algebraic == self.r_side == self.g_side


def axiom_report(M: MDSAlgebra) -> list[AxiomVerdict]:
    """
    Evaluate ``m1=1``, ``m0=0``, ``ma<=a`` and ``a<=ma`` on the algebra and, independently,
    through ``R_m`` and ``G_m`` on the dual space.

    ``0`` is the meet of all elements, which every finite semilattice has.

    :param M: the algebra
    :type M: MDSAlgebra
    :return: one verdict per axiom, in the order listed above
    :rtype: list[AxiomVerdict]
    """
    A, m = M.algebra, M.m
    X = M.dual.space
    R = relation_from_algebra_S(M)
    G = relation_from_algebra_C(M)
    points = range(X.size)
    ups, downs = X.order.ups, X.order.downs
    return [
        AxiomVerdict(
            "m1=1",
            m[A.top] == A.top,
            all(0 not in R(x) for x in points),
            all(X.universe in G(x) for x in points),
        ),
        AxiomVerdict(
            "m0=0",
            m[A.bottom] == A.bottom,
            all(X.universe in R(x) for x in points),
            all(0 not in G(x) for x in points),
        ),
        AxiomVerdict(
            "ma<=a",
            all(A.leq(m[a], a) for a in range(A.size)),
            all(downs[x] in R(x) for x in points),
            all(Y >> x & 1 for x in points for Y in G(x)),
        ),
        AxiomVerdict(
            "a<=ma",
            all(A.leq(a, m[a]) for a in range(A.size)),
            all(Z >> x & 1 for x in points for Z in R(x)),
            all(ups[x] in G(x) for x in points),
        ),
    ]


def r_bar(R: SMultirelation) -> frozenset[tuple[int, int]]:
    """
    ``R̄ ⊆ S(X) × S(X)``: ``(S, Z)`` whenever ``(x, Z) ∈ R`` for every ``x ∈ S``
    """
    X = R.space
    return frozenset((S, Z) for S in X.S for Z in X.S if all(Z in R(x) for x in members(S)))


def g_bar(G: CMultirelation) -> frozenset[tuple[int, int]]:
    """
    ``Ḡ ⊆ K(X) × K(X)``: ``(Y, C)`` whenever ``(x, C) ∈ G`` for every ``x ∈ Y``
    """
    X = G.space
    return frozenset((Y, C) for Y in X.K for C in X.K if all(C in G(x) for x in members(Y)))


def _compose_bar(rel: Multirelation, bar: frozenset[tuple[int, int]]) -> list[set[int]]:
    rows = []
    for row in rel.image:
        rows.append({Z for S, Z in bar if S in row})
    return rows


def r_squared(R: SMultirelation) -> SMultirelation:
    """
    ``R²``: ``(x, Z)`` whenever some ``S ∈ R(x)`` has ``(S, Z) ∈ R̄``

    :param R: the relation
    :type R: SMultirelation
    :return: the composite relation on the same space
    :rtype: SMultirelation
    """
    return SMultirelation(R.space, _compose_bar(R, r_bar(R)))


def g_squared(G: CMultirelation) -> CMultirelation:
    return CMultirelation(G.space, _compose_bar(G, g_bar(G)))


def _squared(rel: Multirelation) -> Multirelation:
    if isinstance(rel, CMultirelation):
        return g_squared(rel)
    return r_squared(rel)


def is_transitive(rel: Multirelation) -> bool:
    """
    ``R² ⊆ R``
    """
    square = _squared(rel)
    return all(square(x) <= rel(x) for x in range(rel.space.size))


def is_weakly_dense(rel: Multirelation) -> bool:
    """
    ``R ⊆ R²``
    """
    square = _squared(rel)
    return all(rel(x) <= square(x) for x in range(rel.space.size))


class FourAxiomsReport(NamedTuple):
    box_four: bool
    r_transitive: bool
    g_weakly_dense: bool
    diamond_four: bool
    r_weakly_dense: bool
    g_transitive: bool

    @property
    def agree(self) -> bool:
        return (self.box_four == self.r_transitive == self.g_weakly_dense
                and self.diamond_four == self.r_weakly_dense == self.g_transitive)


def four_axioms_check(M: MDSAlgebra) -> FourAxiomsReport:
    """
    Evaluate ``ma <= m²a`` and ``m²a <= ma`` next to transitivity and weak density of ``R_m`` and ``G_m``

    :param M: the algebra
    :type M: MDSAlgebra
    :return: the two algebraic verdicts, each followed by its two relational ones
    :rtype: FourAxiomsReport
    """
    A = M.algebra
    m2 = M.squared()
    R = relation_from_algebra_S(M)
    G = relation_from_algebra_C(M)
    return FourAxiomsReport(
        all(A.leq(M.m[a], m2[a]) for a in range(A.size)),
        is_transitive(R),
        is_weakly_dense(G),
        all(A.leq(m2[a], M.m[a]) for a in range(A.size)),
        is_weakly_dense(R),
        is_transitive(G),
    )


def ideal_lemma_cases(M: MDSAlgebra) -> list[tuple[bool, bool]]:
    """
    For each point ``P`` and nonempty order ideal ``I``: whether ``(P, α(I)) ∈ R_m²`` and whether
    ``I ⊆ {a : m²a ∉ P}``
    """
    D = M.dual
    square = r_squared(relation_from_algebra_S(M))
    m2 = M.squared()
    ideals = list(order_ideals(M.algebra, include_empty=False))
    cases = []
    for x, P in enumerate(D.points):
        outside = mask_of(a for a in range(M.algebra.size) if not P >> m2[a] & 1)
        cases += [(alpha(D, I) in square(x), is_subset(I, outside)) for I in ideals]
    return cases


def ideal_lemma_bridge(M: MDSAlgebra) -> bool:
    """
    ``(P, α(I)) ∈ R_m²  iff  I ⊆ {a : m²a ∉ P}`` for every nonempty order ideal ``I``
    """
    return all(relational == algebraic for relational, algebraic in ideal_lemma_cases(M))


def g_squared_cases(M: MDSAlgebra) -> list[tuple[bool, bool]]:
    """
    For each point ``P`` and filter ``F``: whether ``(P, F̂) ∈ G_m²`` and whether ``F ⊆ {a : m²a ∈ P}``
    """
    D = M.dual
    square = g_squared(relation_from_algebra_C(M))
    m2 = M.squared()
    cases = []
    for x, P in enumerate(D.points):
        inside = mask_of(a for a in range(M.algebra.size) if P >> m2[a] & 1)
        cases += [(filter_to_closed(D, F) in square(x), is_subset(F, inside)) for F in filters(M.algebra)]
    return cases


def g_squared_bridge(M: MDSAlgebra) -> bool:
    """
    ``(P, F̂) ∈ G_m²  iff  F ⊆ {a : m²a ∈ P}`` for every filter ``F``
    """
    return all(relational == algebraic for relational, algebraic in g_squared_cases(M))


class CanonicityReport(NamedTuple):
    pi_diamond_four: str
    sigma_box_four: str


def canonicity_check(M: MDSAlgebra) -> CanonicityReport:
    """
    Under ``m²a <= ma`` check ``m_{R_m}²(U) ⊆ m_{R_m}(U)``, and under ``ma <= m²a`` check
    ``𝐦_{G_m}(U) ⊆ 𝐦_{G_m}²(U)``, for every upset ``U`` of the dual space.

    A check whose algebraic axiom fails is reported as skipped, as are both checks on spaces
    larger than ``settings.canonicity_max_points``.

    :param M: the algebra
    :type M: MDSAlgebra
    :return: ``pass``, ``fail`` or ``skipped`` for each of the two checks
    :rtype: CanonicityReport
    """
    X = M.dual.space
    if X.size > settings.canonicity_max_points:
        logger.warning("canonicity skipped: %d points exceed the cap of %d", X.size, settings.canonicity_max_points)
        return CanonicityReport(SKIPPED, SKIPPED)
    axioms = four_axioms_check(M)
    upsets = UpsetLattice(M.dual).carrier
    if axioms.diamond_four:
        R = relation_from_algebra_S(M)
        holds = all(is_subset(m_R(R, m_R(R, U)), m_R(R, U)) for U in upsets)
        pi_status = PASS if holds else FAIL
    else:
        logger.warning("π-canonicity skipped: m²a <= ma fails")
        pi_status = SKIPPED
    if axioms.box_four:
        G = relation_from_algebra_C(M)
        holds = all(is_subset(m_G(G, U), m_G(G, m_G(G, U))) for U in upsets)
        sigma_status = PASS if holds else FAIL
    else:
        logger.warning("σ-canonicity skipped: ma <= m²a fails")
        sigma_status = SKIPPED
    return CanonicityReport(pi_status, sigma_status)


def is_modal(M: MDSAlgebra) -> bool:
    """
    ``m1 = 1`` and ``m(a∧b) = ma∧mb`` for all ``a, b``
    """
    A, m = M.algebra, M.m
    if m[A.top] != A.top:
        return False
    return all(m[A.meet[a][b]] == A.meet[m[a]][m[b]] for a in range(A.size) for b in range(A.size))


def is_normal_space(X: DSSpace, R: SMultirelation) -> bool:
    """
    Every ``(x, Z) ∈ R`` has some ``z ∈ Z`` with ``(x, (z]) ∈ R``

    :param X: the space
    :type X: DSSpace
    :param R: the relation
    :type R: SMultirelation
    :return: whether the monotonic space is normal
    :rtype: bool
    """
    downs = X.order.downs
    return all(any(downs[z] in R(x) for z in members(Z)) for x in range(X.size) for Z in R(x))


def s_from_r(X: DSSpace, R: SMultirelation) -> MeetRelation:
    """
    ``S_R``: ``(x, z)`` whenever ``(x, (z]) ∈ R``
    """
    if not is_normal_space(X, R):
        raise PreconditionError("relation is not normal")
    downs = X.order.downs
    image = tuple(mask_of(z for z in range(X.size) if downs[z] in R(x)) for x in range(X.size))
    return MeetRelation(X, X, image)


def r_from_s(S: MeetRelation) -> SMultirelation:
    """
    ``R_S``: ``(x, Z)`` whenever ``S(x)`` meets ``Z``
    """
    if S.source != S.target:
        raise PreconditionError("meet-relation does not act on a single space")
    X = S.source
    return SMultirelation(X, [{Z for Z in X.S if S(x) & Z} for x in range(X.size)])


def m_S(S: MeetRelation, U: int) -> int:
    """
    ``m_S(U) = {x : S(x) ⊆ U}`` on any set of points
    """
    return mask_of(x for x, row in enumerate(S.image) if is_subset(row, U))


class NormalTranslationReport(NamedTuple):
    operators_agree: bool
    relation_round_trip: bool
    meet_relation_round_trip: bool

    @property
    def holds(self) -> bool:
        return all(self)


def normal_translation_check(X: DSSpace, R: SMultirelation) -> NormalTranslationReport:
    """
    Check ``m_R = m_{S_R}`` on every upset, ``R = R_{S_R}`` and ``S_R = S_{R_{S_R}}``

    :param X: the space
    :type X: DSSpace
    :param R: a normal relation
    :type R: SMultirelation
    :return: the three verdicts
    :rtype: NormalTranslationReport
    """
    S = s_from_r(X, R)
    agree = all(m_R(R, U) == m_S(S, U) for U in all_upsets(X.order))
    back = r_from_s(S)
    return NormalTranslationReport(agree, back == R, s_from_r(X, back).image == S.image)


def meet_relation_triviality(S: MeetRelation) -> bool:
    """
    ``m_S(U) = m_{R_S}(U)`` for every upset ``U`` of the space
    """
    R = r_from_s(S)
    return all(m_S(S, U) == m_R(R, U) for U in all_upsets(S.source.order))


class GehrkeVerdict(NamedTuple):
    formulas_agree: bool
    matches_translation: bool

    @property
    def holds(self) -> bool:
        return all(self)


def gehrke_relation_check(M: MDSAlgebra) -> GehrkeVerdict:
    """
    Build the point relation of a modal operator twice, as ``□^π((Q]^c) ⊆ (P]^c`` and as
    ``□⁻¹(P) ∩ Q^c = ∅``, and compare both with ``S_{R_□}``.

    :param M: a modal algebra
    :type M: MDSAlgebra
    :return: whether the formulas agree and whether they give ``S_{R_□}``
    :rtype: GehrkeVerdict
    """
    if not is_modal(M):
        raise PreconditionError("operator is not modal")
    D = M.dual
    X = D.space
    downs = X.order.downs
    by_extension = []
    by_preimage = []
    for x, P in enumerate(D.points):
        outside_p = X.universe & ~downs[x]
        inverse = M.preimage(P)
        by_extension.append(mask_of(y for y in range(X.size)
                                    if is_subset(m_pi(M, X.universe & ~downs[y]), outside_p)))
        by_preimage.append(mask_of(y for y, Q in enumerate(D.points) if is_subset(inverse, Q)))
    translated = s_from_r(X, relation_from_algebra_S(M))
    return GehrkeVerdict(by_extension == by_preimage, tuple(by_preimage) == translated.image)


@dataclass(frozen=True)
class BooleanMDS:
    """
    The powerset of ``atoms`` points with a monotone ``box``; element ``u`` is the subset with mask ``u``.

    ``◇u = ¬□¬u``. With ``normal`` set, ``□1 = 1`` is demanded too.
    """
    atoms: int
    box: tuple[int, ...]
    normal: bool = False
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "box", tuple(self.box))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"p{i}" for i in range(self.atoms)))
        size = 1 << self.atoms
        if len(self.box) != size or any(not 0 <= v < size for v in self.box):
            raise InvalidStructure(f"box table must map the {size} subsets to subsets")
        if any(not is_subset(self.box[u], self.box[v]) for u in range(size) for v in range(size) if is_subset(u, v)):
            raise InvalidStructure("box is not monotone")
        if self.normal and self.box[self.top] != self.top:
            raise InvalidStructure("normal box must keep the top")

    @property
    def top(self) -> int:
        return full_mask(self.atoms)

    @cached_property
    def algebra(self) -> MeetSemilattice:
        size = 1 << self.atoms
        table = tuple(tuple(u & v for v in range(size)) for u in range(size))
        names = tuple("{" + ",".join(self.labels[i] for i in members(u)) + "}" for u in range(size))
        return MeetSemilattice(table, self.top, names)

    @cached_property
    def diamond(self) -> tuple[int, ...]:
        top = self.top
        return tuple(top & ~self.box[top & ~u] for u in range(1 << self.atoms))

    def box_algebra(self) -> MDSAlgebra:
        return MDSAlgebra(self.algebra, self.box, kind="boolean")

    def diamond_algebra(self) -> MDSAlgebra:
        return MDSAlgebra(self.algebra, self.diamond, kind="boolean")


def is_boolean(A: MeetSemilattice) -> bool:
    """
    A distributive semilattice in which every element has a complement
    """
    if not is_distributive(A).holds:
        return False
    bottom = A.bottom
    return all(any(A.meet[a][b] == bottom and A.join(a, b) == A.top for b in range(A.size)) for a in range(A.size))


def boolean_from_algebra(M: MDSAlgebra) -> BooleanMDS:
    """
    Carry a Boolean algebra with operator onto the powerset of its atoms

    :param M: an algebra whose semilattice is Boolean
    :type M: MDSAlgebra
    :return: the same algebra with subsets of atoms as elements
    :rtype: BooleanMDS
    """
    A = M.algebra
    if not is_boolean(A):
        raise PreconditionError("semilattice is not a Boolean lattice")
    atoms = [a for a in range(A.size) if a != A.bottom and count(A.order.downs[a]) == 2]
    encode = [mask_of(i for i, t in enumerate(atoms) if A.leq(t, a)) for a in range(A.size)]
    decode = {u: a for a, u in enumerate(encode)}
    box = tuple(encode[M.m[decode[u]]] for u in range(1 << len(atoms)))
    return BooleanMDS(len(atoms), box, labels=tuple(A.names[t] for t in atoms))


class BooleanReport(NamedTuple):
    g_diamond_is_r_box: bool
    g_box_is_r_diamond: bool
    saturated_are_closed: bool
    discrete_order: bool

    @property
    def holds(self) -> bool:
        return all(self)


def boolean_duality_check(B: BooleanMDS) -> BooleanReport:
    """
    Compare ``G_◇`` with ``R_□`` and ``G_□`` with ``R_◇`` on the dual of a Boolean algebra, where
    ``F̂ = α(I_F)`` makes ``S(X)`` and ``K(X)`` the same family.

    The dual is built by the general engine; its points are the ultrafilters, so the
    specialization order must be equality.

    :param B: the Boolean algebra with operator
    :type B: BooleanMDS
    :return: the two equalities and the two collapse checks
    :rtype: BooleanReport
    """
    box, diamond = B.box_algebra(), B.diamond_algebra()
    X = box.dual.space
    r_box, r_diamond = relation_from_algebra_S(box), relation_from_algebra_S(diamond)
    g_box, g_diamond = relation_from_algebra_C(box), relation_from_algebra_C(diamond)
    logger.debug("boolean dual over %d atoms has %d points", B.atoms, X.size)
    return BooleanReport(
        g_diamond.image == r_box.image,
        g_box.image == r_diamond.image,
        set(X.S) == set(X.K),
        all(X.order.ups[x] == singleton(x) for x in range(X.size)),
    )

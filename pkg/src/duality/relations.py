import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from src.core.bitset import members, mask_of, is_subset
from src.core.order import Poset, all_upsets, is_upset, down_closure
from src.core.semilattice import (
    MeetSemilattice, Homomorphism, is_distributive, is_homomorphism, order_ideals, filters, filter_generated,
)
from src.duality.space import (
    DSSpace, DualSpace, dual_space, ideal_of_saturated, closed_to_filter, filter_to_closed, alpha,
    d_semilattice, h_x,
)
from src.errors import InvalidStructure, PreconditionError

logger = logging.getLogger(__name__)


def monotonicity_forms(A: MeetSemilattice, m: Sequence[int]) -> tuple[bool, bool]:
    """
    Evaluate ``a <= b => ma <= mb`` and ``m(a∧b) <= ma∧mb`` separately

    :param A: the semilattice
    :type A: MeetSemilattice
    :param m: operator table
    :type m: Sequence[int]
    :return: the order-preserving form and the meet form
    :rtype: tuple[bool, bool]
    """
    if len(m) != A.size or any(not 0 <= v < A.size for v in m):
        raise InvalidStructure("operator table does not match the carrier")
    n = A.size
    preserving = all(A.leq(m[a], m[b]) for a in range(n) for b in range(n) if A.leq(a, b))
    sub_meet = all(A.leq(m[A.meet[a][b]], A.meet[m[a]][m[b]]) for a in range(n) for b in range(n))
    return preserving, sub_meet


def is_monotonic(A: MeetSemilattice, m: Sequence[int]) -> bool:
    return all(monotonicity_forms(A, m))


@dataclass(frozen=True)
class MDSAlgebra:
    """
    A distributive semilattice with a monotonic operator ``m``
    """
    algebra: MeetSemilattice
    m: tuple[int, ...]
    kind: str = field(default="mds")

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))
        verdict = is_distributive(self.algebra)
        if not verdict.holds:
            a, b, c = (self.algebra.names[i] for i in verdict.witness)
            raise InvalidStructure(f"semilattice is not distributive at ({a}, {b}, {c})")
        if not is_monotonic(self.algebra, self.m):
            raise InvalidStructure("operator is not monotonic")

    @property
    def dual(self) -> DualSpace:
        return dual_space(self.algebra)

    def preimage(self, P: int) -> int:
        """
        ``m⁻¹(P)``
        """
        return mask_of(a for a in range(self.algebra.size) if P >> self.m[a] & 1)

    def image(self, elems: int) -> int:
        return mask_of(self.m[a] for a in members(elems))

    def squared(self) -> tuple[int, ...]:
        return tuple(self.m[self.m[a]] for a in range(self.algebra.size))

    @classmethod
    def identity(cls, A: MeetSemilattice) -> "MDSAlgebra":
        return cls(A, tuple(range(A.size)))


class Multirelation:
    """
    Pairs ``(x, Y)`` of a point and a set of points, stored as the image ``R(x)`` of each point.
    """
    family_name = ""

    def __init__(self, space: DSSpace, image: Sequence[Iterable[int]]):
        self.space = space
        self.image = tuple(frozenset(row) for row in image)
        if len(self.image) != space.size:
            raise InvalidStructure(f"relation has {len(self.image)} rows for {space.size} points")
        allowed = self.allowed()
        for x, row in enumerate(self.image):
            for Y in row:
                if Y not in allowed:
                    raise InvalidStructure(f"({space.labels[x]}, {space.label(Y)}) has a second component "
                                           f"outside {self.family_name}")

    def allowed(self):
        raise NotImplementedError

    @classmethod
    def from_pairs(cls, space: DSSpace, pairs: Iterable[tuple[int, int]]):
        rows = [set() for _ in range(space.size)]
        for x, Y in pairs:
            if not 0 <= x < space.size:
                raise InvalidStructure(f"point index {x} is out of range")
            rows[x].add(Y)
        return cls(space, rows)

    def __call__(self, x: int) -> frozenset[int]:
        return self.image[x]

    def __eq__(self, other):
        return type(self) is type(other) and self.space == other.space and self.image == other.image

    def __hash__(self):
        return hash((type(self).__name__, self.space, self.image))

    def __repr__(self):
        return f"{type(self).__name__}({len(self.pairs())} pairs over {self.space.size} points)"

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((x, Y) for x, row in enumerate(self.image) for Y in row)


class SMultirelation(Multirelation):
    """
    ``R ⊆ X × S(X)``
    """
    family_name = "S(X)"

    def allowed(self):
        return self.space.S


class CMultirelation(Multirelation):
    """
    ``G ⊆ X × K(X)``, where ``K(X)`` is ``C(X)`` with the empty set
    """
    family_name = "K(X)"

    def allowed(self):
        return self.space.K


def _box(image: Sequence[frozenset[int]], U: int) -> int:
    return mask_of(x for x, row in enumerate(image) if all(Z & U for Z in row))


def _diamond(image: Sequence[frozenset[int]], U: int) -> int:
    return mask_of(x for x, row in enumerate(image) if any(is_subset(Y, U) for Y in row))


def m_R(R: SMultirelation, U: int) -> int:
    """
    ``m_R(U) = {x : every Z in R(x) meets U}``

    :param R: the relation
    :type R: SMultirelation
    :param U: an upset of the space
    :type U: int
    :return: the resulting set of points
    :rtype: int
    """
    if not is_upset(R.space.order, U):
        raise PreconditionError(f"{R.space.label(U)} is not an upset")
    return _box(R.image, U)


def m_G(G: CMultirelation, U: int) -> int:
    """
    ``𝐦_G(U) = {x : some Y in G(x) lies inside U}``
    """
    if not is_upset(G.space.order, U):
        raise PreconditionError(f"{G.space.label(U)} is not an upset")
    return _diamond(G.image, U)


def relation_from_algebra_S(M: MDSAlgebra) -> SMultirelation:
    """
    ``R_m``: ``(P, Z)`` whenever ``m⁻¹(P) ∩ I_A(Z) = ∅``

    :param M: the algebra
    :type M: MDSAlgebra
    :return: the relation on the dual space
    :rtype: SMultirelation
    """
    D = M.dual
    ideals = {Z: ideal_of_saturated(D, Z) for Z in D.space.S}
    rows = []
    for P in D.points:
        inverse = M.preimage(P)
        rows.append({Z for Z, I in ideals.items() if not inverse & I})
    return SMultirelation(D.space, rows)


def relation_from_algebra_C(M: MDSAlgebra) -> CMultirelation:
    """
    ``G_m``: ``(P, Y)`` whenever ``F_Y ⊆ m⁻¹(P)``
    """
    D = M.dual
    closed = {Y: closed_to_filter(D, Y) for Y in D.space.K}
    rows = []
    for P in D.points:
        inverse = M.preimage(P)
        rows.append({Y for Y, F in closed.items() if is_subset(F, inverse)})
    return CMultirelation(D.space, rows)


def phi(X: DSSpace, saturated: Iterable[int]) -> frozenset[int]:
    """
    ``φ(S) = {Y in K(X) : Y meets every Z in S}``
    """
    saturated = list(saturated)
    return frozenset(Y for Y in X.K if all(Y & Z for Z in saturated))


def psi(X: DSSpace, closed: Iterable[int]) -> frozenset[int]:
    """
    ``ψ(C) = {Z in S(X) : Z meets every Y in C}``
    """
    closed = list(closed)
    return frozenset(Z for Z in X.S if all(Y & Z for Y in closed))


def galois_law(X: DSSpace, saturated: Iterable[int], closed: Iterable[int]) -> bool:
    """
    ``C ⊆ φ(S)  iff  S ⊆ ψ(C)``
    """
    saturated, closed = frozenset(saturated), frozenset(closed)
    return (closed <= phi(X, saturated)) == (saturated <= psi(X, closed))


def galois_closed_check(M: MDSAlgebra) -> bool:
    """
    ``R_m(P) = ψ(G_m(P))`` and ``G_m(P) = φ(R_m(P))`` at every point

    :param M: the algebra
    :type M: MDSAlgebra
    :return: whether both identities hold everywhere
    :rtype: bool
    """
    R = relation_from_algebra_S(M)
    G = relation_from_algebra_C(M)
    X = M.dual.space
    return all(R(x) == psi(X, G(x)) and G(x) == phi(X, R(x)) for x in range(X.size))


def L(X: DSSpace, U: int) -> frozenset[int]:
    return frozenset(Z for Z in X.S if Z & U)


def D_of(X: DSSpace, U: int) -> frozenset[int]:
    return frozenset(Y for Y in X.K if is_subset(Y, U))


class SpaceVerdict(NamedTuple):
    holds: bool
    failed_condition: int | None = None
    witness: str | None = None

    def __bool__(self):
        return self.holds


def _s_reconstruction(X: DSSpace, R: SMultirelation, x: int) -> frozenset[int]:
    result = frozenset(X.S)
    for U in X.D:
        if _box(R.image, U) >> x & 1:
            result &= L(X, U)
    return result


def _c_reconstruction(X: DSSpace, G: CMultirelation, x: int) -> frozenset[int]:
    result = frozenset(X.K)
    for U in X.D:
        if not _diamond(G.image, U) >> x & 1:
            result &= frozenset(X.K) - D_of(X, U)
    return result


def is_S_monotonic_space(X: DSSpace, R: SMultirelation) -> SpaceVerdict:
    """
    Check ``m_R(U) ∈ D(X)`` for ``U ∈ D(X)`` (condition 1) and
    ``R(x) = ⋂{L_U : U ∈ D(X), x ∈ m_R(U)}`` (condition 2)

    :param X: the space
    :type X: DSSpace
    :param R: the relation
    :type R: SMultirelation
    :return: verdict naming the first failed condition
    :rtype: SpaceVerdict
    """
    for U in X.D:
        image = _box(R.image, U)
        if image not in X.D:
            return SpaceVerdict(False, 1, f"m_R({X.label(U)}) = {X.label(image)}")
    for x in range(X.size):
        if R(x) != _s_reconstruction(X, R, x):
            return SpaceVerdict(False, 2, f"R({X.labels[x]}) is not the intersection of its L_U")
    return SpaceVerdict(True)


def is_C_monotonic_space(X: DSSpace, G: CMultirelation) -> SpaceVerdict:
    """
    Check ``𝐦_G(U) ∈ D(X)`` (condition 3) and ``G(x) = ⋂{(D_U)^c : x ∉ 𝐦_G(U)}`` (condition 4)
    """
    for U in X.D:
        image = _diamond(G.image, U)
        if image not in X.D:
            return SpaceVerdict(False, 3, f"m_G({X.label(U)}) = {X.label(image)}")
    for x in range(X.size):
        if G(x) != _c_reconstruction(X, G, x):
            return SpaceVerdict(False, 4, f"G({X.labels[x]}) is not the intersection of its (D_U)^c")
    return SpaceVerdict(True)


def g_from_r(X: DSSpace, R: SMultirelation) -> CMultirelation:
    """
    ``G_R(x) = φ(R(x))``
    """
    if not is_S_monotonic_space(X, R):
        raise PreconditionError("relation does not make an S-monotonic space")
    return CMultirelation(X, [phi(X, R(x)) for x in range(X.size)])


def r_from_g(X: DSSpace, G: CMultirelation) -> SMultirelation:
    """
    ``R_G(x) = ψ(G(x))``
    """
    if not is_C_monotonic_space(X, G):
        raise PreconditionError("relation does not make a C-monotonic space")
    return SMultirelation(X, [psi(X, G(x)) for x in range(X.size)])


def operator_on_d(X: DSSpace, R: SMultirelation) -> MDSAlgebra:
    """
    ``⟨D(X), m_R⟩`` with the element order of ``X.D``
    """
    family = list(X.D)
    table = []
    for U in family:
        image = _box(R.image, U)
        if image not in X.D:
            raise PreconditionError(f"m_R({X.label(U)}) is not in D(X)")
        table.append(family.index(image))
    return MDSAlgebra(d_semilattice(X), tuple(table))


class EquivalenceReport(NamedTuple):
    intersection_identity: bool
    reflects_through_h: bool
    union_identity: bool

    @property
    def agree(self) -> bool:
        return len(set(self)) == 1


def equivalent_conditions(X: DSSpace, R: SMultirelation) -> EquivalenceReport:
    """
    Evaluate the three equivalent ways of saying that ``R`` is determined by ``m_R``:

    1. ``R(x) = ⋂{L_U : x ∈ m_R(U)}``,
    2. ``(H(x), H[Z]) ∈ R_{m_R}`` implies ``(x, Z) ∈ R``,
    3. ``m_R(Z^c) = ⋃{m_R(U) : Z ⊆ U^c}`` for every ``Z ∈ S(X)`` and each ``R(x)`` is an upset of ``S(X)``.

    :param X: the space
    :type X: DSSpace
    :param R: a relation with ``m_R`` mapping ``D(X)`` into itself
    :type R: SMultirelation
    :return: the three verdicts
    :rtype: EquivalenceReport
    """
    algebra = operator_on_d(X, R)
    first = all(R(x) == _s_reconstruction(X, R, x) for x in range(X.size))

    H = h_x(X)
    reflected = relation_from_algebra_S(algebra)
    second = True
    for x in range(X.size):
        for Z in X.S:
            image = H.image(Z)
            if image in reflected(H.mapping[x]) and Z not in R(x):
                second = False

    third = True
    for Z in X.S:
        union = 0
        for U in X.D:
            if not Z & U:
                union |= _box(R.image, U)
        if _box(R.image, X.universe & ~Z) != union:
            third = False
    for x in range(X.size):
        for S in R(x):
            if any(is_subset(S, Z) and Z not in R(x) for Z in X.S):
                third = False
    return EquivalenceReport(first, second, third)


def is_r_upset(X: DSSpace, R: SMultirelation) -> bool:
    return all(Z in R(x) for x in range(X.size) for S in R(x) for Z in X.S if is_subset(S, Z))


def frame_laws(X: DSSpace, R: SMultirelation, G: CMultirelation) -> bool:
    """
    ``x <= y`` implies ``R(y) ⊆ R(x)`` and ``G(x) ⊆ G(y)``
    """
    order = X.order
    return all(R(y) <= R(x) and G(x) <= G(y)
               for x in range(X.size) for y in members(order.ups[x]))


def representation_holds(M: MDSAlgebra) -> bool:
    """
    ``β`` is injective, preserves meets and top, and ``m_{R_m}(β(a)) = β(ma)``; its image is ``D(X(A))``
    """
    D = M.dual
    A = M.algebra
    R = relation_from_algebra_S(M)
    betas = D.betas
    if len(set(betas)) != A.size or betas[A.top] != D.space.universe:
        return False
    if any(betas[A.meet[a][b]] != betas[a] & betas[b] for a in range(A.size) for b in range(A.size)):
        return False
    if set(betas) != set(D.space.D):
        return False
    return all(m_R(R, betas[a]) == betas[M.m[a]] for a in range(A.size))


def dual_hilbert_identities(M: MDSAlgebra) -> bool:
    """
    ``R_m(P) = ⋂{L_β(a) : ma ∈ P}`` and ``G_m(P) = ⋂{(D_β(a))^c : ma ∉ P}``
    """
    D = M.dual
    X = D.space
    R = relation_from_algebra_S(M)
    G = relation_from_algebra_C(M)
    for x, P in enumerate(D.points):
        r_side = frozenset(X.S)
        g_side = frozenset(X.K)
        for a in range(M.algebra.size):
            if P >> M.m[a] & 1:
                r_side &= L(X, D.betas[a])
            else:
                g_side &= frozenset(X.K) - D_of(X, D.betas[a])
        if R(x) != r_side or G(x) != g_side:
            return False
    return True


def ideal_image_identity(M: MDSAlgebra) -> bool:
    """
    ``I_A(m_{R_m}(α(I)^c)^c) = (m(I)]`` for every nonempty order ideal ``I``
    """
    D = M.dual
    X = D.space
    R = relation_from_algebra_S(M)
    for I in order_ideals(M.algebra, include_empty=False):
        image = X.universe & ~m_R(R, X.universe & ~alpha(D, I))
        if image not in X.S:
            return False
        if ideal_of_saturated(D, image) != down_closure(M.algebra.order, M.image(I)):
            return False
    return True


def filter_image_identity(M: MDSAlgebra) -> bool:
    """
    ``F_{𝐦_{G_m}(F̂)} = [m(F))`` for every filter ``F``
    """
    D = M.dual
    G = relation_from_algebra_C(M)
    for F in filters(M.algebra):
        image = m_G(G, filter_to_closed(D, F))
        if image not in D.space.K:
            return False
        if closed_to_filter(D, image) != filter_generated(M.algebra, M.image(F)):
            return False
    return True


@dataclass(frozen=True)
class NeighborhoodFrame:
    """
    A poset with a multirelation that is antitone (``kind='S'``) or isotone (``kind='C'``) in the point.
    """
    order: Poset
    image: tuple[frozenset[int], ...]
    kind: str = "S"

    def __post_init__(self):
        if self.kind not in ("S", "C"):
            raise InvalidStructure(f"unknown frame kind {self.kind!r}")
        if len(self.image) != self.order.size:
            raise InvalidStructure("frame relation does not cover every point")
        for x in range(self.order.size):
            for y in members(self.order.ups[x]):
                shrinking = self.image[y] <= self.image[x]
                growing = self.image[x] <= self.image[y]
                if (self.kind == "S" and not shrinking) or (self.kind == "C" and not growing):
                    raise InvalidStructure(f"{self.kind}-frame condition fails at {x} <= {y}")

    @cached_property
    def upsets(self) -> list[int]:
        return list(all_upsets(self.order))

    def operator(self, U: int) -> int:
        return _box(self.image, U) if self.kind == "S" else _diamond(self.image, U)


def frame_algebra(frame: NeighborhoodFrame) -> MDSAlgebra:
    """
    ``⟨Up(X), ∩, m, X⟩`` for the operator of a neighborhood frame

    :param frame: the frame
    :type frame: NeighborhoodFrame
    :return: the algebra; construction fails if the operator leaves ``Up(X)`` or is not monotonic
    :rtype: MDSAlgebra
    """
    family = frame.upsets
    table = tuple(tuple(family.index(U & V) for V in family) for U in family)
    names = tuple("{" + ",".join(str(x) for x in members(U)) + "}" for U in family)
    algebra = MeetSemilattice(table, family.index(frame.order.universe), names)
    operator = []
    for U in family:
        image = frame.operator(U)
        if image not in family:
            raise InvalidStructure(f"frame operator sends {names[family.index(U)]} outside Up(X)")
        operator.append(family.index(image))
    return MDSAlgebra(algebra, tuple(operator))


def frame_representation(M: MDSAlgebra, kind: str = "S") -> tuple[bool, str | None]:
    """
    ``β`` embeds ``M`` into the algebra of the neighborhood frame of ``R_m`` (``kind='S'``) or ``G_m``

    :param M: the algebra
    :type M: MDSAlgebra
    :param kind: which relation the frame is built from
    :type kind: str
    :return: whether ``β`` is an injective homomorphism commuting with both operators, and a witness otherwise
    :rtype: tuple[bool, str | None]
    """
    D = M.dual
    A = M.algebra
    relation = relation_from_algebra_S(M) if kind == "S" else relation_from_algebra_C(M)
    frame = NeighborhoodFrame(D.space.order, tuple(frozenset(row) for row in relation.image), kind)
    F = frame_algebra(frame)
    embedding = Homomorphism(A, F.algebra, tuple(frame.upsets.index(U) for U in D.betas))
    if len(set(embedding.mapping)) != A.size:
        return False, "β is not injective"
    if not is_homomorphism(embedding):
        return False, "β does not preserve meets"
    for a in range(A.size):
        if F.m[embedding(a)] != embedding(M.m[a]):
            return False, f"frame operator sends β({A.names[a]}) to {F.algebra.names[F.m[embedding(a)]]}"
    return True, None


def mutate_relation(R: SMultirelation, rng: random.Random) -> SMultirelation | None:
    """
    Drop or add one pair of ``R``; mutants still satisfying both space conditions are discarded

    :param R: a valid relation
    :type R: SMultirelation
    :param rng: source of randomness
    :type rng: random.Random
    :return: an invalid mutant, or ``None`` when the chosen edit kept the relation valid
    :rtype: SMultirelation | None
    """
    X = R.space
    if not X.size:
        return None
    rows = [set(row) for row in R.image]
    x = rng.randrange(X.size)
    saturated = list(X.S)
    Z = rng.choice(saturated)
    if Z in rows[x]:
        rows[x].discard(Z)
    else:
        rows[x].add(Z)
    mutant = SMultirelation(X, rows)
    if is_S_monotonic_space(X, mutant):
        logger.debug("discarding a mutant that is still a monotonic space")
        return None
    return mutant

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from src.core.bitset import members, is_subset, submasks, full_mask
from src.core.order import all_upsets, is_directed, is_dually_directed, is_upset
from src.core.semilattice import filters, order_ideals
from src.duality.relations import MDSAlgebra
from src.duality.space import DualSpace, filter_to_closed
from src.errors import PreconditionError

logger = logging.getLogger(__name__)

# algebras above this size are checked for compactness on principal families only
COMPACTNESS_SCAN_CAP = 8


@dataclass(frozen=True)
class UpsetLattice:
    """
    ``Up(X(A))`` ordered by inclusion, the canonical extension of ``A``
    """
    base: DualSpace

    @cached_property
    def carrier(self) -> tuple[int, ...]:
        found = tuple(all_upsets(self.base.space.order))
        logger.debug("upset lattice over %d points has %d elements", self.base.space.size, len(found))
        return found

    @property
    def top(self) -> int:
        return self.base.space.universe

    def contains_algebra(self) -> bool:
        return set(self.base.betas) <= set(self.carrier)


def closed_elements(L: UpsetLattice) -> frozenset[int]:
    """
    Infima of filter images, ``{⋂β[F] : F ∈ Fi(A)}``; the improper filter contributes ``β(0) = ∅``
    """
    return frozenset(filter_to_closed(L.base, F) for F in filters(L.base.algebra))


def open_elements(L: UpsetLattice) -> frozenset[int]:
    """
    Suprema of ideal images, ``{⋃β[I] : I ∈ Id(A)}``
    """
    found = set()
    for I in order_ideals(L.base.algebra, include_empty=True):
        union = 0
        for a in members(I):
            union |= L.base.betas[a]
        found.add(union)
    return frozenset(found)


class CompletionReport(NamedTuple):
    dense: bool
    compact: bool


def is_dense_completion(L: UpsetLattice) -> bool:
    """
    Every upset is the union of the closed elements below it and the intersection of the open elements above it

    :param L: the upset lattice
    :type L: UpsetLattice
    :return: whether density holds
    :rtype: bool
    """
    closed = closed_elements(L)
    opened = open_elements(L)
    for U in L.carrier:
        below = 0
        for K in closed:
            if is_subset(K, U):
                below |= K
        above = L.top
        for O in opened:
            if is_subset(U, O):
                above &= O
        if below != U or above != U:
            return False
    return True


def is_compact_completion(L: UpsetLattice) -> bool:
    """
    Whenever ``⋂β[D] ⊆ ⋃β[U]`` for nonempty dually directed ``D`` and nonempty directed ``U``,
    some ``x ∈ D`` lies below some ``y ∈ U``.
    """
    A = L.base.algebra
    betas = L.base.betas
    if A.size > COMPACTNESS_SCAN_CAP:
        logger.warning("compactness scan restricted to singleton families for %d elements", A.size)
        lower = [1 << a for a in range(A.size)]
        upper = lower
    else:
        every = [S for S in submasks(full_mask(A.size)) if S]
        lower = [S for S in every if is_dually_directed(A.order, S)]
        upper = [S for S in every if is_directed(A.order, S)]
    for D in lower:
        infimum = L.top
        for a in members(D):
            infimum &= betas[a]
        for U in upper:
            supremum = 0
            for b in members(U):
                supremum |= betas[b]
            if is_subset(infimum, supremum) and not any(A.leq(x, y) for x in members(D) for y in members(U)):
                return False
    return True


def completion_report(L: UpsetLattice) -> CompletionReport:
    return CompletionReport(is_dense_completion(L), is_compact_completion(L))


def j_infinity(L: UpsetLattice) -> frozenset[int]:
    """
    Completely join prime upsets: nonempty, and below ``S ∪ T`` only when below ``S`` or below ``T``

    :param L: the upset lattice
    :type L: UpsetLattice
    :return: the completely join prime elements
    :rtype: frozenset[int]
    """
    carrier = L.carrier
    return frozenset(
        J for J in carrier
        if J and all(is_subset(J, S) or is_subset(J, T) for S in carrier for T in carrier if is_subset(J, S | T))
    )


def m_infinity(L: UpsetLattice) -> frozenset[int]:
    """
    Completely meet prime upsets: proper, and above ``S ∩ T`` only when above ``S`` or above ``T``
    """
    carrier = L.carrier
    return frozenset(
        M for M in carrier
        if M != L.top
        and all(is_subset(S, M) or is_subset(T, M) for S in carrier for T in carrier if is_subset(S & T, M))
    )


def prime_formulas(L: UpsetLattice) -> tuple[frozenset[int], frozenset[int]]:
    """
    ``{[P) : P}`` and ``{(P]^c : P}``
    """
    order = L.base.space.order
    return frozenset(order.ups), frozenset(L.top & ~d for d in order.downs)


def _check_upset(M: MDSAlgebra, U: int):
    if not is_upset(M.dual.space.order, U):
        raise PreconditionError(f"{M.dual.space.label(U)} is not an upset")


def m_sigma(M: MDSAlgebra, U: int) -> int:
    """
    ``m^σ(U) = ⋃{⋂{β(ma) : Y ⊆ β(a)} : U ⊇ Y ∈ K}``

    :param M: the algebra
    :type M: MDSAlgebra
    :param U: an upset of the dual space
    :type U: int
    :return: the σ-extension at ``U``
    :rtype: int
    """
    _check_upset(M, U)
    D = M.dual
    result = 0
    for Y in D.space.K:
        if not is_subset(Y, U):
            continue
        inner = D.space.universe
        for a in range(M.algebra.size):
            if is_subset(Y, D.betas[a]):
                inner &= D.betas[M.m[a]]
        result |= inner
    return result


def m_pi(M: MDSAlgebra, U: int) -> int:
    """
    ``m^π(U) = ⋂{⋃{β(ma) : Z ⊆ β(a)^c} : U^c ⊇ Z ∈ S}``
    """
    _check_upset(M, U)
    D = M.dual
    outside = D.space.universe & ~U
    result = D.space.universe
    for Z in D.space.S:
        if not is_subset(Z, outside):
            continue
        inner = 0
        for a in range(M.algebra.size):
            if not Z & D.betas[a]:
                inner |= D.betas[M.m[a]]
        result &= inner
    return result


@dataclass(frozen=True)
class ExtensionOperator:
    """
    Tabulated σ- or π-extension over every upset of the dual space
    """
    kind: str
    table: dict

    def __call__(self, U: int) -> int:
        return self.table[U]

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.table.items()))))

    def is_monotone(self) -> bool:
        return all(is_subset(self.table[U], self.table[V])
                   for U in self.table for V in self.table if is_subset(U, V))

    def squared(self) -> "ExtensionOperator":
        return ExtensionOperator(self.kind, {U: self.table[self.table[U]] for U in self.table})


def extension_operator(M: MDSAlgebra, kind: str) -> ExtensionOperator:
    """
    Tabulate ``m^σ`` (``kind='sigma'``) or ``m^π`` (``kind='pi'``)
    """
    evaluate = {"sigma": m_sigma, "pi": m_pi}[kind]
    lattice = UpsetLattice(M.dual)
    return ExtensionOperator(kind, {U: evaluate(M, U) for U in lattice.carrier})


def extensions_agree_on_algebra(M: MDSAlgebra) -> bool:
    """
    ``m^σ(β(a)) = m^π(β(a)) = β(ma)``
    """
    D = M.dual
    return all(m_sigma(M, D.betas[a]) == m_pi(M, D.betas[a]) == D.betas[M.m[a]] for a in range(M.algebra.size))


def sigma_below_pi(M: MDSAlgebra) -> bool:
    """
    ``m^σ ⊆ m^π`` on every upset, with equality on closed and open elements
    """
    lattice = UpsetLattice(M.dual)
    sigma = extension_operator(M, "sigma")
    pi = extension_operator(M, "pi")
    if not all(is_subset(sigma(U), pi(U)) for U in lattice.carrier):
        return False
    return all(sigma(U) == pi(U) for U in closed_elements(lattice) | open_elements(lattice))


def extensions_preserve_kinds(M: MDSAlgebra) -> bool:
    """
    ``m^σ`` keeps closed elements closed and ``m^π`` keeps open elements open
    """
    lattice = UpsetLattice(M.dual)
    closed = closed_elements(lattice)
    opened = open_elements(lattice)
    return all(m_sigma(M, K) in closed for K in closed) and all(m_pi(M, O) in opened for O in opened)

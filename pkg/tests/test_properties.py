import random

from hypothesis import given, settings, strategies as st

from src.core.semilattice import filters, irreducible_filters, is_distributive
from src.duality.axioms import axiom_report, four_axioms_check
from src.duality.extension import extensions_agree_on_algebra, sigma_below_pi
from src.duality.morphisms import identity_relation, is_monotonic_meet_relation, s_h
from src.duality.relations import (
    relation_from_algebra_S,
    relation_from_algebra_C,
    is_S_monotonic_space,
    equivalent_conditions,
    g_from_r,
    r_from_g,
    representation_holds,
    m_R,
)
from src.duality.space import filter_closed_bijection, ideal_saturated_bijection
from src.services.generator import random_mds, random_homomorphism


@st.composite
def algebras(draw, max_size: int = 5):
    seed = draw(st.integers(min_value=0, max_value=10 ** 6))
    return random_mds(random.Random(seed), max_size)


@settings(max_examples=30, deadline=None)
@given(algebras())
def test_representation(M):
    assert is_distributive(M.algebra).holds
    assert representation_holds(M)
    assert filter_closed_bijection(M.dual)
    assert ideal_saturated_bijection(M.dual)


@settings(max_examples=30, deadline=None)
@given(algebras())
def test_irreducible_filters_are_points(M):
    assert list(M.dual.points) == list(irreducible_filters(M.algebra))
    assert set(M.dual.points) <= set(filters(M.algebra))


@settings(max_examples=30, deadline=None)
@given(algebras())
def test_dual_relation_is_a_monotonic_space(M):
    X = M.dual.space
    R = relation_from_algebra_S(M)
    assert is_S_monotonic_space(X, R)
    assert all(equivalent_conditions(X, R))
    assert all(m_R(R, M.dual.betas[a]) == M.dual.betas[M.m[a]] for a in range(M.algebra.size))


@settings(max_examples=30, deadline=None)
@given(algebras())
def test_sides_are_interdefinable(M):
    X = M.dual.space
    R, G = relation_from_algebra_S(M), relation_from_algebra_C(M)
    assert g_from_r(X, R) == G
    assert r_from_g(X, G) == R


@settings(max_examples=30, deadline=None)
@given(algebras())
def test_axioms_agree_with_relations(M):
    assert all(verdict.agree for verdict in axiom_report(M))
    assert four_axioms_check(M).agree


@settings(max_examples=20, deadline=None)
@given(algebras(max_size=4))
def test_extensions(M):
    assert extensions_agree_on_algebra(M)
    assert sigma_below_pi(M)


@settings(max_examples=20, deadline=None)
@given(algebras(max_size=4), st.integers(min_value=0, max_value=10 ** 6))
def test_monotonic_homomorphisms_match_relations(M, seed):
    h = random_homomorphism(random.Random(seed), M.algebra, M.algebra)
    R = relation_from_algebra_S(M)
    verdict = is_monotonic_meet_relation(s_h(h), R, R)
    assert verdict.agree
    assert is_monotonic_meet_relation(identity_relation(M.dual.space), R, R).relational

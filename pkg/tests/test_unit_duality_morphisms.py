import random
import unittest
from pathlib import Path

from src.core.semilattice import Homomorphism
from src.duality.morphisms import (
    MeetRelation,
    h_S,
    h_s_homomorphism,
    s_h,
    is_meet_relation,
    is_monotonic_meet_relation,
    inverse_image_identity,
    compose,
    identity_relation,
    is_space_isomorphism,
    h_x_monotonic_check,
    dual_equivalence_check,
)
from src.duality.relations import MDSAlgebra, relation_from_algebra_S
from src.errors import InvalidStructure, PreconditionError
from src.repository.documents import load, to_algebra
from src.services.generator import random_homomorphism

FIXTURES = Path(__file__).parent.parent / "fixtures"


class TestMeetRelations(unittest.TestCase):
    def setUp(self) -> None:
        self.M = to_algebra(load(FIXTURES / "diamond_m.txt"))
        self.X = self.M.dual.space

    def test_identity_is_the_order(self):
        order = identity_relation(self.X)
        self.assertTrue(all(h_S(order, U) == U for U in self.X.D))
        self.assertEqual(s_h(Homomorphism.identity(self.M.algebra)).image, order.image)

    def test_rejects_non_meet_relation(self):
        chain = to_algebra(load(FIXTURES / "chain3.txt")).dual.space
        # S(P2) = {P1} is not closed
        self.assertFalse(is_meet_relation(chain, chain, (0b11, 0b01)))
        with self.assertRaises(InvalidStructure):
            MeetRelation(chain, chain, (0b11, 0b01))

    def test_h_s_is_a_homomorphism(self):
        h = h_s_homomorphism(identity_relation(self.X))
        self.assertEqual(h.mapping, tuple(range(4)))

    def test_s_h_needs_homomorphism(self):
        with self.assertRaises(InvalidStructure):
            s_h(Homomorphism(self.M.algebra, self.M.algebra, (0, 1, 1, 3)))

    def test_inverse_image(self):
        self.assertTrue(inverse_image_identity(identity_relation(self.X)))

    def test_compose_with_identity(self):
        order = identity_relation(self.X)
        self.assertEqual(compose(order, order).image, order.image)


class TestMonotonicMeetRelations(unittest.TestCase):
    def setUp(self) -> None:
        self.M = to_algebra(load(FIXTURES / "diamond_m.txt"))
        self.R = relation_from_algebra_S(self.M)

    def test_identity_commutes(self):
        S = s_h(Homomorphism.identity(self.M.algebra))
        verdict = is_monotonic_meet_relation(S, self.R, self.R)
        self.assertTrue(verdict.relational)
        self.assertTrue(verdict.commutes)

    def test_identity_into_other_operator(self):
        plain = MDSAlgebra.identity(self.M.algebra)
        S = s_h(Homomorphism.identity(self.M.algebra))
        verdict = is_monotonic_meet_relation(S, relation_from_algebra_S(plain), self.R)
        self.assertFalse(verdict.relational)
        self.assertFalse(verdict.commutes)
        self.assertTrue(verdict.agree)

    def test_foreign_relations(self):
        chain = to_algebra(load(FIXTURES / "chain3.txt"))
        S = s_h(Homomorphism.identity(self.M.algebra))
        with self.assertRaises(InvalidStructure):
            is_monotonic_meet_relation(S, relation_from_algebra_S(chain), self.R)

    def test_h_x_is_an_isomorphism(self):
        self.assertTrue(h_x_monotonic_check(self.M.dual.space, self.R))

    def test_swap_is_not_an_isomorphism(self):
        self.assertTrue(is_space_isomorphism((0, 1), self.R, self.R))
        self.assertFalse(is_space_isomorphism((1, 0), self.R, self.R))


class TestDualEquivalence(unittest.TestCase):
    def test_fixtures_with_identities(self):
        algebras = [to_algebra(load(FIXTURES / "chain3.txt")), to_algebra(load(FIXTURES / "diamond_m.txt"))]
        arrows = [(i, i, Homomorphism.identity(M.algebra)) for i, M in enumerate(algebras)]
        self.assertTrue(dual_equivalence_check(algebras, arrows).holds)

    def test_random_homomorphisms(self):
        rng = random.Random(7)
        algebras = [to_algebra(load(FIXTURES / "diamond_m.txt")), to_algebra(load(FIXTURES / "chain3.txt"))]
        arrows = [(i, j, random_homomorphism(rng, algebras[i].algebra, algebras[j].algebra))
                  for i in range(2) for j in range(2) for _ in range(3)]
        self.assertTrue(dual_equivalence_check(algebras, arrows).holds)

    def test_arrow_must_connect_listed_algebras(self):
        algebras = [to_algebra(load(FIXTURES / "chain3.txt"))]
        diamond = to_algebra(load(FIXTURES / "diamond.txt"))
        with self.assertRaises(PreconditionError):
            dual_equivalence_check(algebras, [(0, 0, Homomorphism.identity(diamond.algebra))])


if __name__ == '__main__':
    unittest.main()

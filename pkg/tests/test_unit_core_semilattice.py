import unittest

from src.core.bitset import mask_of
from src.core.order import Poset
from src.core.semilattice import (
    MeetSemilattice,
    Homomorphism,
    natural_order,
    is_distributive,
    is_filter,
    is_order_ideal,
    filters,
    order_ideals,
    filter_generated,
    irreducible_filters,
    irreducibility_equivalents,
    separation_witness,
    is_homomorphism,
    is_mds_homomorphism,
)
from src.errors import InvalidStructure, PreconditionError


def chain3() -> MeetSemilattice:
    return MeetSemilattice.from_order(Poset.chain(3), ("0", "c", "1"))


def diamond() -> MeetSemilattice:
    below = {(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}
    order = Poset.from_relation(4, lambda i, j: i == j or (i, j) in below)
    return MeetSemilattice.from_order(order, ("0", "a", "b", "1"))


def m3() -> MeetSemilattice:
    order = Poset.from_relation(5, lambda i, j: i == j or i == 0 or j == 4)
    return MeetSemilattice.from_order(order, ("0", "a", "b", "c", "1"))


def elements(A: MeetSemilattice, *names: str) -> int:
    return mask_of(A.index(name) for name in names)


class TestMeetSemilattice(unittest.TestCase):
    def setUp(self) -> None:
        self.diamond = diamond()

    def test_meets_and_joins(self):
        A = self.diamond
        self.assertEqual(A.meet[A.index("a")][A.index("b")], A.index("0"))
        self.assertEqual(A.join(A.index("a"), A.index("b")), A.index("1"))
        self.assertEqual(A.bottom, A.index("0"))
        self.assertTrue(A.leq(A.index("0"), A.index("a")))

    def test_natural_order(self):
        self.assertEqual(natural_order(chain3()).ups, Poset.chain(3).ups)

    def test_empty_meet_is_top(self):
        self.assertEqual(self.diamond.meet_of(0), self.diamond.top)

    def test_rejects_non_commutative_table(self):
        with self.assertRaises(InvalidStructure) as e:
            MeetSemilattice(((0, 0), (1, 1)), 1, ("x", "y"))
        self.assertIn("meet is not commutative", e.exception.detail)

    def test_rejects_missing_top(self):
        with self.assertRaises(InvalidStructure):
            MeetSemilattice.from_order(Poset.antichain(2))

    def test_unknown_name(self):
        with self.assertRaises(InvalidStructure):
            self.diamond.index("z")


class TestDistributivity(unittest.TestCase):
    def test_chain_and_diamond_are_distributive(self):
        self.assertTrue(is_distributive(chain3()).holds)
        self.assertTrue(is_distributive(diamond()).holds)

    def test_m3_fails_with_atoms_as_witness(self):
        verdict = is_distributive(m3())
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness, (1, 2, 3))


class TestFiltersAndIdeals(unittest.TestCase):
    def setUp(self) -> None:
        self.diamond = diamond()
        self.chain = chain3()

    def test_filters_are_principal(self):
        A = self.diamond
        self.assertEqual(set(filters(A)), {A.universe, elements(A, "a", "1"), elements(A, "b", "1"),
                                            elements(A, "1")})
        self.assertTrue(all(is_filter(A, F) for F in filters(A)))

    def test_not_a_filter(self):
        self.assertFalse(is_filter(self.diamond, elements(self.diamond, "a", "b", "1")))

    def test_order_ideals_admit_empty(self):
        ideals = order_ideals(self.diamond, include_empty=True)
        self.assertIn(0, ideals)
        self.assertEqual(len(ideals), 5)
        self.assertNotIn(0, order_ideals(self.diamond, include_empty=False))

    def test_downset_of_atoms_is_not_an_ideal(self):
        self.assertFalse(is_order_ideal(self.diamond, elements(self.diamond, "0", "a", "b")))

    def test_generated_filter(self):
        A = self.diamond
        self.assertEqual(filter_generated(A, elements(A, "a", "b")), A.universe)
        self.assertEqual(filter_generated(A, 0), elements(A, "1"))

    def test_irreducible_filters_of_diamond(self):
        A = self.diamond
        self.assertEqual(list(irreducible_filters(A)), [elements(A, "a", "1"), elements(A, "b", "1")])

    def test_irreducible_filters_of_chain(self):
        A = self.chain
        self.assertEqual(list(irreducible_filters(A)), [elements(A, "1"), elements(A, "c", "1")])

    def test_characterizations_agree(self):
        A = self.diamond
        top_only = irreducibility_equivalents(A, elements(A, "1"))
        self.assertEqual(tuple(top_only), (False, False, False))
        prime = irreducibility_equivalents(A, elements(A, "a", "1"))
        self.assertEqual(tuple(prime), (True, True, True))
        self.assertTrue(prime.agree)

    def test_characterizations_need_proper_filter(self):
        with self.assertRaises(PreconditionError):
            irreducibility_equivalents(self.diamond, self.diamond.universe)

    def test_characterizations_need_distributivity(self):
        with self.assertRaises(PreconditionError):
            irreducibility_equivalents(m3(), elements(m3(), "1"))

    def test_separation_witness(self):
        A = self.diamond
        found = separation_witness(A, elements(A, "a", "1"), elements(A, "0", "b"))
        self.assertEqual(found, elements(A, "a", "1"))

    def test_separation_from_top_filter(self):
        A = self.diamond
        found = separation_witness(A, elements(A, "1"), elements(A, "0", "a"))
        self.assertEqual(found, elements(A, "b", "1"))

    def test_separation_needs_disjointness(self):
        A = self.diamond
        with self.assertRaises(PreconditionError):
            separation_witness(A, elements(A, "a", "1"), elements(A, "0", "a"))


class TestHomomorphism(unittest.TestCase):
    def setUp(self) -> None:
        self.diamond = diamond()
        self.chain = chain3()

    def test_identity(self):
        h = Homomorphism.identity(self.diamond)
        self.assertTrue(is_homomorphism(h))
        self.assertEqual(h.then(h).mapping, h.mapping)

    def test_constant_top(self):
        h = Homomorphism(self.diamond, self.chain, (2, 2, 2, 2))
        self.assertTrue(is_homomorphism(h))
        self.assertEqual(h.preimage(elements(self.chain, "1")), self.diamond.universe)

    def test_map_breaking_meets(self):
        h = Homomorphism(self.diamond, self.chain, (0, 1, 1, 2))
        self.assertFalse(is_homomorphism(h))

    def test_rejects_short_map(self):
        with self.assertRaises(InvalidStructure):
            Homomorphism(self.diamond, self.chain, (0, 1))

    def test_commutes_with_operators(self):
        h = Homomorphism.identity(self.diamond)
        m = (0, 3, 2, 3)
        self.assertTrue(is_mds_homomorphism(h, m, m))
        self.assertFalse(is_mds_homomorphism(h, m, (0, 1, 2, 3)))


if __name__ == '__main__':
    unittest.main()

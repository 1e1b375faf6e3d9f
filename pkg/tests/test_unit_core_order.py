import unittest

from src.core.bitset import mask_of, members, submasks, count, full_mask
from src.core.order import (
    Poset,
    SubsetFamily,
    up_closure,
    down_closure,
    is_directed,
    is_dually_directed,
    is_upset,
    all_upsets,
    all_downsets,
    minimal,
    maximal,
)
from src.errors import InvalidStructure

# 0 <= a, b <= 1 with indices 0, 1, 2, 3
DIAMOND_ORDER = {(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}


def diamond() -> Poset:
    return Poset.from_relation(4, lambda i, j: i == j or (i, j) in DIAMOND_ORDER)


class TestBitset(unittest.TestCase):
    def test_mask_round_trip(self):
        self.assertEqual(list(members(mask_of([0, 2, 5]))), [0, 2, 5])
        self.assertEqual(count(mask_of([0, 2, 5])), 3)

    def test_submasks_cover_every_subset(self):
        found = list(submasks(0b101))
        self.assertEqual(sorted(found), [0b000, 0b001, 0b100, 0b101])
        self.assertEqual(found[-1], 0)


class TestPoset(unittest.TestCase):
    def setUp(self) -> None:
        self.chain = Poset.chain(3)
        self.diamond = diamond()

    def test_rejects_cycle(self):
        with self.assertRaises(InvalidStructure) as e:
            Poset(2, (0b11, 0b11))
        self.assertIn("antisymmetric", e.exception.detail)

    def test_rejects_missing_transitivity(self):
        with self.assertRaises(InvalidStructure):
            Poset(3, (0b011, 0b110, 0b100))

    def test_rejects_non_reflexive(self):
        with self.assertRaises(InvalidStructure):
            Poset(2, (0b10, 0b10))

    def test_downs_mirror_ups(self):
        self.assertEqual(self.chain.downs, (0b001, 0b011, 0b111))

    def test_covers_of_diamond(self):
        self.assertEqual(sorted(self.diamond.covers()), [(0, 1), (0, 2), (1, 3), (2, 3)])

    def test_linear_extension_respects_order(self):
        order = self.diamond.linear_extension()
        position = {x: i for i, x in enumerate(order)}
        for i, j in DIAMOND_ORDER:
            self.assertLess(position[i], position[j])


class TestClosures(unittest.TestCase):
    def setUp(self) -> None:
        self.chain = Poset.chain(3)
        self.diamond = diamond()

    def test_up_closure_in_chain(self):
        self.assertEqual(up_closure(self.chain, 0b010), 0b110)

    def test_up_closure_of_empty(self):
        self.assertEqual(up_closure(self.diamond, 0), 0)

    def test_up_closure_of_bottom_is_everything(self):
        self.assertEqual(up_closure(self.diamond, 0b0001), 0b1111)

    def test_down_closure(self):
        self.assertEqual(down_closure(self.chain, 0b010), 0b011)
        self.assertEqual(down_closure(self.chain, 0b111), 0b111)
        self.assertEqual(down_closure(self.diamond, 0b0010), 0b0011)

    def test_out_of_range(self):
        with self.assertRaises(InvalidStructure):
            up_closure(self.chain, 0b1000)

    def test_directed(self):
        self.assertTrue(is_directed(self.chain, 0b111))
        self.assertFalse(is_directed(self.diamond, 0b0110))
        self.assertTrue(is_directed(self.diamond, 0))
        self.assertTrue(is_dually_directed(self.diamond, 0))
        self.assertFalse(is_dually_directed(self.diamond, 0b0110))
        self.assertTrue(is_dually_directed(self.diamond, 0b0111))


class TestFamilies(unittest.TestCase):
    def test_upsets_of_chain(self):
        self.assertEqual(list(all_upsets(Poset.chain(3))), [0b000, 0b100, 0b110, 0b111])

    def test_upsets_of_antichain_are_all_subsets(self):
        self.assertEqual(len(all_upsets(Poset.antichain(3))), 8)

    def test_upsets_of_diamond(self):
        upsets = all_upsets(diamond())
        self.assertEqual(len(upsets), 6)
        self.assertTrue(all(is_upset(diamond(), U) for U in upsets))
        self.assertTrue(upsets.is_closed_under_intersection())
        self.assertTrue(upsets.is_closed_under_union())

    def test_downsets_are_complements(self):
        P = diamond()
        self.assertEqual({full_mask(4) ^ U for U in all_upsets(P)}, set(all_downsets(P)))

    def test_family_is_sorted_and_deduplicated(self):
        family = SubsetFamily(Poset.chain(2), (0b11, 0b01, 0b11))
        self.assertEqual(family.members, (0b01, 0b11))
        self.assertIn(0b01, family)
        self.assertEqual(family.index(0b11), 1)

    def test_family_rejects_foreign_members(self):
        with self.assertRaises(InvalidStructure):
            SubsetFamily(Poset.chain(2), (0b100,))

    def test_extremes(self):
        P = diamond()
        self.assertEqual(minimal(P, 0b0110), [1, 2])
        self.assertEqual(maximal(P, 0b1111), [3])


if __name__ == '__main__':
    unittest.main()

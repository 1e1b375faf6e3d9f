import random
import unittest
from pathlib import Path

from src.core.order import Poset
from src.core.semilattice import is_distributive, is_homomorphism
from src.duality.relations import is_monotonic
from src.repository.documents import load, to_algebra
from src.services.generator import (
    upset_algebra,
    catalog,
    random_semilattice,
    random_operator,
    random_mds,
    random_homomorphism,
    random_frame,
    subalgebra,
    shrink,
    instance_stream,
)

FIXTURES = Path(__file__).parent.parent / "fixtures"


class TestCatalog(unittest.TestCase):
    def test_upset_algebra_of_antichain(self):
        A = upset_algebra(Poset.antichain(2))
        self.assertEqual(A.size, 4)
        self.assertEqual(A.names[A.top], "{p0,p1}")
        self.assertTrue(is_distributive(A).holds)

    def test_counts_by_size(self):
        sizes = [A.size for A in catalog(6)]
        self.assertEqual(sizes, [1, 2, 3, 4, 4, 5, 5, 5, 6, 6, 6, 6, 6])

    def test_every_member_is_distributive(self):
        self.assertTrue(all(is_distributive(A).holds for A in catalog(5)))

    def test_empty_catalog(self):
        self.assertEqual(catalog(0), [])


class TestRandomInstances(unittest.TestCase):
    def test_semilattice_respects_size(self):
        rng = random.Random(11)
        for _ in range(20):
            A = random_semilattice(rng, 5)
            self.assertLessEqual(A.size, 5)
            self.assertTrue(is_distributive(A).holds)

    def test_operator_is_monotonic(self):
        rng = random.Random(5)
        A = upset_algebra(Poset.chain(3))
        for _ in range(10):
            self.assertTrue(is_monotonic(A, random_operator(rng, A)))

    def test_homomorphism(self):
        rng = random.Random(2)
        A = upset_algebra(Poset.antichain(2))
        B = upset_algebra(Poset.chain(2))
        for _ in range(10):
            h = random_homomorphism(rng, A, B)
            self.assertTrue(is_homomorphism(h))
            self.assertEqual(h(A.top), B.top)

    def test_frames_satisfy_their_condition(self):
        rng = random.Random(3)
        for kind in ("S", "C"):
            frame = random_frame(rng, 3, kind)
            self.assertEqual(frame.kind, kind)

    def test_stream_is_deterministic(self):
        first = list(instance_stream(1, 5, 4))
        second = list(instance_stream(1, 5, 4))
        self.assertEqual(first, second)
        self.assertEqual(first[0][0], "fuzz-1-0000")

    def test_random_mds(self):
        M = random_mds(random.Random(8), 6)
        self.assertLessEqual(M.algebra.size, 6)


class TestShrinking(unittest.TestCase):
    def setUp(self) -> None:
        self.M = to_algebra(load(FIXTURES / "diamond_m.txt"))

    def test_subalgebra(self):
        A = self.M.algebra
        sub = subalgebra(self.M, 1 << A.index("b"))
        self.assertEqual(sub.algebra.names, ("b", "1"))
        self.assertEqual(sub.m, (0, 1))
        self.assertIsNone(subalgebra(self.M, A.universe))

    def test_shrinks_to_the_top(self):
        self.assertEqual(shrink(self.M, lambda M: True).algebra.size, 1)

    def test_stops_when_failure_disappears(self):
        shrunk = shrink(self.M, lambda M: M.algebra.size >= 3)
        self.assertEqual(shrunk.algebra.names, ("0", "b", "1"))


if __name__ == '__main__':
    unittest.main()

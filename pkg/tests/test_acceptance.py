import math
import random
import unittest

from src.core.semilattice import Homomorphism
from src.duality.axioms import boolean_duality_check
from src.duality.extension import extensions_agree_on_algebra, sigma_below_pi
from src.duality.morphisms import dual_equivalence_check
from src.duality.relations import (
    MDSAlgebra,
    relation_from_algebra_S,
    equivalent_conditions,
    representation_holds,
    mutate_relation,
)
from src.errors import PreconditionError
from src.services.generator import (
    catalog,
    catalog_stream,
    random_operator,
    random_mds,
    random_homomorphism,
    random_box,
    monotone_boxes,
)
from src.services.verifier import sweep_catalog


class TestCatalogRepresentation(unittest.TestCase):
    def test_every_catalog_semilattice_with_many_operators(self):
        rng = random.Random(11)
        algebras = catalog(6)
        per_algebra = math.ceil(500 / len(algebras))
        checked = 0
        for A in algebras:
            self.assertTrue(representation_holds(MDSAlgebra.identity(A)), A.names)
            for _ in range(per_algebra):
                M = MDSAlgebra(A, random_operator(rng, A))
                self.assertTrue(representation_holds(M), (A.names, M.m))
                checked += 1
        self.assertGreaterEqual(checked, 500)

    def test_catalog_stream_ids(self):
        items = list(catalog_stream(3, 2, 3))
        self.assertEqual([instance for instance, _ in items],
                         ["catalog-00-000", "catalog-00-001", "catalog-01-000", "catalog-01-001",
                          "catalog-02-000", "catalog-02-001"])
        self.assertEqual(items, list(catalog_stream(3, 2, 3)))

    def test_representation_suite_over_the_catalog(self):
        report = sweep_catalog(seed=2, operators=2, max_size=6, suite="representation", workers=1, timing=False)
        self.assertEqual(report.count, 2 * len(catalog(6)))
        self.assertTrue(report.passed, [r.instance for r in report.reports if not r.passed])
        self.assertEqual(report.counterexamples, [])


class TestExtensions(unittest.TestCase):
    def test_sigma_below_pi(self):
        rng = random.Random(5)
        for _ in range(200):
            M = random_mds(rng, 6)
            self.assertLessEqual(M.dual.space.size, 6)
            self.assertTrue(extensions_agree_on_algebra(M), M.m)
            self.assertTrue(sigma_below_pi(M), M.m)


class TestMutatedRelations(unittest.TestCase):
    def test_conditions_fail_together(self):
        rng = random.Random(13)
        mutants = 0
        for _ in range(500):
            M = random_mds(rng, 6)
            R = relation_from_algebra_S(M)
            X = R.space
            self.assertEqual(tuple(equivalent_conditions(X, R)), (True, True, True))
            mutant = mutate_relation(R, rng)
            if mutant is None:
                continue
            mutants += 1
            try:
                verdict = equivalent_conditions(X, mutant)
            except PreconditionError:
                continue
            self.assertEqual(tuple(verdict), (False, False, False), mutant.pairs())
            if mutants >= 60:
                break
        self.assertGreaterEqual(mutants, 50)


class TestCategoryLaws(unittest.TestCase):
    def test_generated_homomorphisms(self):
        rng = random.Random(17)
        algebras = [random_mds(rng, 5) for _ in range(4)]
        arrows = [(i, i, Homomorphism.identity(M.algebra)) for i, M in enumerate(algebras)]
        while len(arrows) < 104:
            i, j = rng.randrange(len(algebras)), rng.randrange(len(algebras))
            arrows.append((i, j, random_homomorphism(rng, algebras[i].algebra, algebras[j].algebra)))
        self.assertTrue(any(i != j for i, j, _ in arrows))
        report = dual_equivalence_check(algebras, arrows)
        self.assertTrue(report.holds, report)


class TestBooleanCollapse(unittest.TestCase):
    def test_small_powersets_exhaustively(self):
        boxes = list(monotone_boxes(1)) + list(monotone_boxes(2))
        self.assertEqual(len(list(monotone_boxes(1))), 3)
        for B in boxes:
            self.assertTrue(boolean_duality_check(B).holds, B.box)

    def test_sampled_boxes_on_three_atoms(self):
        rng = random.Random(19)
        for _ in range(1000):
            B = random_box(rng, 3)
            self.assertTrue(boolean_duality_check(B).holds, B.box)


if __name__ == '__main__':
    unittest.main()

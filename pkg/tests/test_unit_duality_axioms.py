import unittest
from unittest.mock import patch
from pathlib import Path

from src.duality.axioms import (
    PASS,
    FAIL,
    SKIPPED,
    BooleanMDS,
    axiom_report,
    four_axioms_check,
    r_bar,
    r_squared,
    is_transitive,
    is_weakly_dense,
    ideal_lemma_bridge,
    ideal_lemma_cases,
    g_squared_bridge,
    g_squared_cases,
    canonicity_check,
    is_modal,
    is_normal_space,
    s_from_r,
    r_from_s,
    normal_translation_check,
    meet_relation_triviality,
    gehrke_relation_check,
    is_boolean,
    boolean_from_algebra,
    boolean_duality_check,
)
from src.duality import axioms as axioms_module
from src.duality.morphisms import identity_relation
from src.duality.relations import MDSAlgebra, relation_from_algebra_S, relation_from_algebra_C
from src.errors import InvalidStructure, PreconditionError
from src.repository.documents import load, to_algebra, to_semilattice

FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture(name: str) -> MDSAlgebra:
    return to_algebra(load(FIXTURES / f"{name}.txt"))


def growing_chain() -> MDSAlgebra:
    # 0 -> c -> 1 -> 1
    return MDSAlgebra(fixture("chain3").algebra, (1, 2, 2))


class TestAxioms(unittest.TestCase):
    def test_diamond_m(self):
        verdicts = {verdict.name: verdict for verdict in axiom_report(fixture("diamond_m"))}
        self.assertEqual(tuple(verdicts["m1=1"])[1:], (True, True, True))
        self.assertEqual(tuple(verdicts["m0=0"])[1:], (True, True, True))
        self.assertEqual(tuple(verdicts["ma<=a"])[1:], (False, False, False))
        self.assertEqual(tuple(verdicts["a<=ma"])[1:], (True, True, True))

    def test_identity_satisfies_everything(self):
        M = MDSAlgebra.identity(fixture("chain3").algebra)
        for verdict in axiom_report(M):
            self.assertTrue(verdict.algebraic, verdict.name)
            self.assertTrue(verdict.agree, verdict.name)

    def test_growing_chain(self):
        verdicts = axiom_report(growing_chain())
        self.assertTrue(all(verdict.agree for verdict in verdicts))
        self.assertFalse(verdicts[1].algebraic)


class TestFourAxioms(unittest.TestCase):
    def test_idempotent_operator(self):
        report = four_axioms_check(fixture("diamond_m"))
        self.assertTrue(report.box_four)
        self.assertTrue(report.diamond_four)
        self.assertTrue(report.agree)

    def test_r_squared_of_idempotent_operator(self):
        R = relation_from_algebra_S(fixture("diamond_m"))
        self.assertEqual(r_squared(R), R)
        self.assertTrue(is_transitive(R))
        self.assertTrue(is_weakly_dense(R))

    def test_r_bar(self):
        bar = r_bar(relation_from_algebra_S(fixture("diamond_m")))
        self.assertIn((0b11, 0b11), bar)
        self.assertIn((0b01, 0b01), bar)
        self.assertNotIn((0b10, 0b01), bar)
        self.assertIn((0, 0b10), bar)

    def test_growing_chain(self):
        report = four_axioms_check(growing_chain())
        self.assertEqual(tuple(report), (True, True, True, False, False, False))
        self.assertTrue(report.agree)

    def test_bridges(self):
        for M in (fixture("diamond_m"), growing_chain(), fixture("bool4")):
            self.assertTrue(ideal_lemma_bridge(M))
            self.assertTrue(g_squared_bridge(M))

    def test_bridge_cases_take_both_values(self):
        M = fixture("diamond_m")
        for cases in (ideal_lemma_cases(M), g_squared_cases(M)):
            self.assertIn((True, True), cases)
            self.assertIn((False, False), cases)

    def test_bridges_where_r_is_not_weakly_dense(self):
        M = growing_chain()
        R = relation_from_algebra_S(M)
        self.assertFalse(is_weakly_dense(R))
        self.assertNotEqual(r_squared(R), R)
        self.assertEqual(set(ideal_lemma_cases(M)), {(False, False)})
        self.assertTrue(ideal_lemma_bridge(M))
        self.assertTrue(g_squared_bridge(M))

    def test_bridges_reject_a_wrong_square(self):
        M = growing_chain()
        with patch.object(axioms_module, "r_squared", return_value=relation_from_algebra_S(M)):
            self.assertFalse(ideal_lemma_bridge(M))
        with patch.object(axioms_module, "g_squared", return_value=relation_from_algebra_C(M)):
            self.assertFalse(g_squared_bridge(M))


class TestCanonicity(unittest.TestCase):
    def test_both_checks_pass(self):
        self.assertEqual(tuple(canonicity_check(fixture("diamond_m"))), (PASS, PASS))

    def test_skips_when_axiom_fails(self):
        report = canonicity_check(growing_chain())
        self.assertEqual(report.pi_diamond_four, SKIPPED)
        self.assertEqual(report.sigma_box_four, PASS)

    def test_fails_when_the_box_is_not_idempotent(self):
        def swap(R, U):
            return (U & 0b01) << 1 | (U & 0b10) >> 1

        with patch.object(axioms_module, "m_R", side_effect=swap):
            report = canonicity_check(fixture("diamond_m"))
        self.assertEqual(tuple(report), (FAIL, PASS))


class TestModalOperators(unittest.TestCase):
    def test_modal(self):
        self.assertTrue(is_modal(fixture("bool4")))
        self.assertFalse(is_modal(fixture("diamond_m")))

    def test_normal_space(self):
        for name, expected in (("bool4", True), ("diamond_m", False)):
            M = fixture(name)
            self.assertEqual(is_normal_space(M.dual.space, relation_from_algebra_S(M)), expected)

    def test_point_relation_needs_normal_space(self):
        M = fixture("diamond_m")
        with self.assertRaises(PreconditionError):
            s_from_r(M.dual.space, relation_from_algebra_S(M))

    def test_translation(self):
        M = fixture("bool4")
        report = normal_translation_check(M.dual.space, relation_from_algebra_S(M))
        self.assertTrue(report.holds)

    def test_meet_relation_triviality(self):
        X = fixture("chain3").dual.space
        order = identity_relation(X)
        self.assertTrue(meet_relation_triviality(order))
        self.assertEqual(r_from_s(order).space, X)

    def test_point_relation_formulas(self):
        self.assertTrue(gehrke_relation_check(fixture("bool4")).holds)
        with self.assertRaises(PreconditionError):
            gehrke_relation_check(fixture("diamond_m"))


class TestBoolean(unittest.TestCase):
    def test_is_boolean(self):
        self.assertTrue(is_boolean(to_semilattice(load(FIXTURES / "diamond.txt"))))
        self.assertFalse(is_boolean(to_semilattice(load(FIXTURES / "chain3.txt"))))
        self.assertFalse(is_boolean(to_semilattice(load(FIXTURES / "m3.txt"))))

    def test_carry_onto_powerset(self):
        B = boolean_from_algebra(fixture("bool4"))
        self.assertEqual(B.atoms, 2)
        self.assertEqual(B.box, (0, 0, 0, 3))
        self.assertEqual(B.diamond, (0, 3, 3, 3))

    def test_not_boolean(self):
        with self.assertRaises(PreconditionError):
            boolean_from_algebra(fixture("chain3"))

    def test_duality(self):
        report = boolean_duality_check(boolean_from_algebra(fixture("bool4")))
        self.assertTrue(report.holds)

    def test_validation(self):
        with self.assertRaises(InvalidStructure):
            BooleanMDS(1, (1, 0))
        with self.assertRaises(InvalidStructure):
            BooleanMDS(1, (0, 0), normal=True)


if __name__ == '__main__':
    unittest.main()

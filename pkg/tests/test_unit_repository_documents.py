import tempfile
import unittest
from pathlib import Path

from src.duality.relations import SMultirelation, relation_from_algebra_S
from src.duality.space import DSSpace
from src.errors import DocumentError
from src.repository.documents import (
    parse,
    parse_text,
    parse_json,
    parse_algebra,
    serialize_text,
    serialize_json,
    load,
    save,
    to_algebra,
    from_algebra,
    to_space,
    from_space,
    to_relation,
    from_relation,
    load_instance,
)
from src.schemas import AlgebraDocument, RelationDocument

FIXTURES = Path(__file__).parent.parent / "fixtures"

NON_COMMUTATIVE = """
name: broken
elements: 0 a
top: a
meet:
  0 = 0 0
  a = a a
"""


class TestParsing(unittest.TestCase):
    def test_text_document(self):
        doc = load(FIXTURES / "diamond_m.txt")
        self.assertIsInstance(doc, AlgebraDocument)
        self.assertEqual(doc.name, "diamond_m")
        self.assertEqual(doc.elements, ["0", "a", "b", "1"])
        self.assertEqual(doc.meet["a"]["b"], "0")
        self.assertEqual(doc.operator["a"], "1")

    def test_text_and_json_agree(self):
        for name in ("chain3", "diamond", "diamond_m", "m3", "bool4", "diamond_m_mutated"):
            with self.subTest(name=name):
                self.assertEqual(load(FIXTURES / f"{name}.txt"), load(FIXTURES / f"{name}.json"))

    def test_serialized_text_parses_back(self):
        doc = load(FIXTURES / "diamond_m.txt")
        self.assertEqual(parse_text(serialize_text(doc)), doc)
        relation = load(FIXTURES / "diamond_m_dual.txt")
        self.assertEqual(parse(serialize_text(relation)), relation)

    def test_json_dispatch(self):
        doc = load(FIXTURES / "diamond_m_dual.txt")
        self.assertIsInstance(parse(serialize_json(doc)), RelationDocument)

    def test_missing_operator_means_identity(self):
        M = to_algebra(load(FIXTURES / "diamond.txt"))
        self.assertEqual(M.m, (0, 1, 2, 3))

    def test_non_commutative_table(self):
        with self.assertRaises(DocumentError) as e:
            parse_text(NON_COMMUTATIVE)
        self.assertIn("meet is not commutative: 0∧a=0 but a∧0=a", e.exception.detail)

    def test_indented_row_without_block(self):
        with self.assertRaises(DocumentError) as e:
            parse_text("  0 = 0\n")
        self.assertIn("line 1", e.exception.detail)

    def test_duplicate_rows(self):
        text = (FIXTURES / "diamond_m.txt").read_text(encoding="utf-8")
        with self.assertRaises(DocumentError) as e:
            parse_text(text.replace("  b = 0 0 b b", "  a = 0 a 0 a"))
        self.assertIn("meet row for 'a' given twice", e.exception.detail)
        with self.assertRaises(DocumentError) as e:
            parse_text(text.replace("  b -> b", "  a -> 1"))
        self.assertIn("operator row for 'a' given twice", e.exception.detail)

    def test_bad_json(self):
        with self.assertRaises(DocumentError):
            parse_json("{")
        with self.assertRaises(DocumentError) as e:
            parse_json("[1, 2]")
        self.assertIn("must be an object", e.exception.detail)

    def test_parse_algebra_rejects_spaces(self):
        with self.assertRaises(DocumentError):
            parse_algebra((FIXTURES / "chain3_dual.txt").read_text())

    def test_unknown_point_in_pairs(self):
        text = "kind: relation\npoints: x\nbasis:\n  x\n  -\npairs:\n  y : x\n"
        with self.assertRaises(DocumentError) as e:
            parse_text(text)
        self.assertIn("unknown point 'y'", e.exception.detail)

    def test_missing_file(self):
        with self.assertRaises(DocumentError) as e:
            load(FIXTURES / "missing.txt")
        self.assertIn("cannot read", e.exception.detail)


class TestEngineObjects(unittest.TestCase):
    def test_non_distributive_algebra(self):
        with self.assertRaises(DocumentError) as e:
            to_algebra(load(FIXTURES / "m3.txt"))
        self.assertIn("(a, b, c)", e.exception.detail)
        self.assertEqual(e.exception.status_code, 2)

    def test_modal_kind_is_checked(self):
        doc = load(FIXTURES / "diamond_m.txt").copy(update={"kind": "modal"})
        with self.assertRaises(DocumentError) as e:
            to_algebra(doc)
        self.assertIn("modal", e.exception.detail)

    def test_algebra_document_round_trip(self):
        M = to_algebra(load(FIXTURES / "diamond_m.txt"))
        doc = from_algebra(M, name="copy")
        self.assertEqual(to_algebra(parse_json(serialize_json(doc))), M)

    def test_space(self):
        X = to_space(load(FIXTURES / "chain3_dual.txt"))
        self.assertEqual(X, DSSpace(2, (0b11, 0b01, 0), ("P1", "P2")))
        self.assertEqual(to_space(from_space(X)), X)

    def test_relation_fixture_is_the_dual_of_diamond_m(self):
        R = to_relation(load(FIXTURES / "diamond_m_dual.txt"))
        self.assertIsInstance(R, SMultirelation)
        expected = relation_from_algebra_S(to_algebra(load(FIXTURES / "diamond_m.txt")))
        self.assertEqual(R.image, expected.image)

    def test_relation_document_round_trip(self):
        R = relation_from_algebra_S(to_algebra(load(FIXTURES / "diamond_m.txt")))
        doc = from_relation(R, name="dual")
        self.assertEqual(doc.side, "S")
        self.assertEqual(to_relation(parse_text(serialize_text(doc))), R)

    def test_load_instance(self):
        doc, X = load_instance(FIXTURES / "chain3_dual.txt")
        self.assertEqual(doc.name, "chain3_dual")
        self.assertIsInstance(X, DSSpace)

    def test_save_and_load(self):
        doc = load(FIXTURES / "bool4.txt")
        with tempfile.TemporaryDirectory() as directory:
            for fmt in ("text", "json"):
                path = save(Path(directory) / "nested" / f"bool4.{fmt}", doc, fmt)
                self.assertEqual(load(path), doc)


if __name__ == '__main__':
    unittest.main()

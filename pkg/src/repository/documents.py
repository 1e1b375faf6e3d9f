"""
Reading and writing algebra, space and relation documents.

The text format is line oriented. Unindented lines are ``key: value`` pairs or block headers ``key:``;
indented lines are rows of the block above them. ``#`` starts a comment and ``-`` stands for the empty set::

    name: diamond_m
    kind: mds
    elements: 0 a b 1
    top: 1
    meet:
      0 = 0 0 0 0
      a = 0 a 0 a
      b = 0 0 b b
      1 = 0 a b 1
    operator:
      0 -> 0
      a -> 1
      b -> b
      1 -> 1

Space documents use ``kind: space`` with ``points:`` and a ``basis:`` block of point sets; relation documents
use ``kind: relation``, add ``side: S`` or ``side: C`` and a ``pairs:`` block of rows ``x : y z``.
Every document has a JSON form produced by the pydantic models in :mod:`src.schemas`.
"""
import json
import logging
from pathlib import Path
from typing import Union

from pydantic import BaseModel, ValidationError

from src.core.semilattice import MeetSemilattice
from src.duality.axioms import is_modal, is_boolean
from src.duality.relations import MDSAlgebra, SMultirelation, CMultirelation, Multirelation
from src.duality.space import DSSpace
from src.core.bitset import mask_of, members
from src.errors import DocumentError, EngineException
from src.schemas import AlgebraDocument, SpaceDocument, RelationDocument

logger = logging.getLogger(__name__)

Document = Union[AlgebraDocument, SpaceDocument, RelationDocument]

EMPTY = "-"


def _validate(model: type[BaseModel], data: dict) -> BaseModel:
    try:
        return model.parse_obj(data)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise DocumentError(f"invalid {model.__name__}: {messages}")


def _split_sections(text: str) -> tuple[dict[str, str], dict[str, list[str]]]:
    scalars: dict[str, str] = {}
    blocks: dict[str, list[str]] = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line[0].isspace():
            if current is None:
                raise DocumentError(f"line {number}: indented row outside of a block")
            blocks[current].append(line.strip())
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not key:
            raise DocumentError(f"line {number}: expected 'key: value', got {line.strip()!r}")
        if key in scalars or key in blocks:
            raise DocumentError(f"line {number}: key {key!r} given twice")
        value = value.strip()
        if value:
            scalars[key] = value
            current = None
        else:
            blocks[key] = []
            current = key
    return scalars, blocks


def _point_set(words: list[str]) -> list[str]:
    return [] if words == [EMPTY] else words


def _algebra_data(scalars: dict[str, str], blocks: dict[str, list[str]]) -> dict:
    elements = scalars.get("elements", "").split()
    meet = {}
    for row in blocks.get("meet", []):
        left, sep, right = row.partition("=")
        if not sep:
            raise DocumentError(f"meet row {row!r} must read 'x = v v ...'")
        values = right.split()
        if len(values) != len(elements):
            raise DocumentError(f"meet row of {left.strip()!r} has {len(values)} entries for {len(elements)} elements")
        if left.strip() in meet:
            raise DocumentError(f"meet row for {left.strip()!r} given twice")
        meet[left.strip()] = dict(zip(elements, values))
    data = {"elements": elements, "meet": meet, "top": scalars.get("top", "")}
    if "operator" in blocks:
        operator = {}
        for row in blocks["operator"]:
            left, sep, right = row.partition("->")
            if not sep:
                raise DocumentError(f"operator row {row!r} must read 'x -> y'")
            if left.strip() in operator:
                raise DocumentError(f"operator row for {left.strip()!r} given twice")
            operator[left.strip()] = right.strip()
        data["operator"] = operator
    return data


def _space_data(scalars: dict[str, str], blocks: dict[str, list[str]]) -> dict:
    return {
        "name": scalars.get("name", "space"),
        "points": scalars.get("points", "").split(),
        "basis": [_point_set(row.split()) for row in blocks.get("basis", [])],
    }


def parse_text(text: str) -> Document:
    """
    Parse a document in the line oriented text format

    :param text: the document
    :type text: str
    :return: the validated document, its model chosen by ``kind``
    :rtype: Document
    """
    scalars, blocks = _split_sections(text)
    kind = scalars.get("kind", "mds")
    if kind == "space":
        return _validate(SpaceDocument, _space_data(scalars, blocks))
    if kind == "relation":
        pairs = []
        for row in blocks.get("pairs", []):
            left, sep, right = row.partition(":")
            if not sep:
                raise DocumentError(f"pair row {row!r} must read 'x : y z ...'")
            pairs.append((left.strip(), _point_set(right.split())))
        data = {
            "name": scalars.get("name", "relation"),
            "space": _space_data(scalars, blocks),
            "side": scalars.get("side", "S"),
            "pairs": pairs,
        }
        return _validate(RelationDocument, data)
    data = _algebra_data(scalars, blocks)
    data["name"] = scalars.get("name", "algebra")
    data["kind"] = kind
    return _validate(AlgebraDocument, data)


def parse_json(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"malformed JSON: {e.msg} at line {e.lineno}")
    if not isinstance(data, dict):
        raise DocumentError("a JSON document must be an object")
    if "pairs" in data:
        return _validate(RelationDocument, data)
    if "points" in data:
        return _validate(SpaceDocument, data)
    return _validate(AlgebraDocument, data)


def parse(text: str) -> Document:
    """
    Parse either format; JSON documents start with ``{``
    """
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def parse_algebra(text: str) -> AlgebraDocument:
    document = parse(text)
    if not isinstance(document, AlgebraDocument):
        raise DocumentError("expected an algebra document")
    return document


def _space_lines(doc: SpaceDocument) -> list[str]:
    lines = [f"points: {' '.join(doc.points)}", "basis:"]
    lines += [f"  {' '.join(B) if B else EMPTY}" for B in doc.basis]
    return lines


def serialize_text(doc: Document) -> str:
    """
    Write a document in its canonical text form; parsing the result gives the document back

    :param doc: the document
    :type doc: Document
    :return: the text
    :rtype: str
    """
    lines = [f"name: {doc.name}"]
    if isinstance(doc, SpaceDocument):
        lines += ["kind: space", *_space_lines(doc)]
    elif isinstance(doc, RelationDocument):
        lines += ["kind: relation", f"side: {doc.side}", *_space_lines(doc.space), "pairs:"]
        lines += [f"  {x} : {' '.join(Y) if Y else EMPTY}" for x, Y in doc.pairs]
    else:
        lines += [f"kind: {doc.kind}", f"elements: {' '.join(doc.elements)}", f"top: {doc.top}", "meet:"]
        width = max(len(a) for a in doc.elements)
        for a in doc.elements:
            lines.append(f"  {a.ljust(width)} = {' '.join(doc.meet[a][b] for b in doc.elements)}")
        if doc.operator is not None:
            lines.append("operator:")
            lines += [f"  {a.ljust(width)} -> {doc.operator[a]}" for a in doc.elements]
    return "\n".join(lines) + "\n"


def serialize_json(doc: Document) -> str:
    return doc.json(indent=2, exclude_none=True) + "\n"


def load(path: Union[str, Path]) -> Document:
    """
    Read and parse a document file

    :param path: file path
    :type path: str | Path
    :return: the document
    :rtype: Document
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}")
    logger.debug("read %d characters from %s", len(text), path)
    return parse(text)


def save(path: Union[str, Path], doc: Document, fmt: str = "text") -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(serialize_json(doc) if fmt == "json" else serialize_text(doc), encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot write {path}: {e.strerror}")
    return path


def to_semilattice(doc: AlgebraDocument) -> MeetSemilattice:
    """
    The semilattice of an algebra document, without the distributivity and operator checks
    """
    index = {a: i for i, a in enumerate(doc.elements)}
    table = tuple(tuple(index[doc.meet[a][b]] for b in doc.elements) for a in doc.elements)
    try:
        return MeetSemilattice(table, index[doc.top], tuple(doc.elements))
    except EngineException as e:
        raise DocumentError(f"{doc.name}: {e.detail}")


def to_algebra(doc: AlgebraDocument) -> MDSAlgebra:
    """
    Build the engine object of an algebra document; a missing operator means the identity.

    Structural failures (associativity, distributivity, monotonicity, the kind tag) become
    :class:`~src.errors.DocumentError` with the engine's diagnostic.

    :param doc: the document
    :type doc: AlgebraDocument
    :return: the algebra with operator
    :rtype: MDSAlgebra
    """
    algebra = to_semilattice(doc)
    index = {a: i for i, a in enumerate(doc.elements)}
    operator = doc.operator or {a: a for a in doc.elements}
    try:
        M = MDSAlgebra(algebra, tuple(index[operator[a]] for a in doc.elements), kind=doc.kind)
    except EngineException as e:
        raise DocumentError(f"{doc.name}: {e.detail}")
    if doc.kind == "modal" and not is_modal(M):
        raise DocumentError(f"{doc.name}: operator of a modal document must keep 1 and preserve meets")
    if doc.kind == "boolean" and not is_boolean(algebra):
        raise DocumentError(f"{doc.name}: a boolean document must be a Boolean lattice")
    return M


def from_algebra(M: MDSAlgebra, name: str = "algebra") -> AlgebraDocument:
    A = M.algebra
    names = A.names
    return AlgebraDocument(
        name=name,
        kind=M.kind if M.kind in ("mds", "modal", "boolean") else "mds",
        elements=list(names),
        top=names[A.top],
        meet={names[a]: {names[b]: names[A.meet[a][b]] for b in range(A.size)} for a in range(A.size)},
        operator={names[a]: names[M.m[a]] for a in range(A.size)},
    )


def to_space(doc: SpaceDocument) -> DSSpace:
    index = {p: i for i, p in enumerate(doc.points)}
    basis = tuple(mask_of(index[p] for p in B) for B in doc.basis)
    try:
        return DSSpace(len(doc.points), basis, tuple(doc.points))
    except EngineException as e:
        raise DocumentError(f"{doc.name}: {e.detail}")


def from_space(X: DSSpace, name: str = "space") -> SpaceDocument:
    return SpaceDocument(name=name, points=list(X.labels),
                         basis=[[X.labels[x] for x in members(B)] for B in X.basis])


def to_relation(doc: RelationDocument) -> Multirelation:
    """
    Build the multirelation of a relation document on the space it declares
    """
    X = to_space(doc.space)
    index = {p: i for i, p in enumerate(doc.space.points)}
    pairs = [(index[x], mask_of(index[p] for p in Y)) for x, Y in doc.pairs]
    kind = SMultirelation if doc.side == "S" else CMultirelation
    try:
        return kind.from_pairs(X, pairs)
    except EngineException as e:
        raise DocumentError(f"{doc.name}: {e.detail}")


def from_relation(rel: Multirelation, name: str = "relation") -> RelationDocument:
    X = rel.space
    return RelationDocument(
        name=name,
        space=from_space(X, name),
        side="C" if isinstance(rel, CMultirelation) else "S",
        pairs=[(X.labels[x], [X.labels[p] for p in members(Y)]) for x, Y in rel.pairs()],
    )


def load_instance(path: Union[str, Path]) -> tuple[Document, Union[MDSAlgebra, DSSpace, Multirelation]]:
    """
    Read a document and build its engine object

    :param path: file path
    :type path: str | Path
    :return: the document with its algebra, space or relation
    :rtype: tuple[Document, MDSAlgebra | DSSpace | Multirelation]
    """
    doc = load(path)
    if isinstance(doc, SpaceDocument):
        return doc, to_space(doc)
    if isinstance(doc, RelationDocument):
        return doc, to_relation(doc)
    return doc, to_algebra(doc)

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, validator, root_validator

KINDS = ("mds", "modal", "boolean")


def _unique(names: list[str], what: str) -> list[str]:
    seen = set()
    for name in names:
        if name in seen:
            raise ValueError(f"duplicate {what} name {name!r}")
        seen.add(name)
    return names


class AlgebraDocument(BaseModel):
    name: str = Field("algebra", min_length=1)
    kind: str = Field("mds", regex="^(mds|modal|boolean)$")
    elements: List[str] = Field(min_items=1)
    top: str
    meet: Dict[str, Dict[str, str]]
    operator: Optional[Dict[str, str]] = None

    @validator("elements")
    def ensure_unique_elements(cls, v):
        for name in v:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError(f"element name {name!r} must be a non-empty word")
        return _unique(v, "element")

    @validator("top")
    def ensure_top_declared(cls, v, values):
        if "elements" in values and v not in values["elements"]:
            raise ValueError(f"top {v!r} is not a declared element")
        return v

    @validator("meet")
    def ensure_total_commutative_table(cls, v, values):
        if "elements" not in values:
            return v
        elements = values["elements"]
        for a in elements:
            row = v.get(a)
            if row is None:
                raise ValueError(f"meet table has no row for {a!r}")
            for b in elements:
                if b not in row:
                    raise ValueError(f"meet table has no entry for {a}∧{b}")
                if row[b] not in elements:
                    raise ValueError(f"{a}∧{b}={row[b]} is not a declared element")
        extra = set(v) - set(elements)
        if extra:
            raise ValueError(f"meet table mentions undeclared elements {sorted(extra)}")
        for a in elements:
            for b in elements:
                if v[a][b] != v[b][a]:
                    raise ValueError(f"meet is not commutative: {a}∧{b}={v[a][b]} but {b}∧{a}={v[b][a]}")
        return v

    @validator("operator")
    def ensure_total_operator(cls, v, values):
        if v is None or "elements" not in values:
            return v
        elements = values["elements"]
        for a in elements:
            if a not in v:
                raise ValueError(f"operator has no image for {a!r}")
            if v[a] not in elements:
                raise ValueError(f"operator sends {a} to undeclared {v[a]!r}")
        extra = set(v) - set(elements)
        if extra:
            raise ValueError(f"operator mentions undeclared elements {sorted(extra)}")
        return v


class SpaceDocument(BaseModel):
    name: str = Field("space", min_length=1)
    points: List[str]
    basis: List[List[str]]

    @validator("points")
    def ensure_unique_points(cls, v):
        return _unique(v, "point")

    @validator("basis", each_item=True)
    def ensure_known_points(cls, v, values):
        if "points" in values:
            for p in v:
                if p not in values["points"]:
                    raise ValueError(f"basic open mentions unknown point {p!r}")
        return v


class RelationDocument(BaseModel):
    name: str = Field("relation", min_length=1)
    space: SpaceDocument
    side: str = Field("S", regex="^(S|C)$")
    pairs: List[Tuple[str, List[str]]]

    @root_validator(skip_on_failure=True)
    def ensure_known_points(cls, values):
        points = values["space"].points
        for x, Y in values["pairs"]:
            for p in [x, *Y]:
                if p not in points:
                    raise ValueError(f"pair ({x}, {{{','.join(Y)}}}) mentions unknown point {p!r}")
        return values


class TheoremVerdict(BaseModel):
    id: str
    anchor: str
    status: str = Field(regex="^(pass|fail|skipped)$")
    witness: Optional[str] = None


class VerificationReport(BaseModel):
    instance: str
    suite: str
    verdicts: List[TheoremVerdict] = []
    timing: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(v.status != "fail" for v in self.verdicts)

    @property
    def failures(self) -> List[TheoremVerdict]:
        return [v for v in self.verdicts if v.status == "fail"]


class FuzzReport(BaseModel):
    source: str = "fuzz"
    seed: int
    count: int
    max_size: int
    reports: List[VerificationReport] = []
    counterexamples: List[AlgebraDocument] = []
    timing: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


class AnalysisReport(BaseModel):
    name: str
    size: int
    distributive: bool
    witness: Optional[List[str]] = None
    filters: List[List[str]]
    ideals: List[List[str]]
    irreducible_filters: List[List[str]]
    axioms: Optional[Dict[str, bool]] = None

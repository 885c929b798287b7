"""Pydantic payloads for command input and output."""

# pylint: disable=W0212, W0511

from __future__ import annotations

from fractions import Fraction
from typing import Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)

from .linalg import RationalMatrix


class _Payload(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    def dump(self) -> str:
        """Serialize with aliases, two space indent."""
        return self.model_dump_json(indent=2, by_alias=True)


class EnumerationEntry(_Payload):
    """One parameter with its dimension and invariants."""

    omega: str
    dimension: int
    a_plus: int = Field(alias="aPlus")
    a_minus: int = Field(alias="aMinus")
    b: int
    c: int


class EnumerationPayload(_Payload):
    """Output of ``enumerate``."""

    p: int
    q: int
    r: int
    count: int
    parameters: list[EnumerationEntry]


class GrsPayload(_Payload):
    """The gRS tuple."""

    t1: list[list[int]] = Field(alias="T1")
    t2: list[list[int]] = Field(alias="T2")
    lambda_prime: list[int] = Field(alias="lambdaPrime")
    mu_prime: list[int] = Field(alias="muPrime")
    nu: list[int]


class ReportPayload(_Payload):
    """Output of ``report``: everything known about one parameter."""

    omega: str
    p: int
    q: int
    r: int
    derived: dict[str, Any]
    rank_matrix: list[list[int]] = Field(alias="rankMatrix")
    dimension: int
    ambient_dimension: int = Field(alias="ambientDimension")
    grassmann: dict[str, int]
    wk_plus: list[int] = Field(alias="wkPlus")
    wk_minus: list[int] = Field(alias="wkMinus")
    ws_plus: dict[str, int] = Field(alias="wsPlus")
    ws_minus: dict[str, int] = Field(alias="wsMinus")
    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    ws_shapes: list[list[int]] = Field(alias="wsShapes")
    signed: list[str] = Field(alias="Lambda")
    grs: GrsPayload
    dual: str


class HassePayload(_Payload):
    """Output of ``hasse`` in JSON form."""

    nodes: list[dict[str, Any]]
    covers: list[list[int]]


class FiberPayload(_Payload):
    """Output of ``fiber``."""

    p: int
    q: int
    r: int
    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    formula: int
    parameters: list[str]


class CountPayload(_Payload):
    """Output of ``count``."""

    p: int
    q: int
    r: int
    formula: int
    enumerated: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        """Whether both counts agree."""
        return self.formula == self.enumerated


class ClassifyPayload(_Payload):
    """Output of ``classify``."""

    omega: str
    dimension: int
    rank_matrix: list[list[int]] = Field(alias="rankMatrix")


class GrassmannEntry(_Payload):
    """One K-orbit of subspaces."""

    s: int
    t: int
    k: int
    dimension: int
    representative: str


class GrassmannPayload(_Payload):
    """Output of ``grassmann``."""

    p: int
    q: int
    r: int
    orbits: list[GrassmannEntry]


class CheckResult(_Payload):
    """Outcome of one property check."""

    key: str
    name: str
    checked: int
    failures: list[str]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Whether no failure was recorded."""
        return not self.failures


class VerifyPayload(_Payload):
    """Output of ``verify``."""

    p: int
    q: int
    r: list[int]
    seed: int
    bound: int
    trials: int
    checks: list[CheckResult]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)


class MatrixInput(BaseModel):
    """Subspace matrix read by ``classify``: a ``p q r`` header and p+q rows of r rationals."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=0)
    q: int = Field(ge=0)
    r: int = Field(ge=0)
    rows: list[list[str]]

    @field_validator("rows")
    @classmethod
    def _entries_are_rational(cls, rows: list[list[str]]) -> list[list[str]]:
        for row in rows:
            for entry in row:
                try:
                    Fraction(entry)
                except (ValueError, ZeroDivisionError) as ex:
                    msg = f"Invalid rational entry {entry!r}"
                    raise ValueError(msg) from ex
        return rows

    @model_validator(mode="after")
    def _shape_matches_header(self) -> MatrixInput:
        if self.r == 0 and not self.rows:
            return self
        if self.r > self.p + self.q:
            msg = f"r={self.r} exceeds p+q={self.p + self.q}"
            raise ValueError(msg)
        if len(self.rows) != self.p + self.q:
            msg = f"Expected {self.p + self.q} rows, got {len(self.rows)}"
            raise ValueError(msg)
        if any(len(row) != self.r for row in self.rows):
            msg = f"Every row must have r={self.r} entries"
            raise ValueError(msg)
        return self

    @classmethod
    def from_text(cls, text: str) -> MatrixInput:
        """Parse whitespace separated text: header line ``p q r`` then the rows."""
        lines = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        header = lines[0] if lines else []
        values: dict[str, Any] = dict(zip(("p", "q", "r"), header, strict=False))
        values["rows"] = lines[1:]
        if len(header) != 3:  # noqa: PLR2004
            values["p"] = None
        return cls.model_validate(values)

    def to_matrix(self) -> RationalMatrix:
        """Return the (p+q) x r matrix."""
        if self.r == 0:
            return RationalMatrix.zeros(self.p + self.q, 0)
        return RationalMatrix.from_rows(self.rows)

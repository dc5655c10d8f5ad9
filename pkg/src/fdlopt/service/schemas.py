"""Pydantic request/response models for the HTTP service."""

from pydantic import BaseModel, Field


class DesignRequest(BaseModel):
    m: int = Field(ge=2, description="number of fibers")
    k: int = Field(ge=1, description="maximum number of recirculations")


class CandidateOut(BaseModel):
    profile: list[int]
    delays: list[str]
    B: str


class DesignResponse(BaseModel):
    m: int
    k: int
    gcd: int
    depth: int
    classification: str
    candidates: list[CandidateOut]


class ValueRequest(BaseModel):
    m: int = Field(ge=2)
    k: int = Field(ge=1)
    profile: list[int]


class ValueResponse(BaseModel):
    m: int
    k: int
    profile: list[int]
    delays: list[str]
    B: str


class VerifyRequest(BaseModel):
    m: int = Field(ge=2)
    k: int = Field(ge=1)
    brute_cap: int = Field(default=22, ge=2, le=28)


class VerifyResponse(BaseModel):
    m: int
    k: int
    gcd: int
    classification: str
    agree: bool
    candidates: list[list[int]]
    argmax: list[list[int]]
    best_B: str
    space_size: int


class TableRowOut(BaseModel):
    table: str
    m: int
    k: int
    source: list[int] | None
    profile: list[int]
    B: str


class TablesResponse(BaseModel):
    rows: list[TableRowOut]


class LemmasRequest(BaseModel):
    max_m: int = Field(default=10, ge=2, le=20)
    seed: int = 0
    samples: int = Field(default=1000, ge=1, le=100_000)


class SuiteSummary(BaseModel):
    suite: str
    cases: int
    violations: int


class LemmasResponse(BaseModel):
    ok: bool
    seed: int
    samples: int
    max_m: int
    suites: list[SuiteSummary]
    failures: list[str]

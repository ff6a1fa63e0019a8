"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class DesignDocument(BaseModel):
    order: int
    block_size: int
    strength: int
    classes: list[list[list[int]]]


class FactorizationDocument(BaseModel):
    order: int
    factors: list[list[list[int]]]


class GenerateRequest(BaseModel):
    exponent: int = Field(ge=0)


class FactorizeRequest(BaseModel):
    order: int


class CheckModel(BaseModel):
    name: str
    passed: bool
    witnesses: list


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckModel]


class StatsResponse(BaseModel):
    order: int
    block_size: int
    strength: int
    observed_blocks: int
    expected_blocks: int | None
    observed_classes: int
    expected_classes: int | None
    replication_min: int | None
    replication_max: int | None
    expected_replication: int | None
    min_sum: int | None
    min_sum_bound: int | None
    mismatches: list[str]


class CatalogEntry(BaseModel):
    id: str
    score: float = Field(ge=0)


class PlanRequest(BaseModel):
    design: DesignDocument
    catalog: list[CatalogEntry]
    format: str = "structured"


class PlanDocument(BaseModel):
    rendered: str
    format: str


class OracleRequest(BaseModel):
    design: DesignDocument
    samples: int = Field(default=1000, ge=1)
    seed: int = 0


class OracleResponse(BaseModel):
    samples: int
    agreements: int
    disagreements: list


class ErrorResponse(BaseModel):
    detail: str

"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

WeightLists = list[list[int]]


class MultRequest(BaseModel):
    module: str = Field(description="One of S, SymV, E, S_h, S_h_sqrt")
    weight: WeightLists = Field(description="Three integer pairs, e.g. [[2,2],[2,2],[2,2]]")


class MultResponse(BaseModel):
    module: str
    weight: WeightLists
    value: int


class SimpleMultRequest(BaseModel):
    simple: str = Field(description="One of S, E, D1, D122, D212, D221, D5, G6")
    weight: WeightLists


class SimpleMultResponse(BaseModel):
    simple: str
    weight: WeightLists
    value: Optional[int] = Field(description="null when the value is not determined")
    known: bool


class DumpRequest(BaseModel):
    module: str
    lo: int = Field(description="Lower bound for every weight entry")
    hi: int = Field(description="Upper bound for every weight entry")


class DumpResponse(BaseModel):
    module: str
    lo: int
    hi: int
    entries: dict[str, int]


class EulerRequest(BaseModel):
    weight: WeightLists


class EulerResponse(BaseModel):
    weight: WeightLists
    value: int


class WitnessRow(BaseModel):
    simple: str
    weight: WeightLists


class WitnessTableResponse(BaseModel):
    rows: list[WitnessRow]


class QuiverPathsRequest(BaseModel):
    source: str
    target: str
    length_cap: int = 6


class QuiverPathsResponse(BaseModel):
    source: str
    target: str
    dim: int
    dims_by_length: dict[int, int]
    paths: list[list[str]] = Field(description="Representative residue classes, arrows right-to-left")


class QuiverCheckResponse(BaseModel):
    passed: bool
    checks: list[dict]


class LCRequest(BaseModel):
    module: str
    supports: list[str] = Field(description="Orbit names, innermost support first")


class LCResponse(BaseModel):
    module: str
    supports: list[str]
    entries: dict[str, list[str]] = Field(
        description="Degree tuple (JSON list as key) to multiset of modules"
    )


class ClassifyRequest(BaseModel):
    tensor: list = Field(description="2x2x2 nested array; entries are ints or 'p/q' strings")


class ClassifyResponse(BaseModel):
    orbit: str
    dim: int
    flattening_ranks: list[int]
    hyperdet: str


class VerifyRequest(BaseModel):
    target: str = "all"
    dmax: Optional[int] = None
    seed: int = 0


class VerifyResponse(BaseModel):
    target: str
    passed: bool
    results: list[dict]


class TargetsResponse(BaseModel):
    targets: list[str]

"""Pydantic request and response models for the service endpoints.

Rationals travel as "p/q" strings; hypergraphs travel either as the
``.hg`` text format or as an explicit (r, n, edges) triple.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class HypergraphIn(BaseModel):
    """A hypergraph, given either as .hg text or as explicit fields."""

    hg_text: Optional[str] = None
    r: Optional[int] = None
    n: Optional[int] = None
    edges: Optional[list[list[int]]] = None

    @model_validator(mode="after")
    def _one_form(self):
        explicit = self.r is not None or self.n is not None or self.edges is not None
        if (self.hg_text is None) == (not explicit):
            raise ValueError("provide either hg_text or all of r, n, edges")
        if explicit and (self.r is None or self.n is None or self.edges is None):
            raise ValueError("explicit form needs r, n and edges together")
        return self


class HypergraphSummary(BaseModel):
    r: int
    n: int
    num_edges: int
    min_codegree: Optional[int]
    essential_min_codegree: Optional[int]
    shadow_min_degree: Optional[int]
    shadow_size: int
    shadow_complete: bool


class WeightRequest(BaseModel):
    hypergraph: HypergraphIn


class WeightingJson(BaseModel):
    edges: list[list[int]]
    weights: list[str]


class PairDegreeReportJson(BaseModel):
    pairs: list[list[int]]
    degrees: list[str]
    min_weight: Optional[str]
    max_weight: Optional[str]
    all_degrees_one: bool
    weights_in_unit_interval: bool
    is_perfect_fractional_sts: bool
    violating_pairs: list[list[int]]
    violating_edges: list[list[int]]


class NonnegativityJson(BaseModel):
    min_ordered_weight: Optional[str]
    min_tuple: Optional[list[int]]
    negative_tuples: list[dict]
    all_nonnegative: bool
    is_fractional_sts: bool
    degree_report: PairDegreeReportJson


class WeightResponse(BaseModel):
    summary: HypergraphSummary
    weighting: WeightingJson
    report: PairDegreeReportJson
    nonnegativity: NonnegativityJson
    verdict: bool


class LpSolveRequest(BaseModel):
    hypergraph: HypergraphIn
    all_tuples: bool = False


class CertificateJson(BaseModel):
    row_multipliers: list[str]
    upper_bound_multipliers: list[str]
    lower_bound_multipliers: list[str]
    gap: str


class LpSolveResponse(BaseModel):
    status: Literal["feasible", "infeasible"]
    num_vars: int
    num_rows: int
    mode: Literal["shadow", "all"]
    witness: Optional[WeightingJson] = None
    certificate: Optional[CertificateJson] = None
    verified: bool


class OptimizeRequest(BaseModel):
    program: Literal["p3", "p4", "p5"]
    d: float
    seed: int = 0
    threads: int = Field(default=1, ge=1)


class OptimizeResponse(BaseModel):
    program: str
    d: float
    value: float
    point: dict
    iterations: int


class RootRequest(BaseModel):
    tol: float = 1e-10


class RootResponse(BaseModel):
    xstar: float
    threshold: float
    residual: float
    bracket_low: float
    bracket_high: float
    bracket_width: float
    iterations: int


class VerifyChainRequest(BaseModel):
    d: float
    tol: float = 1e-4
    seed: int = 0


class VerifyChainResponse(BaseModel):
    d: float
    tol: float
    p3_value: float
    p4_value: float
    p5_value: float
    p4_vs_p5: float
    p3_vs_p5: float
    ok: bool


class GenRequest(BaseModel):
    kind: Literal["complete", "space-barrier", "parity-blocker", "random"]
    r: int = 3
    n: Optional[int] = None
    parts: Optional[list[int]] = None
    floor: Optional[int] = None
    seed: int = 0


class GenResponse(BaseModel):
    hg_text: str
    summary: HypergraphSummary
    parts: Optional[list[int]] = None


class CertifyParityRequest(BaseModel):
    hypergraph: HypergraphIn
    parts: list[int]


class CertifyParityResponse(BaseModel):
    transversal_product: int
    product_is_odd: bool
    edges: list[list[int]]
    transversal_tuple_counts: list[int]
    counts_in_zero_two: bool
    verdict: bool


class VersionResponse(BaseModel):
    name: str
    version: str

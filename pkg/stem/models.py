"""
stem/models.py

Pydantic models for flipcount.
Defines the report structures emitted by the CLI and returned by the
analysis, enumeration, bounds and verification layers.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

GeneratorKind = Literal["convex", "low_flip", "double_chain", "random"]
OutputFormat = Literal["json", "csv"]


class Caps(BaseModel):
    """
    Largest N each exact computation is allowed to run on.
    """
    pg: int = Field(9, gt=0, description="Plane-graph enumeration cap.")
    tri: int = Field(11, gt=0, description="Triangulation enumeration cap.")
    ps: int = Field(12, gt=0, description="Exact ps-flippable search cap.")
    mis: int = Field(16, gt=0, description="Exact simultaneous-flip (MIS) cap.")


class GeneratorSpec(BaseModel):
    """
    Request for one of the built-in point configurations.
    For double_chain, n is the total number of points (2k).
    """
    kind: GeneratorKind
    n: int = Field(..., description="Number of points to generate.")
    seed: int = Field(0, ge=0, lt=2**64, description="Seed for the random generator.")

    @field_validator("kind", mode="before")
    @classmethod
    def normalize_kind(cls, value):
        if isinstance(value, str):
            return value.replace("-", "_")
        return value

    @model_validator(mode="after")
    def check_size(self):
        if self.n < 3:
            raise ValueError(f"{self.kind} needs n >= 3, got {self.n}")
        if self.kind == "low_flip" and (self.n < 8 or self.n % 2):
            raise ValueError(f"low_flip needs even n >= 8, got {self.n}")
        if self.kind == "double_chain" and (self.n < 4 or self.n % 2):
            raise ValueError(f"double_chain needs even n >= 4, got {self.n}")
        return self


class RunConfig(BaseModel):
    """
    Resolved settings for one CLI invocation.
    """
    command: str
    input_path: Optional[str] = Field(None, description="Point file to read.")
    generator: Optional[GeneratorSpec] = Field(None, description="Generated input, if no file.")
    caps: Caps = Field(default_factory=Caps)
    output_format: OutputFormat = "json"
    parallel: bool = False
    seed: int = 0

    @model_validator(mode="after")
    def one_input_source(self):
        if self.input_path is not None and self.generator is not None:
            raise ValueError("give either an input file or a generator, not both")
        return self


class SeparabilityReport(BaseModel):
    """
    Classification of interior vertices of a locally minimal convex decomposition.
    """
    v3: int = Field(..., ge=0, description="Interior vertices of degree 3 in the triangulation.")
    v40: int = Field(..., ge=0, description="Interior vertices of degree >= 4 with no separable edge.")
    v41: int = Field(..., ge=0, description="Interior vertices of degree >= 4 with one separable edge.")
    v42: int = Field(..., ge=0, description="Interior vertices of degree >= 4 with two separable edges.")
    m_double: int = Field(..., ge=0, description="Edges separable at both endpoints.")
    a: int = Field(..., ge=0, description="3*v3 + 2*v42 + v41.")
    removed_count: int = Field(..., ge=0, description="Size of the ps-flippable set.")


class DecompositionDiagnostics(BaseModel):
    """
    Accounting ledger of a convex decomposition. Serialized by `analyze`.
    """
    v3: int
    v40: int
    v41: int
    v42: int
    m_double: int
    removed: int
    faces: int = Field(..., description="Bounded face count f.")
    edges: int = Field(..., description="Edge count m.")
    interior_edges: int = Field(..., description="Non-hull edge count m_int.")
    face_sizes: Dict[int, int] = Field(default_factory=dict, description="k -> number of bounded k-gons.")
    face_slack: int = Field(..., description="(3N - 2h) - 2f, doubled slack of the face bound.")
    edge_slack: int = Field(..., description="(5N - 2h - 2) - 2m, doubled slack of the edge bound.")
    removed_slack: int = Field(..., description="2*removed - (N + v41 + 3*v40 - 4).")
    identities_ok: bool = True


class ForestCounts(BaseModel):
    total: int = 0
    by_k: Dict[int, int] = Field(default_factory=dict, description="k -> number of k-forests.")


class CountReport(BaseModel):
    """
    Exact counts over a point set.
    """
    n_points: int
    hull_size: int
    tri: Optional[int] = Field(None, description="Number of triangulations.")
    pg: Optional[int] = Field(None, description="Number of crossing-free graphs.")
    by_edge_count: Dict[int, int] = Field(default_factory=dict)
    st: Optional[int] = Field(None, description="Number of crossing-free spanning trees.")
    forests: Optional[ForestCounts] = None
    quadrangulations: Optional[int] = None
    predicate_count: Optional[int] = Field(None, description="Count for the requested predicate.")
    predicate: Optional[str] = None
    verified: Optional[bool] = Field(None, description="Set when --verify ran the support identity.")


class BoundReport(BaseModel):
    """
    A per-point exponential base with its provenance.
    """
    name: str
    base: float = Field(..., gt=0)
    optimizer: Optional[float] = Field(None, description="Argument where the optimum is attained.")
    absolute_base: Optional[float] = Field(None, description="base * 30, bounding against all point sets.")
    cited: bool = Field(False, description="True for reference values that are not computed here.")


class CurveSample(BaseModel):
    c: float
    t: float
    B: float


class CatalanTable(BaseModel):
    """
    Exact Catalan numbers C_0..C_k.
    """
    values: List[int]

    @field_validator("values")
    @classmethod
    def check_recurrence(cls, values: List[int]) -> List[int]:
        if len(values) < 2 or values[0] != 1 or values[1] != 1:
            raise ValueError("Catalan table must start with C_0 = C_1 = 1")
        for n in range(2, len(values)):
            expected = sum(values[i] * values[n - 1 - i] for i in range(n))
            if values[n] != expected:
                raise ValueError(f"C_{n} = {values[n]} breaks the recurrence (expected {expected})")
        return values


class CheckResult(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = Field(False, description="Not run because a cap kept it out of reach.")


class SuiteSummary(BaseModel):
    """
    Aggregate of one `verify` run.
    """
    suites: List[str]
    checks: List[CheckResult] = Field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def skipped(self) -> List[CheckResult]:
        return [c for c in self.checks if c.skipped]


class AnalysisReport(BaseModel):
    """
    Output of `analyze` for one point set and its initial triangulation.
    """
    n_points: int
    hull_size: int
    interior: int
    flip: int
    flip_s: int
    flip_s_exact: bool = Field(..., description="False when the greedy fallback ran above the MIS cap.")
    ps_greedy: int
    ps_exact: Optional[int] = None
    lower_bounds: Dict[str, int] = Field(default_factory=dict)
    separability: SeparabilityReport
    diagnostics: DecompositionDiagnostics
    triangulation: dict = Field(..., description="{'n_points': N, 'edges': [[a, b], ...]}")

from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# =========================================================
# COMMON BASE
# =========================================================
class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, use_enum_values=False)


# =========================================================
# EXPONENT
# =========================================================
class GammaRange(str, Enum):
    NEGATIVE = "gamma<0"
    AT_MOST_MINUS_ONE = "gamma<=-1"
    MINUS_ONE_TO_ZERO = "-1<=gamma<0"

    def contains(self, gamma: float) -> bool:
        if self is GammaRange.NEGATIVE:
            return gamma < 0
        if self is GammaRange.AT_MOST_MINUS_ONE:
            return gamma <= -1
        return -1 <= gamma < 0


class GammaExponent(FrozenModel):
    value: float

    @field_validator("value")
    @classmethod
    def nonzero(cls, v: float) -> float:
        if v == 0:
            raise ValueError("gamma must be a non-zero real number")
        return v

    def admissible(self, tag: GammaRange) -> bool:
        return tag.contains(self.value)


# =========================================================
# FAMILIES
# =========================================================
class Family(str, Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    MULTIPARTITE = "multipartite"
    TURAN = "turan"
    PINEAPPLE = "pineapple"
    STAR_CLIQUE = "star_clique"
    PENDANT_CYCLE = "pendant_cycle"
    KITE = "kite"
    CONNECTIVITY_SPLIT = "connectivity_split"


class FamilySpec(FrozenModel):
    family: Family
    n: int = Field(ge=1, le=64)
    c: Optional[int] = None
    parts: Optional[Tuple[int, ...]] = None
    pendants: Optional[Tuple[int, ...]] = None
    split: Optional[Tuple[int, int]] = None

    def label(self) -> str:
        extra = []
        if self.c is not None:
            extra.append(f"c={self.c}")
        if self.parts is not None:
            extra.append(f"parts={list(self.parts)}")
        if self.pendants is not None:
            extra.append(f"pendants={list(self.pendants)}")
        if self.split is not None:
            extra.append(f"split={list(self.split)}")
        return f"{self.family.value}(n={self.n}{', ' if extra else ''}{', '.join(extra)})"


# =========================================================
# BOUNDS
# =========================================================
class Theorem(str, Enum):
    CHROMATIC_LOWER = "chromatic_lower"
    CHROMATIC_UPPER = "chromatic_upper"
    CLIQUE_LOWER = "clique_lower"
    CLIQUE_UPPER = "clique_upper"
    CUTEDGE_UPPER = "cutedge_upper"
    CONNECTIVITY_LOWER = "connectivity_lower"
    CONNECTIVITY_ATMOST_LOWER = "connectivity_atmost_lower"
    EDGE_CONNECTIVITY_LOWER = "edge_connectivity_lower"
    EDGE_CONNECTIVITY_ATMOST_LOWER = "edge_connectivity_atmost_lower"
    MIN_DEGREE_LOWER = "min_degree_lower"
    CONN_STAR_UPPER = "conn_star_upper"
    EDGECONN_STAR_UPPER = "edgeconn_star_upper"


class BoundQuery(FrozenModel):
    theorem: Theorem
    n: int = Field(ge=1, le=64)
    c: int
    gamma: float
    exploratory: bool = False

    @property
    def q(self) -> int:
        return self.n // self.c

    @property
    def r(self) -> int:
        return self.n - self.c * self.q


class ExtremalCharacterization(FrozenModel):
    theorem: Theorem
    witnesses: Tuple[FamilySpec, ...] = Field(min_length=1)


# =========================================================
# SURGERY
# =========================================================
class TransferSpec(FrozenModel):
    v: int = Field(ge=0)
    w: int = Field(ge=0)
    moved: Tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.moved)


# =========================================================
# INVARIANTS
# =========================================================
class InvariantProfile(FrozenModel):
    n: int
    chromatic: int
    clique: int
    vertex_connectivity: int
    edge_connectivity: int
    cut_edge_count: int
    min_degree: int
    max_degree: int
    degrees: Tuple[int, ...]

    @model_validator(mode="after")
    def chain(self):
        if not (
            self.vertex_connectivity
            <= self.edge_connectivity
            <= self.min_degree
            <= self.n - 1
        ):
            raise ValueError("connectivity chain violated")
        if self.clique > self.chromatic:
            raise ValueError("clique number exceeds chromatic number")
        return self


# =========================================================
# VERIFICATION
# =========================================================
class GraphClass(str, Enum):
    CHROMATIC_EQ = "chi=c"
    CLIQUE_EQ = "omega=c"
    CUT_EDGES_EQ = "bridges=c"
    KAPPA_EQ = "kappa=c"
    KAPPA_AT_MOST = "kappa<=c"
    EDGE_KAPPA_EQ = "kappa'=c"
    EDGE_KAPPA_AT_MOST = "kappa'<=c"
    MIN_DEGREE_EQ = "delta=c"


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL_BOUND = "FAIL_BOUND"
    FAIL_CHARACTERIZATION = "FAIL_CHARACTERIZATION"
    EMPTY_CLASS = "EMPTY_CLASS"


class TheoremCase(FrozenModel):
    theorem: Theorem
    n: int = Field(ge=1, le=64)
    c: int
    gamma: float
    exploratory: bool = False


class CorpusSource(FrozenModel):
    kind: Literal["builtin", "file"]
    n: Optional[int] = Field(default=None, ge=1, le=7)
    path: Optional[str] = None

    @model_validator(mode="after")
    def one_origin(self):
        if self.kind == "builtin" and self.n is None:
            raise ValueError("builtin corpus needs n")
        if self.kind == "file" and not self.path:
            raise ValueError("file corpus needs a path")
        return self


class VerificationReport(BaseModel):
    theorem: Theorem
    n: int
    c: int
    gamma: float
    graph_class: GraphClass
    class_size: int
    extremum: Optional[float]
    bound: float
    gap: Optional[float]
    separation: Optional[float] = None
    witnesses_found: List[str] = []
    witnesses_expected: List[str] = []
    counterexample: Optional[str] = None
    verdict: Verdict
    exploratory: bool = False


# =========================================================
# CLI
# =========================================================
class RunConfig(BaseModel):
    subcommand: Literal["index", "gen", "bound", "enumerate", "verify", "canon", "profile"]
    gammas: List[float] = []
    n: List[int] = []
    c: Optional[int] = None
    theorems: List[Theorem] = []
    inputs: List[str] = []
    out: Optional[str] = None
    format: Literal["json", "csv", "text"] = "text"
    jobs: int = Field(default=1, ge=1)
    exploratory: bool = False
    tolerance: float = Field(default=1e-9, gt=0)

    @field_validator("gammas")
    @classmethod
    def gammas_nonzero(cls, v: List[float]) -> List[float]:
        if any(g == 0 for g in v):
            raise ValueError("gamma must be a non-zero real number")
        return v

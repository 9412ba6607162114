import math
from enum import Enum
from typing import Annotated, Callable, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from fs_lab.errors import InvalidAlpha

ALPHA_MARGIN = 1e-9
SCHUR_TOL = 1e-12

# --- Domain records ---


class AlphaParam(BaseModel):
    """Opening-angle parameter of Co(alpha): the image has angle <= pi*alpha at infinity."""

    model_config = ConfigDict(frozen=True)

    alpha: float

    @field_validator("alpha")
    @classmethod
    def _opening_angle(cls, v: float) -> float:
        if not math.isfinite(v) or not (1.0 + ALPHA_MARGIN < v <= 2.0 + ALPHA_MARGIN):
            raise ValueError("alpha must lie in (1,2]")
        return v


def coerce_alpha(value: Union[AlphaParam, float]) -> AlphaParam:
    if isinstance(value, AlphaParam):
        return value
    try:
        return AlphaParam(alpha=value)
    except ValidationError:
        raise InvalidAlpha("alpha must lie in (1,2]")


class SchurPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    c0: complex
    c1: complex

    def violation(self) -> Optional[str]:
        if abs(self.c0) > 1.0 + SCHUR_TOL:
            return f"|c0| = {abs(self.c0)} > 1"
        if abs(self.c1) > 1.0 - abs(self.c0) ** 2 + SCHUR_TOL:
            return f"|c1| = {abs(self.c1)} > 1 - |c0|^2 = {1.0 - abs(self.c0) ** 2}"
        return None


class CoeffPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    a2: complex
    a3: complex


class QuadCoeffs(BaseModel):
    """a3 - lambda*a2^2 = A + B*c0 + C*c0^2 + D*c1."""

    model_config = ConfigDict(frozen=True)

    A: float
    B: float
    C: float
    D: float


class Thresholds(BaseModel):
    model_config = ConfigDict(frozen=True)

    t0: float
    t1: float
    t2: float
    lam1: float
    lam2: float
    t3: float
    t4: float


class Regime(str, Enum):
    BRANCH1 = "Branch1"
    BRANCH2 = "Branch2_gRm"
    BRANCH3 = "Branch3_k1"
    BRANCH4 = "Branch4"


class OuterExtremal(BaseModel):
    kind: Literal["OuterExtremal"] = "OuterExtremal"


class CaseDParams(BaseModel):
    kind: Literal["CaseDParams"] = "CaseDParams"
    r_m: float


class CaseEFree(BaseModel):
    kind: Literal["CaseEFree"] = "CaseEFree"


class CaseFTheta(BaseModel):
    kind: Literal["CaseFTheta"] = "CaseFTheta"
    theta0: float


Extremal = Annotated[
    Union[OuterExtremal, CaseDParams, CaseEFree, CaseFTheta],
    Field(discriminator="kind"),
]


class BoundResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0.0)
    regime: Regime
    thresholds: Thresholds
    extremal: Extremal


class AuxFunctions(BaseModel):
    """Auxiliary functions of the case analysis; radii are None where undefined."""

    model_config = ConfigDict(frozen=True)

    x_of_r: Callable[[float], float]
    h: Callable[[float, float], float]
    g: Callable[[float], float]
    k: Optional[Callable[[float], float]] = None
    l: Callable[[float], float]
    n: Callable[[float], float]
    r_m: Optional[float] = None
    r_0: Optional[float] = None
    r_1: Optional[float] = None
    r_2: Optional[float] = None
    r_n: Optional[float] = None


class OracleResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    c0: complex


class CheckResult(BaseModel):
    name: str
    max_deviation: float
    tolerance: float
    passed: bool
    worst_alpha: Optional[float] = None
    worst_lambda: Optional[float] = None


class VerificationReport(BaseModel):
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


# --- HTTP payloads ---


class BoundResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    alpha: float
    lam: float = Field(..., alias="lambda")
    bound: float
    regime: Regime
    thresholds: Thresholds
    extremal: Extremal


class CurveRow(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(..., alias="lambda")
    bound: float
    regime: Regime
    oracle: Optional[float] = None
    classical_s: Optional[float] = None
    koepf_starlike: Optional[float] = None


class CurveResponse(BaseModel):
    alpha: float
    rows: List[CurveRow]


class ExtremalResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    alpha: float
    lam: float = Field(..., alias="lambda")
    regime: Regime
    coefficients: List[Tuple[float, float]]
    achieved: float
    bound: float
    note: Optional[str] = None


class CheckConcaveRequest(BaseModel):
    alpha: float
    coefficients: List[Tuple[float, float]]


class CheckConcaveResponse(BaseModel):
    min_re_p: float
    verdict: Literal["PASS", "FAIL"]

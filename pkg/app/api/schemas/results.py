# Pydantic schemas for command output documents
from typing import Dict, List, Optional

from pydantic import BaseModel

from app.api.schemas.system import to_pair
from app.domain.value_objects.classification import ClassificationReport
from app.domain.value_objects.coefficients import Coefficients
from app.domain.value_objects.reduced_form import ConstraintReport, ReducedForm
from app.domain.value_objects.special_case import Case51Match, Case51Reduced
from app.domain.value_objects.trajectory import PoleReport, TrajectoryPoint

Pair = List[float]


def _opt_pair(z) -> Optional[Pair]:
    return None if z is None else to_pair(z)


class ConstraintReportResponse(BaseModel):
    satisfied: bool
    generic: bool
    residuals: List[Pair]
    raw_residuals: List[Pair]
    flags: Dict[str, bool]
    reasons: List[str]

    @classmethod
    def from_domain(cls, report: ConstraintReport) -> "ConstraintReportResponse":
        f = report.flags
        return cls(
            satisfied=report.satisfied,
            generic=report.generic,
            residuals=[to_pair(r) for r in report.residuals],
            raw_residuals=[to_pair(r) for r in report.raw_residuals],
            flags={
                "c21_nonzero": f.c21_nonzero,
                "c12_nonzero": f.c12_nonzero,
                "c24_nonzero": f.c24_nonzero,
                "ineq1": f.ineq1,
                "ineq2": f.ineq2,
                "scalar_linear": f.scalar_linear,
            },
            reasons=list(f.reasons()),
        )


class ReducedFormResponse(BaseModel):
    z: List[Pair]
    alpha: List[List[Pair]]
    beta: List[Pair]
    w_plus: List[Optional[Pair]]
    w_minus: List[Optional[Pair]]
    branches: List[str]
    residuals: Dict[str, Pair]

    @classmethod
    def from_domain(cls, rf: ReducedForm, residuals: Dict[str, complex]) -> "ReducedFormResponse":
        return cls(
            z=[to_pair(rf.z1), to_pair(rf.z2)],
            alpha=[[to_pair(v) for v in row] for row in rf.alpha],
            beta=[to_pair(b) for b in rf.beta],
            w_plus=[_opt_pair(w) for w in rf.w_plus],
            w_minus=[_opt_pair(w) for w in rf.w_minus],
            branches=[b.value for b in rf.branches],
            residuals={k: to_pair(v) for k, v in residuals.items()},
        )


class TrajectoryPointResponse(BaseModel):
    t: float
    x1: Pair
    x2: Pair

    @classmethod
    def from_domain(cls, point: TrajectoryPoint) -> "TrajectoryPointResponse":
        return cls(t=point.t, x1=to_pair(point.x1), x2=to_pair(point.x2))


class PoleResponse(BaseModel):
    t: float
    component: Optional[int]
    t_before: Optional[float]
    t_after: Optional[float]

    @classmethod
    def from_domain(cls, pole: PoleReport) -> "PoleResponse":
        return cls(t=pole.t, component=pole.component, t_before=pole.t_before, t_after=pole.t_after)


class TrajectoryResponse(BaseModel):
    points: List[TrajectoryPointResponse]
    poles: List[PoleResponse]


class ClassificationResponse(BaseModel):
    regime: str
    modes: List[str]
    beta: List[Pair]
    period: Optional[float] = None
    rho: Optional[List[int]] = None
    omega: Optional[float] = None
    limit_state: Optional[List[Pair]] = None

    @classmethod
    def from_domain(cls, report: ClassificationReport) -> "ClassificationResponse":
        return cls(
            regime=report.regime.value,
            modes=[m.value for m in report.modes],
            beta=[to_pair(b) for b in report.beta],
            period=report.period,
            rho=[int(r) for r in report.rho] if report.rho else None,
            omega=report.omega,
            limit_state=[to_pair(x) for x in report.limit_state] if report.limit_state else None,
        )


class CoefficientsResponse(BaseModel):
    c: List[List[Pair]]

    @classmethod
    def from_domain(cls, c: Coefficients) -> "CoefficientsResponse":
        return cls(c=[[to_pair(v) for v in row] for row in c.rows])


class RoundtripResponse(BaseModel):
    file: str
    success: bool
    z_recovered: Optional[List[Pair]] = None
    z_expected: Optional[List[Pair]] = None
    z_error: Optional[float] = None
    coefficient_error: Optional[float] = None
    error: Optional[str] = None
    message: Optional[str] = None


class VerifyResponse(BaseModel):
    file: str
    success: bool
    sup_error: Optional[float] = None
    threshold: Optional[float] = None
    compared_points: int = 0
    poles: List[PoleResponse] = []
    error: Optional[str] = None
    message: Optional[str] = None


class Case51Response(BaseModel):
    matched: bool
    mirrored: bool
    reasons: List[str]
    params: Optional[Dict[str, Pair]] = None
    eta: Optional[List[List[Pair]]] = None
    gamma: Optional[List[Pair]] = None
    xi_plus: Optional[List[Optional[Pair]]] = None
    xi_minus: Optional[List[Optional[Pair]]] = None
    point: Optional[TrajectoryPointResponse] = None

    @classmethod
    def from_domain(cls, match: Case51Match, reduced: Optional[Case51Reduced],
                    point: Optional[TrajectoryPoint]) -> "Case51Response":
        p = match.params
        return cls(
            matched=match.matched,
            mirrored=match.mirrored,
            reasons=list(match.reasons),
            params={k: to_pair(getattr(p, k)) for k in ("f1", "f2", "g", "h1", "h2")} if p else None,
            eta=[[to_pair(v) for v in row] for row in reduced.eta] if reduced else None,
            gamma=[to_pair(g) for g in reduced.gamma] if reduced else None,
            xi_plus=[_opt_pair(x) for x in reduced.xi_plus] if reduced else None,
            xi_minus=[_opt_pair(x) for x in reduced.xi_minus] if reduced else None,
            point=TrajectoryPointResponse.from_domain(point) if point else None,
        )

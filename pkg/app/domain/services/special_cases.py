"""특수 부분류

1. c13 = c15 = c21 = c24 = 0 인 응용 부분류 (A11 = 0 이 허용되어 일반 환원이 거부하는 경우)
2. 동차 계 (선형항/상수항 0) 의 허용 판정과 지수 스케일 확장
"""
import cmath
import math
from typing import Optional, Union

from app.core.logger import get_logger
from app.domain.exceptions import (
    ConstraintViolated,
    DegenerateZ,
    InvalidInput,
    InvalidLambda,
    NonGeneric,
    PoleAtTime,
    ZMismatch,
)
from app.domain.services import inverse_map, riccati, solver
from app.domain.services.algebra import approx_eq, is_negligible
from app.domain.services.forward_map import symmetry_transform
from app.domain.services.integrator_service import IntegratorService
from app.domain.value_objects.coefficients import Coefficients, StructuralParams
from app.domain.value_objects.integration_settings import IntegrationSettings
from app.domain.value_objects.riccati import RiccatiParams
from app.domain.value_objects.special_case import (
    Case51Match,
    Case51Params,
    Case51Reduced,
    GateResult,
    HomogeneousAB,
)
from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE
from app.domain.value_objects.trajectory import InitialState, TrajectoryPoint

logger = get_logger("domain.special_cases")

# 이 오류들이 나면 닫힌 해 대신 수치 적분으로 대체 가능
_NOT_REDUCIBLE = (ConstraintViolated, NonGeneric, DegenerateZ, ZMismatch)


def match_case51(c: Coefficients, tol: Tolerance = DEFAULT_TOLERANCE) -> Case51Match:
    """계수가 응용 부분류 패턴과 그 3개 제약을 만족하는지 판정"""
    scale = c.max_abs()
    reasons = []
    for n, j in ((1, 3), (1, 5), (2, 1), (2, 4)):
        if not is_negligible(c.get(n, j), tol, scale):
            reasons.append(f"c{n}{j} != 0")

    if not is_negligible(c.get(1, 2), tol, scale):
        reasons.append("f12 != 0")
    if not approx_eq(c.get(2, 2), 2 * c.get(1, 1), tol):
        reasons.append("f21 != 2*f11")
    if not approx_eq(c.get(1, 4), c.get(2, 5), tol):
        reasons.append("g1 != g2")

    f1, f2 = c.get(1, 1), c.get(2, 3)
    if is_negligible(f1, tol, scale):
        reasons.append("|f1| <= tol")
    if is_negligible(f2, tol, scale):
        reasons.append("|f2| <= tol")

    if reasons:
        return Case51Match(reasons=reasons)
    g = (c.get(1, 4) + c.get(2, 5)) / 2
    return Case51Match(params=Case51Params(f1=f1, f2=f2, g=g, h1=c.get(1, 6), h2=c.get(2, 6)))


def dispatch_case51(c: Coefficients, tol: Tolerance = DEFAULT_TOLERANCE) -> Case51Match:
    """직접 패턴, 실패하면 x1 <-> x2 교환 패턴으로 판정 (mirrored=True)"""
    direct = match_case51(c, tol)
    if direct.matched:
        return direct
    mirrored = match_case51(symmetry_transform(c), tol)
    if mirrored.matched:
        mirrored.mirrored = True
        return mirrored
    return direct


def reduce_case51(p: Case51Params, tol: Tolerance = DEFAULT_TOLERANCE) -> Case51Reduced:
    """부분류 파라미터 -> 두 리카티 방정식 (eta, gamma, xi+-)"""
    ratio = p.f1 / p.f2
    eta = (
        (p.f2, p.g, ratio * p.h1 + p.h2),
        (-p.f2, p.g, -ratio * p.h1),
    )
    solutions = [riccati.reduce(RiccatiParams(*row), tol) for row in eta]
    return Case51Reduced(
        eta=eta,
        gamma=(solutions[0].beta, solutions[1].beta),
        xi_plus=(solutions[0].y_plus, solutions[1].y_plus),
        xi_minus=(solutions[0].y_minus, solutions[1].y_minus),
    )


def solve51_at(
    p: Case51Params,
    x0: InitialState,
    t: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> TrajectoryPoint:
    """부분류의 닫힌 해

    Raises:
        PoleAtTime: xi1 또는 xi2 의 극
    """
    if t == 0:
        return TrajectoryPoint(t=t, x1=x0.x1, x2=x0.x2)
    ratio = p.f1 / p.f2
    xi0 = (x0.x2 + ratio * x0.x1, -ratio * x0.x1)
    reduced = reduce_case51(p, tol)
    xi = []
    for n, row in enumerate(reduced.eta, start=1):
        params = RiccatiParams(*row)
        try:
            xi.append(riccati.flow_at(riccati.reduce(params, tol), params, xi0[n - 1], t, tol))
        except PoleAtTime as e:
            raise PoleAtTime(e.t, component=n) from e
    return TrajectoryPoint(t=t, x1=-xi[1] / ratio, x2=xi[0] + xi[1])


def solve_case51(
    match: Case51Match,
    x0: InitialState,
    t: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> TrajectoryPoint:
    """dispatch_case51 결과로 궤적 평가 (교환 패턴이면 상태를 교환해서 풀고 되돌림)"""
    if not match.matched:
        raise NonGeneric(match.reasons)
    if not match.mirrored:
        return solve51_at(match.params, x0, t, tol)
    return mirrored_point(solve51_at(match.params, swap_state(x0), t, tol))


def case51_coefficients(p: Case51Params) -> Coefficients:
    """부분류 파라미터의 전체 계수"""
    return Coefficients((
        (p.f1, 0j, 0j, p.g, 0j, p.h1),
        (0j, 2 * p.f1, p.f2, 0j, p.g, p.h2),
    ))


def case51_structural(p: Case51Params, lambda1: complex = 1.0, lambda2: complex = 1.0) -> StructuralParams:
    """부분류를 생성하는 구조 파라미터 (A11 = 0)"""
    if lambda1 == 0 or lambda2 == 0:
        raise InvalidLambda(f"lambda 는 0 이 아니어야 합니다: ({lambda1}, {lambda2})")
    A12 = -(p.f2 / p.f1) * lambda2
    A21, A22 = complex(lambda1), complex(lambda2)
    a1 = (A21 * p.f2, p.g, (A12 * p.h2 - A22 * p.h1) / (A12 * A21))
    a2 = (A12 * p.f1, p.g, p.h1 / A12)
    return StructuralParams(A=((0j, A12), (A21, A22)), a=(a1, a2))


def homogeneous_coefficients(ab: HomogeneousAB) -> Coefficients:
    """(A, B) 동차 계의 계수"""
    return Coefficients((
        (0j, 1 + 0j, 0j, 0j, 0j, 0j),
        (complex(ab.A), complex(ab.B), complex(ab.A), 0j, 0j, 0j),
    ))


def homogeneous_gate(ab: HomogeneousAB, tol: Tolerance = DEFAULT_TOLERANCE) -> GateResult:
    """(A, B) 동차 계가 가해 부분류에 속하는지 판정 ((0, 0), (1/2, 0) 만 허용)"""
    report = inverse_map.check_constraints(homogeneous_coefficients(ab), tol)
    return GateResult(
        admissible=report.satisfied,
        ab=ab,
        residuals=report.residuals,
        raw_residuals=report.raw_residuals,
    )


def _scaled_time(lam: complex, t: float) -> Union[float, complex]:
    """tau = (exp(lam t) - 1) / lam, lam = 0 이면 t"""
    if lam == 0:
        return t
    if lam.imag == 0:
        return math.expm1(lam.real * t) / lam.real
    return (cmath.exp(lam * t) - 1) / lam


def exp_scaling_extend(
    c_hom: Coefficients,
    lam: complex,
    x0: InitialState,
    t: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
    integrator: Optional[IntegratorService] = None,
    settings: Optional[IntegrationSettings] = None,
) -> TrajectoryPoint:
    """동차 계의 해 zeta 로 x' = lam x + (이차항) 의 해를 구성

    x(t) = exp(lam t) zeta(tau), tau = (exp(lam t) - 1) / lam.
    zeta 는 닫힌 해로 구하고, 환원이 불가능하면 integrator 로 수치 적분합니다.

    Raises:
        InvalidInput: c_hom 에 선형항/상수항이 있을 때
        PoleAtTime: zeta 가 tau 에서 극을 가질 때
    """
    scale = c_hom.max_abs()
    if not all(is_negligible(c_hom.get(n, j), tol, scale) for n in (1, 2) for j in (4, 5, 6)):
        raise InvalidInput("동차 계가 아닙니다 (c_n4, c_n5, c_n6 != 0)")

    lam = complex(lam)
    tau = _scaled_time(lam, t)

    try:
        rf = inverse_map.reduce(c_hom, tol)
        zeta = solver.evolve(rf, x0, tau, tol)
    except _NOT_REDUCIBLE as e:
        if integrator is None or complex(tau).imag != 0:
            raise
        logger.info(f"닫힌 해 환원 불가 ({e.error_code}), 수치 적분으로 대체")
        point = integrator.integrate(c_hom, x0, complex(tau).real, settings or IntegrationSettings())
        zeta = (point.x1, point.x2)

    growth = cmath.exp(lam * t)
    return TrajectoryPoint(t=t, x1=growth * zeta[0], x2=growth * zeta[1])


def swap_state(x0: InitialState) -> InitialState:
    """x1 <-> x2"""
    return InitialState(x0.x2, x0.x1)


def mirrored_point(point: TrajectoryPoint) -> TrajectoryPoint:
    """교환 좌표에서 구한 점을 원래 좌표로"""
    return TrajectoryPoint(t=point.t, x1=point.x2, x2=point.x1)

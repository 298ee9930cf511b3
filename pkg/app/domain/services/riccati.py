"""상수계수 스칼라 리카티 방정식의 닫힌 해

y' = a2*y^2 + a1*y + a0 를 평형점 y+, y- 와 특성 지수 beta 로 환원하고,
임의의 (복소) 시각에서 해를 평가합니다.
"""
import cmath
import math
from typing import List, Union

from app.domain.exceptions import PoleAtTime
from app.domain.services.algebra import (
    approx_eq,
    csqrt_principal,
    is_negligible,
    stable_quadratic_roots,
)
from app.domain.value_objects.riccati import (
    Asymptote,
    AsymptoteKind,
    RiccatiBranch,
    RiccatiParams,
    RiccatiSolution,
)
from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE

DEFAULT_POLE_RTOL = 1e-10
# 실수 시각 판정용 상대 허용오차
REAL_TIME_RTOL = 1e-9

Time = Union[float, complex]


def reduce(p: RiccatiParams, tol: Tolerance = DEFAULT_TOLERANCE) -> RiccatiSolution:
    """리카티 계수를 평형점과 특성 지수로 환원

    Args:
        p: 리카티 계수
        tol: 계수/지수가 0 인지 판정할 허용오차

    Returns:
        RiccatiSolution: 분기와 평형점
    """
    scale = max(abs(p.a2), abs(p.a1), abs(p.a0))

    if not is_negligible(p.a2, tol, scale):
        beta = csqrt_principal(p.a1 * p.a1 - 4 * p.a0 * p.a2)
        beta_scale = max(abs(p.a1), 2 * math.sqrt(abs(p.a0 * p.a2)))
        if is_negligible(beta, tol, beta_scale):
            y_star = -p.a1 / (2 * p.a2)
            return RiccatiSolution(y_star, y_star, 0j, RiccatiBranch.DOUBLE_ROOT)
        y_minus, y_plus = stable_quadratic_roots(p.a2, p.a1, p.a0)
        return RiccatiSolution(y_plus, y_minus, beta, RiccatiBranch.GENERIC)

    if not is_negligible(p.a1, tol, scale):
        y_eq = -p.a0 / p.a1
        return RiccatiSolution(y_eq, y_eq, csqrt_principal(p.a1 * p.a1), RiccatiBranch.LINEAR)

    return RiccatiSolution(None, None, 0j, RiccatiBranch.CONSTANT)


def flow_at(
    sol: RiccatiSolution,
    p: RiccatiParams,
    y0: complex,
    t: Time,
    tol: Tolerance = DEFAULT_TOLERANCE,
    pole_rtol: float = DEFAULT_POLE_RTOL,
) -> complex:
    """y(0) = y0 인 해의 시각 t 에서의 값

    Raises:
        PoleAtTime: 분모가 분자 항 크기 대비 pole_rtol 미만일 때
    """
    y0 = complex(y0)
    if t == 0:
        return y0

    if sol.branch is RiccatiBranch.GENERIC:
        return _generic_flow(sol, y0, t, tol, pole_rtol)

    if sol.branch is RiccatiBranch.DOUBLE_ROOT:
        y_star = sol.y_plus
        u = y0 - y_star
        growth = p.a2 * u * t
        den = 1 - growth
        if abs(den) < pole_rtol * max(1.0, abs(growth)):
            raise PoleAtTime(t)
        return y_star + u / den

    if sol.branch is RiccatiBranch.LINEAR:
        y_eq = sol.y_plus
        return y_eq + (y0 - y_eq) * cmath.exp(p.a1 * t)

    return y0 + p.a0 * t


def _generic_flow(sol: RiccatiSolution, y0: complex, t: Time, tol: Tolerance, pole_rtol: float) -> complex:
    y_plus, y_minus = sol.y_plus, sol.y_minus
    # 평형점에서 출발하면 그대로 유지
    if approx_eq(y0, y_plus, tol):
        return y_plus
    if approx_eq(y0, y_minus, tol):
        return y_minus

    d_minus = y0 - y_minus
    d_plus = y0 - y_plus
    bt = sol.beta * t
    # |exp| <= 1 이 되도록 지수의 부호를 선택
    if bt.real <= 0:
        e = cmath.exp(bt)
        num = y_plus * d_minus - y_minus * d_plus * e
        den = d_minus - d_plus * e
        scale = max(abs(d_minus), abs(d_plus * e))
    else:
        f = cmath.exp(-bt)
        num = y_plus * d_minus * f - y_minus * d_plus
        den = d_minus * f - d_plus
        scale = max(abs(d_minus * f), abs(d_plus))

    if abs(den) < pole_rtol * scale:
        raise PoleAtTime(t)
    return num / den


def asymptote(sol: RiccatiSolution, p: RiccatiParams, tol: Tolerance = DEFAULT_TOLERANCE) -> Asymptote:
    """t -> +inf 거동 (일반적인 초기값 기준)"""
    if sol.branch is RiccatiBranch.GENERIC:
        beta = sol.beta
        if abs(beta.real) <= tol.bound(abs(beta)):
            return Asymptote(AsymptoteKind.PERIODIC)
        if beta.real < 0:
            return Asymptote(AsymptoteKind.CONVERGES, sol.y_plus)
        return Asymptote(AsymptoteKind.CONVERGES, sol.y_minus)

    if sol.branch is RiccatiBranch.DOUBLE_ROOT:
        return Asymptote(AsymptoteKind.CONVERGES, sol.y_plus)

    if sol.branch is RiccatiBranch.LINEAR:
        a1 = p.a1
        if abs(a1.real) <= tol.bound(abs(a1)):
            return Asymptote(AsymptoteKind.PERIODIC)
        if a1.real < 0:
            return Asymptote(AsymptoteKind.CONVERGES, sol.y_plus)
        return Asymptote(AsymptoteKind.NO_LIMIT)

    if is_negligible(p.a0, tol):
        return Asymptote(AsymptoteKind.STATIONARY)
    return Asymptote(AsymptoteKind.NO_LIMIT)


def pole_times(
    sol: RiccatiSolution,
    p: RiccatiParams,
    y0: complex,
    t_start: float,
    t_end: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_poles: int = 10000,
) -> List[float]:
    """구간 [t_start, t_end] 안에서 닫힌 해가 극을 갖는 실수 시각들 (오름차순)"""
    lo, hi = min(t_start, t_end), max(t_start, t_end)
    y0 = complex(y0)

    if sol.branch is RiccatiBranch.DOUBLE_ROOT:
        u = y0 - sol.y_plus
        if is_negligible(u, tol, abs(y0)):
            return []
        t_pole = 1 / (p.a2 * u)
        if _is_real_time(t_pole) and lo <= t_pole.real <= hi:
            return [t_pole.real]
        return []

    if sol.branch is not RiccatiBranch.GENERIC:
        return []

    d_minus = y0 - sol.y_minus
    d_plus = y0 - sol.y_plus
    if approx_eq(y0, sol.y_plus, tol) or approx_eq(y0, sol.y_minus, tol):
        return []

    # 분모 0 조건: beta*t = log(d_minus/d_plus) + 2*pi*i*k
    log_ratio = cmath.log(d_minus / d_plus)
    beta = sol.beta
    times: List[float] = []

    if abs(beta.real) > REAL_TIME_RTOL * abs(beta):
        k = round((log_ratio.real * beta.imag / beta.real - log_ratio.imag) / (2 * math.pi))
        t_pole = (log_ratio + 2j * math.pi * k) / beta
        if _is_real_time(t_pole) and lo <= t_pole.real <= hi:
            times.append(t_pole.real)
        return times

    # 순허수 beta: |d_minus/d_plus| == 1 일 때만 주기적으로 극이 나타남
    if abs(log_ratio.real) > REAL_TIME_RTOL:
        return times
    omega = beta.imag
    k_bounds = sorted(((lo * omega - log_ratio.imag) / (2 * math.pi), (hi * omega - log_ratio.imag) / (2 * math.pi)))
    k_min, k_max = math.ceil(k_bounds[0]), math.floor(k_bounds[1])
    for k in range(k_min, min(k_max, k_min + max_poles - 1) + 1):
        t_pole = (log_ratio.imag + 2 * math.pi * k) / omega
        if lo <= t_pole <= hi:
            times.append(t_pole)
    return sorted(times)


def _is_real_time(t: complex) -> bool:
    return abs(t.imag) <= REAL_TIME_RTOL * max(1.0, abs(t))

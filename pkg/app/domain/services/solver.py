"""환원 형태를 이용한 궤적 평가와 장시간 거동 분류"""
import bisect
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from app.core.logger import get_logger
from app.domain.exceptions import InvalidInput, PoleAtTime
from app.domain.services import inverse_map, riccati
from app.domain.value_objects.classification import ClassificationReport, Regime, RowMode
from app.domain.value_objects.coefficients import Coefficients
from app.domain.value_objects.reduced_form import ReducedForm
from app.domain.value_objects.riccati import AsymptoteKind, RiccatiParams
from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE
from app.domain.value_objects.trajectory import (
    InitialState,
    PoleReport,
    SampledTrajectory,
    TrajectoryPoint,
)

logger = get_logger("domain.solver")

DEFAULT_MAX_DENOMINATOR = 64
DEFAULT_RATIONAL_TOL = 1e-9
DEFAULT_BLOWUP_THRESHOLD = 1e8


def initial_w(rf: ReducedForm, x0: InitialState) -> Tuple[complex, complex]:
    """x(0) -> w(0)"""
    dz = rf.z1 - rf.z2
    w1 = (x0.x1 - rf.z2 * x0.x2) / dz
    w2 = -(x0.x1 - rf.z1 * x0.x2) / dz
    return w1, w2


def evolve(
    rf: ReducedForm,
    x0: InitialState,
    t: Union[float, complex],
    tol: Tolerance = DEFAULT_TOLERANCE,
    pole_rtol: float = riccati.DEFAULT_POLE_RTOL,
) -> Tuple[complex, complex]:
    """(복소) 시각 t 에서의 상태

    Raises:
        PoleAtTime: w1 또는 w2 가 t 에서 극을 가질 때 (component 에 1 기반 성분 번호)
    """
    if t == 0:
        return x0.x1, x0.x2
    w = []
    for n, w_n0 in enumerate(initial_w(rf, x0), start=1):
        try:
            w.append(riccati.flow_at(rf.riccati_solution(n), rf.riccati_params(n), w_n0, t, tol, pole_rtol))
        except PoleAtTime as e:
            raise PoleAtTime(e.t, component=n) from e
    w1, w2 = w
    return rf.z1 * w1 + rf.z2 * w2, w1 + w2


def solve_at(
    rf: ReducedForm,
    x0: InitialState,
    t: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
    pole_rtol: float = riccati.DEFAULT_POLE_RTOL,
) -> TrajectoryPoint:
    """실수 시각 t 에서의 궤적 값 (t == 0 이면 x0 그대로)"""
    x1, x2 = evolve(rf, x0, t, tol, pole_rtol)
    return TrajectoryPoint(t=t, x1=x1, x2=x2)


def sample(
    rf: ReducedForm,
    x0: InitialState,
    t_grid: Sequence[float],
    tol: Tolerance = DEFAULT_TOLERANCE,
    pole_rtol: float = riccati.DEFAULT_POLE_RTOL,
    blowup_threshold: float = DEFAULT_BLOWUP_THRESHOLD,
) -> SampledTrajectory:
    """격자 위 궤적 평가

    극에서 평가가 실패하거나 크기가 blowup_threshold 를 넘는 점은 생략하고,
    구간 안의 극은 감싸는 격자 시각과 함께 poles 에 기록합니다.

    Raises:
        InvalidInput: t_grid 가 오름차순이 아닐 때
    """
    result = SampledTrajectory()
    if len(t_grid) == 0:
        return result
    if any(b < a for a, b in zip(t_grid, t_grid[1:])):
        raise InvalidInput("t_grid 는 오름차순이어야 합니다.")

    raised: List[Tuple[float, Optional[int]]] = []
    for t in t_grid:
        try:
            point = solve_at(rf, x0, t, tol, pole_rtol)
        except PoleAtTime as e:
            raised.append((t, e.component))
            continue
        if point.norm > blowup_threshold:
            logger.debug(f"극 근방 점 생략: t={t}, |x|={point.norm:.3e}")
            continue
        result.points.append(point)

    kept = [p.t for p in result.points]
    t_lo, t_hi = min(t_grid), max(t_grid)
    brackets = set()
    w0 = initial_w(rf, x0)
    for n in (1, 2):
        for t_pole in riccati.pole_times(
            rf.riccati_solution(n), rf.riccati_params(n), w0[n - 1], t_lo, t_hi, tol
        ):
            before, after = _bracket(kept, t_pole)
            brackets.add((before, after))
            result.poles.append(PoleReport(t=t_pole, component=n, t_before=before, t_after=after))

    for t, component in raised:
        before, after = _bracket(kept, t)
        if (before, after) in brackets:
            continue
        brackets.add((before, after))
        result.poles.append(PoleReport(t=t, component=component, t_before=before, t_after=after))

    result.poles.sort(key=lambda r: r.t)
    return result


def _bracket(kept: List[float], t: float) -> Tuple[Optional[float], Optional[float]]:
    i = bisect.bisect_left(kept, t)
    before = kept[i - 1] if i > 0 else None
    j = bisect.bisect_right(kept, t)
    after = kept[j] if j < len(kept) else None
    return before, after


def classify(
    rf: ReducedForm,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
    rational_tol: float = DEFAULT_RATIONAL_TOL,
) -> ClassificationReport:
    """장시간 거동 분류 (등시성, 점근적 등시성, 평형점 수렴, 일반)"""
    modes = []
    limits = []
    for n in (1, 2):
        asym = riccati.asymptote(rf.riccati_solution(n), rf.riccati_params(n), tol)
        if asym.kind is AsymptoteKind.PERIODIC:
            modes.append(RowMode.OSCILLATING)
        elif asym.kind is AsymptoteKind.CONVERGES:
            modes.append(RowMode.CONVERGING)
        else:
            modes.append(RowMode.UNBOUNDED)
        limits.append(asym.value)

    beta = rf.beta
    modes = tuple(modes)
    report = dict(beta=beta, modes=modes)

    if modes == (RowMode.OSCILLATING, RowMode.OSCILLATING):
        ratio = beta[0].imag / beta[1].imag
        frac = Fraction(ratio).limit_denominator(max_denominator)
        if abs(float(frac) - ratio) <= rational_tol * abs(ratio):
            p, q = frac.numerator, frac.denominator
            omega = beta[0].imag / p
            return ClassificationReport(
                regime=Regime.ISOCHRONOUS,
                period=2 * math.pi / abs(omega),
                rho=(Fraction(p), Fraction(q)),
                omega=omega,
                **report,
            )
        logger.debug(f"비공약 주파수 비: {ratio}")
        return ClassificationReport(regime=Regime.GENERIC, **report)

    if set(modes) == {RowMode.OSCILLATING, RowMode.CONVERGING}:
        i = modes.index(RowMode.OSCILLATING)
        return ClassificationReport(
            regime=Regime.ASYMPTOTICALLY_ISOCHRONOUS,
            period=2 * math.pi / abs(beta[i].imag),
            **report,
        )

    if modes == (RowMode.CONVERGING, RowMode.CONVERGING):
        w1, w2 = limits
        return ClassificationReport(
            regime=Regime.CONVERGES_TO_EQUILIBRIUM,
            limit_state=(rf.z1 * w1 + rf.z2 * w2, w1 + w2),
            **report,
        )

    return ClassificationReport(regime=Regime.GENERIC, **report)


def solve_via_structural(
    c: Coefficients,
    x0: InitialState,
    t: float,
    lambda1: complex = 1.0,
    lambda2: complex = 1.0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> TrajectoryPoint:
    """구조 파라미터 경로 (x = A y) 로 같은 궤적을 평가 - solve_at 의 독립 확인용"""
    if t == 0:
        return TrajectoryPoint(t=t, x1=x0.x1, x2=x0.x2)
    rf = inverse_map.reduce(c, tol)
    sp = inverse_map.structural_from_reduced(rf, lambda1, lambda2)
    y = []
    for n, y_n0 in enumerate(sp.unmix(x0.x1, x0.x2), start=1):
        params = RiccatiParams(*sp.a[n - 1])
        try:
            y.append(riccati.flow_at(riccati.reduce(params, tol), params, y_n0, t, tol))
        except PoleAtTime as e:
            raise PoleAtTime(e.t, component=n) from e
    x1, x2 = sp.mix(*y)
    return TrajectoryPoint(t=t, x1=x1, x2=x2)

"""계수 c 로부터 환원 형태 (z, alpha) 복원

제약식 판정, 일반 위치 조건 검사, z1/z2 계산(두 가지 방식 교차 확인),
리카티 계수 alpha 계산을 담당합니다.
"""
from typing import Tuple

from app.core.logger import get_logger
from app.domain.exceptions import (
    ConstraintViolated,
    DegenerateZ,
    DeterminantZero,
    InvalidLambda,
    NonGeneric,
    ZMismatch,
)
from app.domain.services import riccati
from app.domain.services.algebra import (
    approx_eq,
    is_negligible,
    normalized_sum,
    safe_div,
    stable_quadratic_roots,
)
from app.domain.value_objects.coefficients import Coefficients, StructuralParams
from app.domain.value_objects.reduced_form import ConstraintReport, GenericityFlags, ReducedForm
from app.domain.value_objects.riccati import RiccatiParams
from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE

logger = get_logger("domain.inverse_map")

DEFAULT_Z_MATCH_TOL = 1e-6

RESIDUAL_LABELS = (
    "cubic_z1", "cubic_z2",
    "quadratic_z1", "quadratic_z2",
    "second_degree_z1", "second_degree_z2",
    "first_degree_z1", "first_degree_z2",
)


def _unpack(c: Coefficients):
    return c.rows[0] + c.rows[1]


def constraint_monomials(c: Coefficients) -> Tuple[list, list, list, list]:
    """4개 제약식의 단항식 목록"""
    c11, c12, c13, c14, c15, c16, c21, c22, c23, c24, c25, c26 = _unpack(c)
    return (
        [4 * c13 * c21, -c12 * c22],
        [-2 * c12 * c21, 4 * c23 * c21, 2 * c11 * c22, -c22 * c22],
        [2 * c11 * c24, -c22 * c24, 2 * c21 * c25, -2 * c21 * c14],
        [c12 * c24, -2 * c15 * c21],
    )


def genericity_flags(c: Coefficients, tol: Tolerance = DEFAULT_TOLERANCE) -> GenericityFlags:
    c11, c12, c13, c14, c15, c16, c21, c22, c23, c24, c25, c26 = _unpack(c)
    quad_scale = max(abs(c11), abs(c12), abs(c13), abs(c21), abs(c22), abs(c23))
    lin_scale = max(abs(c14), abs(c15), abs(c24), abs(c25))

    p = 2 * c11 - c22
    disc1 = p * p + 8 * c12 * c21
    q = c25 - c14
    disc2 = q * q + 4 * c15 * c24

    return GenericityFlags(
        c21_nonzero=not is_negligible(c21, tol, quad_scale),
        c12_nonzero=not is_negligible(c12, tol, quad_scale),
        c24_nonzero=not is_negligible(c24, tol, lin_scale),
        ineq1=not is_negligible(disc1, tol, max(abs(p) ** 2, 8 * abs(c12 * c21))),
        ineq2=not is_negligible(disc2, tol, max(abs(q) ** 2, 4 * abs(c15 * c24))),
        scalar_linear=is_negligible(c15, tol, lin_scale) and approx_eq(c14, c25, tol),
    )


def check_constraints(c: Coefficients, tol: Tolerance = DEFAULT_TOLERANCE) -> ConstraintReport:
    """제약식 잔차와 일반 위치 조건 판정

    각 제약식은 최대 단항식 크기로 나눈 뒤 tol.bound(1.0) 과 비교합니다.
    0 이 아닌 단항식이 하나뿐인 제약식은 그 크기와 무관하게 정규화 잔차의
    크기가 1 이므로 위반으로 판정됩니다 (예: 동차 계의 B = 1e-15).
    정확히 0 인 단항식만 없는 것으로 봅니다.
    """
    raw, normalized = zip(*(normalized_sum(m) for m in constraint_monomials(c)))
    limit = tol.bound(1.0)
    satisfied = all(abs(r) <= limit for r in normalized)
    return ConstraintReport(
        residuals=tuple(normalized),
        raw_residuals=tuple(raw),
        satisfied=satisfied,
        flags=genericity_flags(c, tol),
    )


def reduce(
    c: Coefficients,
    tol: Tolerance = DEFAULT_TOLERANCE,
    z_match_tol: float = DEFAULT_Z_MATCH_TOL,
) -> ReducedForm:
    """계수 -> 환원 형태

    Raises:
        ConstraintViolated: 제약식 위반
        NonGeneric: c21 == 0, c12 == 0, 또는 스칼라가 아닌 선형 블록에서 c24 == 0
        DegenerateZ: 판별식이 0 이거나 z1 == z2
        ZMismatch: 두 z 계산 결과 불일치
    """
    report = check_constraints(c, tol)
    if not report.satisfied:
        raise ConstraintViolated(report.residuals)

    flags = report.flags
    if not (flags.c21_nonzero and flags.c12_nonzero):
        raise NonGeneric(flags.reasons())
    if not flags.c24_nonzero and not flags.scalar_linear:
        raise NonGeneric(flags.reasons())
    if not flags.ineq1:
        raise DegenerateZ("(2c11 - c22)^2 + 8c12c21 == 0")
    if flags.c24_nonzero and not flags.ineq2:
        raise DegenerateZ("(c25 - c14)^2 + 4c15c24 == 0")

    c11, c12, c13, c14, c15, c16, c21, c22, c23, c24, c25, c26 = _unpack(c)
    z1, z2 = stable_quadratic_roots(2 * c21, -(2 * c11 - c22), -c12)

    if flags.c24_nonzero:
        s1, s2 = stable_quadratic_roots(c24, c25 - c14, -c15)
        match_tol = Tolerance(abs_tol=tol.abs_tol, rel_tol=z_match_tol)
        same = approx_eq(z1, s1, match_tol) and approx_eq(z2, s2, match_tol)
        crossed = approx_eq(z1, s2, match_tol) and approx_eq(z2, s1, match_tol)
        if not (same or crossed):
            raise ZMismatch(f"z=({z1}, {z2}) vs ({s1}, {s2})")
    else:
        logger.debug("c24 == 0, 스칼라 선형 블록: 두 번째 z 교차 확인 생략")

    try:
        alpha = _alpha(c, z1, z2, tol)
    except ZeroDivisionError:
        raise DegenerateZ(f"z1 == z2 == {z1}")
    return _assemble(z1, z2, alpha, tol)


def _alpha(c: Coefficients, z1: complex, z2: complex, tol: Tolerance):
    """Raises ZeroDivisionError: z1 == z2 (tol 기준)"""
    c11, c12, c13, c14, c15, c16, c21, c22, c23, c24, c25, c26 = _unpack(c)
    scale = max(abs(z1), abs(z2))

    def over_dz(num):
        return safe_div(num, z1 - z2, tol, scale)

    alpha12 = over_dz(z1 * z1 * (c11 - z2 * c21) + z1 * (c12 - z2 * c22) + c13 - z2 * c23)
    alpha11 = over_dz(z1 * (c14 - z2 * c24) + c15 - z2 * c25)
    alpha10 = over_dz(c16 - z2 * c26)
    alpha22 = over_dz((-c13 + z1 * c23) + z2 * (-c12 + z1 * c22) + z2 * z2 * (-c11 + z1 * c21))
    alpha21 = over_dz(-c15 + z1 * c25 + z2 * (-c14 + z1 * c24))
    alpha20 = over_dz(-c16 + z1 * c26)
    return (alpha12, alpha11, alpha10), (alpha22, alpha21, alpha20)


def _assemble(z1: complex, z2: complex, alpha, tol: Tolerance) -> ReducedForm:
    solutions = [riccati.reduce(RiccatiParams(*row), tol) for row in alpha]
    logger.debug(
        f"환원 완료: z=({z1}, {z2}), beta=({solutions[0].beta}, {solutions[1].beta}), "
        f"분기=({solutions[0].branch.value}, {solutions[1].branch.value})"
    )
    return ReducedForm(
        z1=z1,
        z2=z2,
        alpha=alpha,
        beta=(solutions[0].beta, solutions[1].beta),
        w_plus=(solutions[0].y_plus, solutions[1].y_plus),
        w_minus=(solutions[0].y_minus, solutions[1].y_minus),
        branches=(solutions[0].branch, solutions[1].branch),
    )


def residual_suite(c: Coefficients, rf: ReducedForm) -> Tuple[complex, ...]:
    """z1, z2 에서 평가한 z 관련 방정식들의 정규화 잔차 (순서는 RESIDUAL_LABELS)"""
    c11, c12, c13, c14, c15, c16, c21, c22, c23, c24, c25, c26 = _unpack(c)

    def cubic(z):
        return [c21 * z ** 3, (c22 - c11) * z ** 2, (c23 - c12) * z, -c13]

    def quadratic(z):
        return [2 * c21 * z * z, -(2 * c11 - c22) * z, -c12]

    def second_degree(z):
        return [c24 * z * z, (c25 - c14) * z, -c15]

    def first_degree(z):
        return [
            -2 * c11 * c24 * z, c22 * c24 * z, -2 * c21 * c25 * z, 2 * c21 * c14 * z,
            -c12 * c24, 2 * c15 * c21,
        ]

    out = []
    for equation in (cubic, quadratic, second_degree, first_degree):
        for z in rf.z:
            out.append(normalized_sum(equation(z))[1])
    return tuple(out)


def structural_from_reduced(rf: ReducedForm, lambda1: complex, lambda2: complex) -> StructuralParams:
    """환원 형태와 스케일 (lambda1, lambda2) 로부터 구조 파라미터 재구성

    Raises:
        InvalidLambda: lambda 가 0 일 때
    """
    if lambda1 == 0 or lambda2 == 0:
        raise InvalidLambda(f"lambda 는 0 이 아니어야 합니다: ({lambda1}, {lambda2})")
    lambdas = (complex(lambda1), complex(lambda2))
    A = ((rf.z1 * lambdas[0], rf.z2 * lambdas[1]), (lambdas[0], lambdas[1]))
    a = tuple(
        (lam * alpha2, alpha1, alpha0 / lam)
        for lam, (alpha2, alpha1, alpha0) in zip(lambdas, rf.alpha)
    )
    return StructuralParams(A=A, a=a)


def reduced_from_structural(sp: StructuralParams, tol: Tolerance = DEFAULT_TOLERANCE) -> ReducedForm:
    """구조 파라미터 -> 환원 형태 (structural_from_reduced 의 역)

    계수 c 가 비일반적(c21 == 0 등)인 경우에도 구조가 알려진 계에는 사용할 수 있습니다.

    Raises:
        DeterminantZero: |det A| 가 허용오차 이하일 때
        NonGeneric: A21 또는 A22 가 0 일 때
    """
    (A11, A12), (A21, A22) = sp.A
    D = sp.determinant
    if is_negligible(D, tol, max(abs(A11 * A22), abs(A12 * A21))):
        raise DeterminantZero(f"det A = {D}")
    scale = max(abs(A11), abs(A12), abs(A21), abs(A22))
    z, reasons = [], []
    for name, num, den in (("A21 == 0", A11, A21), ("A22 == 0", A12, A22)):
        try:
            z.append(safe_div(num, den, tol, scale))
        except ZeroDivisionError:
            reasons.append(name)
    if reasons:
        raise NonGeneric(reasons)

    lambdas = (A21, A22)
    alpha = tuple(
        (a2 / lam, a1, a0 * lam)
        for lam, (a2, a1, a0) in zip(lambdas, sp.a)
    )
    return _assemble(z[0], z[1], alpha, tol)

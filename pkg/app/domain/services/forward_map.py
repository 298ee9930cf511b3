"""구조 파라미터 (A, a) 로부터 이차계 계수 c 생성

x = A y 로 두 개의 독립 리카티 방정식을 섞으면 제약식을 만족하는
이차 평면계가 얻어집니다.
"""
from app.domain.exceptions import DeterminantZero
from app.domain.services.algebra import is_negligible
from app.domain.value_objects.coefficients import Coefficients, StructuralParams
from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE


def forward(sp: StructuralParams, tol: Tolerance = DEFAULT_TOLERANCE) -> Coefficients:
    """구조 파라미터 -> 계수

    Raises:
        DeterminantZero: |det A| 가 허용오차 이하일 때
    """
    (A11, A12), (A21, A22) = sp.A
    (a12, a11, a10), (a22, a21, a20) = sp.a
    D = sp.determinant
    scale = max(abs(A11 * A22), abs(A12 * A21))
    if is_negligible(D, tol, scale):
        raise DeterminantZero(f"det A = {D}")
    D2 = D * D

    c11 = (a12 * A11 * A22 ** 2 + a22 * A12 * A21 ** 2) / D2
    c12 = -2 * A11 * A12 * (a12 * A22 + a22 * A21) / D2
    c13 = A11 * A12 * (a12 * A12 + a22 * A11) / D2
    c14 = (a11 * A11 * A22 - a21 * A12 * A21) / D
    c15 = -(a11 - a21) * A11 * A12 / D
    c16 = a10 * A11 + a20 * A12

    c21 = A22 * A21 * (a22 * A21 + a12 * A22) / D2
    c22 = -2 * A22 * A21 * (a22 * A11 + a12 * A12) / D2
    c23 = (a22 * A22 * A11 ** 2 + a12 * A21 * A12 ** 2) / D2
    c24 = -(a21 - a11) * A22 * A21 / D
    c25 = (a21 * A11 * A22 - a11 * A12 * A21) / D
    c26 = a20 * A22 + a10 * A21

    return Coefficients((
        (c11, c12, c13, c14, c15, c16),
        (c21, c22, c23, c24, c25, c26),
    ))


def symmetry_transform(c: Coefficients) -> Coefficients:
    """x1 <-> x2 교환에 대응하는 계수 재배열 (involution)"""
    (c11, c12, c13, c14, c15, c16), (c21, c22, c23, c24, c25, c26) = c.rows
    return Coefficients((
        (c23, c22, c21, c25, c24, c26),
        (c13, c12, c11, c15, c14, c16),
    ))


def swap_structural(sp: StructuralParams) -> StructuralParams:
    """x1 <-> x2, y1 <-> y2 교환에 대응하는 구조 파라미터"""
    (A11, A12), (A21, A22) = sp.A
    return StructuralParams(A=((A22, A21), (A12, A11)), a=(sp.a[1], sp.a[0]))

"""복소수 스칼라 기본 연산

주 제곱근(principal square root), 허용오차 비교, 정규화 합 등
다른 모든 도메인 서비스가 공유하는 순수 함수들입니다.
"""
import cmath
import math
from typing import Iterable, Optional, Tuple

from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE


def ensure_finite(z: complex, name: str = "value") -> complex:
    """NaN/Inf 가 아닌 복소수로 변환

    Raises:
        ValueError: 실수부나 허수부가 유한하지 않을 때
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} 은(는) 유한한 복소수여야 합니다: {z}")
    return z


def csqrt_principal(z: complex) -> complex:
    """주 제곱근: w*w == z, Re(w) >= 0, Re(w) == 0 이면 Im(w) >= 0"""
    w = cmath.sqrt(complex(z))
    # 음의 실수축 위 -0.0 허수부는 cmath 에서 -i 쪽으로 간다
    if w.real == 0.0 and w.imag < 0.0:
        w = -w
    return w


def approx_eq(a: complex, b: complex, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """|a - b| <= abs_tol + rel_tol * max(|a|, |b|)"""
    return abs(a - b) <= tol.bound(max(abs(a), abs(b)))


def is_negligible(z: complex, tol: Tolerance = DEFAULT_TOLERANCE, scale: float = 0.0) -> bool:
    """|z| <= abs_tol + rel_tol * scale"""
    return abs(z) <= tol.bound(scale)


def safe_div(
    num: complex,
    den: complex,
    tol: Tolerance = DEFAULT_TOLERANCE,
    scale: Optional[float] = None,
) -> complex:
    """num / den, |den| <= tol.bound(scale) 이면 ZeroDivisionError (scale 기본값 |num|)"""
    if is_negligible(den, tol, abs(num) if scale is None else scale):
        raise ZeroDivisionError(f"분모가 0에 가깝습니다: {den}")
    return num / den


def normalized_sum(monomials: Iterable[complex]) -> Tuple[complex, complex]:
    """단항식 합과 최대 단항식 크기로 정규화한 합

    Returns:
        (원래 합, 정규화된 합). 모든 단항식이 0 이면 (0, 0).
    """
    terms = [complex(m) for m in monomials]
    raw = sum(terms, 0j)
    scale = max((abs(m) for m in terms), default=0.0)
    if scale == 0.0:
        return raw, 0j
    return raw, raw / scale


def stable_quadratic_roots(a: complex, b: complex, c: complex) -> Tuple[complex, complex]:
    """a z^2 + b z + c = 0 의 두 근 (소거 오차 없는 공식)

    Returns:
        (minus 근, plus 근): 각각 (-b - s)/(2a), (-b + s)/(2a) 에 해당하는 근,
        s 는 판별식의 주 제곱근.
    """
    a, b, c = complex(a), complex(b), complex(c)
    s = csqrt_principal(b * b - 4 * a * c)
    if (b.conjugate() * s).real >= 0:
        q = -(b + s) / 2
        minus_root = q / a
        plus_root = c / q if q != 0 else minus_root
    else:
        q = -(b - s) / 2
        plus_root = q / a
        minus_root = c / q if q != 0 else plus_root
    return minus_root, plus_root

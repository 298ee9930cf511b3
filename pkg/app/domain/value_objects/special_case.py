from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from app.domain.services.algebra import ensure_finite

Triple = Tuple[complex, complex, complex]


@dataclass(frozen=True)
class Case51Params:
    """부분류 x1' = x1 (f1 x1 + g) + h1, x2' = x2 (2 f1 x1 + f2 x2 + g) + h2 의 파라미터"""
    f1: complex
    f2: complex
    g: complex
    h1: complex
    h2: complex

    def __post_init__(self):
        """데이터 유효성 검증"""
        for name in ("f1", "f2", "g", "h1", "h2"):
            object.__setattr__(self, name, ensure_finite(getattr(self, name), name))
        if self.f1 == 0 or self.f2 == 0:
            raise ValueError("f1, f2 는 0 이 아니어야 합니다.")


@dataclass(frozen=True)
class Case51Reduced:
    """부분류의 리카티 환원: xi_n' = eta_n2 xi_n^2 + eta_n1 xi_n + eta_n0

    eta 의 각 행은 (eta_n2, eta_n1, eta_n0), gamma 는 각 행의 특성 지수입니다.
    """
    eta: Tuple[Triple, Triple]
    gamma: Tuple[complex, complex]
    xi_plus: Tuple[Optional[complex], Optional[complex]]
    xi_minus: Tuple[Optional[complex], Optional[complex]]


@dataclass
class Case51Match:
    """부분류 판정 결과 (실패 시 params 는 None, reasons 에 위반 항목)"""
    params: Optional[Case51Params] = None
    reasons: List[str] = field(default_factory=list)
    mirrored: bool = False

    @property
    def matched(self) -> bool:
        return self.params is not None


@dataclass(frozen=True)
class HomogeneousAB:
    """동차 계 c12 = 1, c21 = A, c22 = B, c23 = A (나머지 0)"""
    A: complex
    B: complex


@dataclass(frozen=True)
class GateResult:
    """동차 계 허용 판정"""
    admissible: bool
    ab: HomogeneousAB
    residuals: Tuple[complex, complex, complex, complex]
    raw_residuals: Tuple[complex, complex, complex, complex]

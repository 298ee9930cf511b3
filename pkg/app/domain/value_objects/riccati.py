from dataclasses import dataclass
from enum import Enum
from typing import Optional

from app.domain.services.algebra import ensure_finite


@dataclass(frozen=True)
class RiccatiParams:
    """상수계수 리카티 방정식 y' = a2*y^2 + a1*y + a0 의 계수"""
    a2: complex
    a1: complex
    a0: complex

    def __post_init__(self):
        """데이터 유효성 검증"""
        for name in ("a2", "a1", "a0"):
            object.__setattr__(self, name, ensure_finite(getattr(self, name), name))

    def rhs(self, y: complex) -> complex:
        """우변 값"""
        return (self.a2 * y + self.a1) * y + self.a0


class RiccatiBranch(str, Enum):
    """닫힌 해의 분기"""
    GENERIC = "generic"
    DOUBLE_ROOT = "double_root"
    LINEAR = "linear"
    CONSTANT = "constant"


@dataclass(frozen=True)
class RiccatiSolution:
    """리카티 방정식의 평형점과 특성 지수

    LINEAR 분기는 평형점 -a0/a1 하나를 y_plus, y_minus 양쪽에 저장하고,
    CONSTANT 분기는 평형점이 없어 둘 다 None 입니다.
    """
    y_plus: Optional[complex]
    y_minus: Optional[complex]
    beta: complex
    branch: RiccatiBranch


class AsymptoteKind(str, Enum):
    """t -> +inf 에서의 거동"""
    CONVERGES = "converges"
    NO_LIMIT = "no_limit"
    PERIODIC = "periodic"
    STATIONARY = "stationary"


@dataclass(frozen=True)
class Asymptote:
    """점근 거동 (CONVERGES 일 때만 value 가 극한값)"""
    kind: AsymptoteKind
    value: Optional[complex] = None

from dataclasses import dataclass, field
from typing import List, Optional

from app.domain.services.algebra import ensure_finite


@dataclass(frozen=True)
class InitialState:
    """초기 상태 (x1(0), x2(0))"""
    x1: complex
    x2: complex

    def __post_init__(self):
        """데이터 유효성 검증"""
        object.__setattr__(self, "x1", ensure_finite(self.x1, "x1(0)"))
        object.__setattr__(self, "x2", ensure_finite(self.x2, "x2(0)"))


@dataclass(frozen=True)
class TrajectoryPoint:
    """시각 t 에서의 상태"""
    t: float
    x1: complex
    x2: complex

    def distance(self, other: "TrajectoryPoint") -> float:
        """두 상태 사이의 유클리드 거리 (C^2)"""
        return (abs(self.x1 - other.x1) ** 2 + abs(self.x2 - other.x2) ** 2) ** 0.5

    @property
    def norm(self) -> float:
        return (abs(self.x1) ** 2 + abs(self.x2) ** 2) ** 0.5


@dataclass(frozen=True)
class PoleReport:
    """샘플링 구간 안의 극

    t_before / t_after 는 극을 감싸는 (생략되지 않은) 격자 시각입니다.
    """
    t: float
    component: Optional[int]
    t_before: Optional[float] = None
    t_after: Optional[float] = None


@dataclass
class SampledTrajectory:
    """격자 위에서 평가한 궤적과 극 목록"""
    points: List[TrajectoryPoint] = field(default_factory=list)
    poles: List[PoleReport] = field(default_factory=list)

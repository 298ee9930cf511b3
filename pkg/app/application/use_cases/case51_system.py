from dataclasses import dataclass
from typing import Optional

from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import special_cases
from app.domain.value_objects.special_case import Case51Match, Case51Reduced
from app.domain.value_objects.tolerance import Tolerance
from app.domain.value_objects.trajectory import InitialState, TrajectoryPoint

logger = get_logger("application.use_cases.case51_system")

# 영(0) 패턴은 맞지만 부분류 제약이 깨진 경우
_CONSTRAINT_REASONS = {"f12 != 0", "f21 != 2*f11", "g1 != g2"}


@dataclass
class Case51SystemInput:
    """응용 부분류 판정/풀이 유스케이스 입력"""
    document: SystemDocument
    t: float = 0.0
    x0: Optional[InitialState] = None


@dataclass
class Case51SystemOutput:
    """응용 부분류 유스케이스 출력 (x0 가 없으면 point 는 None)"""
    success: bool
    match: Optional[Case51Match] = None
    reduced: Optional[Case51Reduced] = None
    point: Optional[TrajectoryPoint] = None
    error: Optional[str] = None
    message: Optional[str] = None


class Case51SystemUseCase:
    """응용 부분류 패턴 판정 후 전용 닫힌 해로 풀이"""

    def __init__(self, tol: Tolerance):
        self.tol = tol

    def execute(self, input_data: Case51SystemInput) -> Case51SystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        try:
            match = special_cases.dispatch_case51(document.coefficients, self.tol)
            if not match.matched:
                code = "CONSTRAINT_VIOLATED" if set(match.reasons) <= _CONSTRAINT_REASONS else "NON_GENERIC"
                logger.info(f"부분류 불일치: {document.name} ({', '.join(match.reasons)})")
                return Case51SystemOutput(success=False, match=match, error=code, message="; ".join(match.reasons))

            reduced = special_cases.reduce_case51(match.params, self.tol)
            x0 = input_data.x0 or document.initial_state
            point = None
            if x0 is not None:
                point = special_cases.solve_case51(match, x0, input_data.t, self.tol)
            return Case51SystemOutput(success=True, match=match, reduced=reduced, point=point)
        except QuadSolveError as e:
            logger.info(f"부분류 풀이 실패: {document.name} ({e.error_code})")
            return Case51SystemOutput(success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"부분류 풀이 중 오류 발생: {e}")
            return Case51SystemOutput(success=False, error="INTERNAL_ERROR", message=str(e))

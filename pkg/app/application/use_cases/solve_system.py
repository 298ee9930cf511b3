from dataclasses import dataclass
from typing import Optional

from app.application.use_cases.system_resolver import SystemResolver
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import solver
from app.domain.value_objects.trajectory import InitialState, TrajectoryPoint

logger = get_logger("application.use_cases.solve_system")


@dataclass
class SolveSystemInput:
    """한 시각 궤적 평가 유스케이스 입력"""
    document: SystemDocument
    t: float
    x0: Optional[InitialState] = None  # 없으면 문서의 x0


@dataclass
class SolveSystemOutput:
    """한 시각 궤적 평가 유스케이스 출력"""
    point: Optional[TrajectoryPoint]
    success: bool
    error: Optional[str] = None
    message: Optional[str] = None


class SolveSystemUseCase:
    """닫힌 해로 시각 t 의 상태 계산"""

    def __init__(self, resolver: SystemResolver, pole_rtol: float):
        self.resolver = resolver
        self.pole_rtol = pole_rtol

    def execute(self, input_data: SolveSystemInput) -> SolveSystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        try:
            x0 = document.with_initial_state(input_data.x0)
        except ValueError as e:
            return SolveSystemOutput(point=None, success=False, error="MALFORMED_INPUT", message=str(e))

        try:
            rf = self.resolver.reduced_form(document)
            point = solver.solve_at(rf, x0, input_data.t, self.resolver.tol, self.pole_rtol)
            return SolveSystemOutput(point=point, success=True)
        except QuadSolveError as e:
            logger.info(f"궤적 평가 실패: {document.name} t={input_data.t} ({e.error_code})")
            return SolveSystemOutput(point=None, success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"궤적 평가 중 오류 발생: {e}")
            return SolveSystemOutput(point=None, success=False, error="INTERNAL_ERROR", message=str(e))

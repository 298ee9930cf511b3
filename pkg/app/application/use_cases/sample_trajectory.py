from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.application.use_cases.system_resolver import SystemResolver
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import solver
from app.domain.value_objects.trajectory import InitialState, SampledTrajectory

logger = get_logger("application.use_cases.sample_trajectory")


@dataclass
class SampleTrajectoryInput:
    """격자 샘플링 유스케이스 입력 (steps 구간 -> steps + 1 점)"""
    document: SystemDocument
    t0: float
    t1: float
    steps: int
    x0: Optional[InitialState] = None


@dataclass
class SampleTrajectoryOutput:
    """격자 샘플링 유스케이스 출력"""
    trajectory: Optional[SampledTrajectory]
    success: bool
    error: Optional[str] = None
    message: Optional[str] = None


class SampleTrajectoryUseCase:
    """등간격 격자 위 궤적 샘플링 (극 근방 점은 생략하고 극 목록 보고)"""

    def __init__(self, resolver: SystemResolver, pole_rtol: float, blowup_threshold: float):
        self.resolver = resolver
        self.pole_rtol = pole_rtol
        self.blowup_threshold = blowup_threshold

    def execute(self, input_data: SampleTrajectoryInput) -> SampleTrajectoryOutput:
        """유스케이스 실행"""
        document = input_data.document
        if input_data.steps < 1:
            return SampleTrajectoryOutput(
                trajectory=None, success=False, error="MALFORMED_INPUT", message="steps 는 1 이상이어야 합니다."
            )
        try:
            x0 = document.with_initial_state(input_data.x0)
        except ValueError as e:
            return SampleTrajectoryOutput(trajectory=None, success=False, error="MALFORMED_INPUT", message=str(e))

        try:
            rf = self.resolver.reduced_form(document)
            grid = np.linspace(input_data.t0, input_data.t1, input_data.steps + 1).tolist()
            trajectory = solver.sample(
                rf, x0, grid, self.resolver.tol, self.pole_rtol, self.blowup_threshold
            )
            for pole in trajectory.poles:
                logger.warning(
                    f"극: t={pole.t!r} (성분 {pole.component}), 구간 ({pole.t_before!r}, {pole.t_after!r})"
                )
            return SampleTrajectoryOutput(trajectory=trajectory, success=True)
        except QuadSolveError as e:
            logger.info(f"샘플링 실패: {document.name} ({e.error_code})")
            return SampleTrajectoryOutput(trajectory=None, success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"샘플링 중 오류 발생: {e}")
            return SampleTrajectoryOutput(trajectory=None, success=False, error="INTERNAL_ERROR", message=str(e))

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from app.application.use_cases.system_resolver import SystemResolver
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import solver
from app.domain.services.integrator_service import IntegratorService
from app.domain.value_objects.integration_settings import IntegrationSettings
from app.domain.value_objects.trajectory import InitialState, PoleReport

logger = get_logger("application.use_cases.verify_system")


@dataclass
class VerifySystemInput:
    """닫힌 해 vs 수치 적분 검증 유스케이스 입력"""
    document: SystemDocument
    t1: float
    steps: int = 50
    threshold: float = 1e-6
    x0: Optional[InitialState] = None


@dataclass
class VerifySystemOutput:
    """검증 유스케이스 출력

    sup_error 는 비교한 격자점에서의 절대 오차 max |x_analytic - x_oracle| 입니다.
    """
    success: bool
    sup_error: Optional[float] = None
    threshold: Optional[float] = None
    compared_points: int = 0
    poles: List[PoleReport] = field(default_factory=list)
    error: Optional[str] = None
    message: Optional[str] = None


class VerifySystemUseCase:
    """[0, t1] 격자에서 닫힌 해와 수치 적분 결과 비교 (첫 극 이전 구간만)"""

    def __init__(
        self,
        resolver: SystemResolver,
        integrator: IntegratorService,
        settings: IntegrationSettings,
        pole_rtol: float,
    ):
        self.resolver = resolver
        self.integrator = integrator
        self.settings = settings
        self.pole_rtol = pole_rtol

    def execute(self, input_data: VerifySystemInput) -> VerifySystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        if input_data.steps < 1:
            return VerifySystemOutput(success=False, error="MALFORMED_INPUT", message="steps 는 1 이상이어야 합니다.")
        if not input_data.t1 > 0:
            return VerifySystemOutput(success=False, error="MALFORMED_INPUT", message="t1 은 0 보다 커야 합니다.")
        try:
            x0 = document.with_initial_state(input_data.x0)
        except ValueError as e:
            return VerifySystemOutput(success=False, error="MALFORMED_INPUT", message=str(e))

        try:
            rf = self.resolver.reduced_form(document)
            grid = np.linspace(0.0, input_data.t1, input_data.steps + 1).tolist()
            analytic = solver.sample(
                rf, x0, grid, self.resolver.tol, self.pole_rtol, self.settings.blowup_threshold
            )

            points = analytic.points
            if analytic.poles:
                # 첫 극을 감싸는 구간 이전 점만 비교
                first = analytic.poles[0]
                limit = first.t_before if first.t_before is not None else grid[0]
                points = [p for p in points if abs(p.t) <= abs(limit)]
                logger.info(f"극 발견: {document.name} t={first.t!r}, |t| <= {limit!r} 구간만 비교")

            numeric = self.integrator.integrate_grid(
                document.coefficients, x0, [p.t for p in points], self.settings
            )
            errors = [p.distance(q) for p, q in zip(points, numeric)]
            sup_error = max(errors, default=0.0)
            output = VerifySystemOutput(
                success=sup_error <= input_data.threshold,
                sup_error=sup_error,
                threshold=input_data.threshold,
                compared_points=len(errors),
                poles=analytic.poles,
            )
            if not output.success:
                logger.warning(f"검증 실패: {document.name} sup 오차={sup_error:.3e} > {input_data.threshold:.1e}")
                output.error = "VERIFICATION_FAILED"
            return output
        except QuadSolveError as e:
            logger.info(f"검증 중단: {document.name} ({e.error_code})")
            return VerifySystemOutput(success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"검증 중 오류 발생: {e}")
            return VerifySystemOutput(success=False, error="INTERNAL_ERROR", message=str(e))

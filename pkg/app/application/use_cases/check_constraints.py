from dataclasses import dataclass
from typing import Optional

from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.services import inverse_map
from app.domain.value_objects.reduced_form import ConstraintReport
from app.domain.value_objects.tolerance import Tolerance

logger = get_logger("application.use_cases.check_constraints")


@dataclass
class CheckConstraintsInput:
    """제약식 판정 유스케이스 입력"""
    document: SystemDocument


@dataclass
class CheckConstraintsOutput:
    """제약식 판정 유스케이스 출력

    error 는 판정 자체가 실패했을 때가 아니라, 판정 결과를 나타내는 코드입니다
    (CONSTRAINT_VIOLATED 또는 NON_GENERIC).
    """
    report: Optional[ConstraintReport]
    success: bool
    error: Optional[str] = None
    message: Optional[str] = None


class CheckConstraintsUseCase:
    """제약식 판정 유스케이스"""

    def __init__(self, tol: Tolerance):
        self.tol = tol

    def execute(self, input_data: CheckConstraintsInput) -> CheckConstraintsOutput:
        """유스케이스 실행"""
        try:
            report = inverse_map.check_constraints(input_data.document.coefficients, self.tol)
            if not report.satisfied:
                logger.info(f"제약식 위반: {input_data.document.name}")
                return CheckConstraintsOutput(report=report, success=False, error="CONSTRAINT_VIOLATED")
            if not report.generic:
                logger.info(f"비일반 계수: {input_data.document.name} ({', '.join(report.flags.reasons())})")
                return CheckConstraintsOutput(report=report, success=False, error="NON_GENERIC")
            return CheckConstraintsOutput(report=report, success=True)
        except Exception as e:
            logger.exception(f"제약식 판정 중 오류 발생: {e}")
            return CheckConstraintsOutput(report=None, success=False, error="INTERNAL_ERROR", message=str(e))

from dataclasses import dataclass
from typing import Optional

from app.application.use_cases.system_resolver import SystemResolver
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import solver
from app.domain.value_objects.classification import ClassificationReport

logger = get_logger("application.use_cases.classify_system")


@dataclass
class ClassifySystemInput:
    """거동 분류 유스케이스 입력"""
    document: SystemDocument
    max_denominator: int = 64


@dataclass
class ClassifySystemOutput:
    """거동 분류 유스케이스 출력"""
    report: Optional[ClassificationReport]
    success: bool
    error: Optional[str] = None
    message: Optional[str] = None


class ClassifySystemUseCase:
    """장시간 거동 분류"""

    def __init__(self, resolver: SystemResolver, rational_tol: float):
        self.resolver = resolver
        self.rational_tol = rational_tol

    def execute(self, input_data: ClassifySystemInput) -> ClassifySystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        if input_data.max_denominator < 1:
            return ClassifySystemOutput(
                report=None, success=False, error="MALFORMED_INPUT",
                message="max_denominator 는 1 이상이어야 합니다.",
            )
        try:
            rf = self.resolver.reduced_form(document)
            report = solver.classify(rf, self.resolver.tol, input_data.max_denominator, self.rational_tol)
            logger.info(f"분류: {document.name} -> {report.regime.value}")
            return ClassifySystemOutput(report=report, success=True)
        except QuadSolveError as e:
            logger.info(f"분류 실패: {document.name} ({e.error_code})")
            return ClassifySystemOutput(report=None, success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"분류 중 오류 발생: {e}")
            return ClassifySystemOutput(report=None, success=False, error="INTERNAL_ERROR", message=str(e))

from dataclasses import dataclass
from typing import Optional

from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services.forward_map import forward
from app.domain.value_objects.coefficients import Coefficients
from app.domain.value_objects.tolerance import Tolerance

logger = get_logger("application.use_cases.forward_system")


@dataclass
class ForwardSystemInput:
    """구조 파라미터 -> 계수 유스케이스 입력"""
    document: SystemDocument


@dataclass
class ForwardSystemOutput:
    """구조 파라미터 -> 계수 유스케이스 출력"""
    coefficients: Optional[Coefficients]
    success: bool
    error: Optional[str] = None
    message: Optional[str] = None


class ForwardSystemUseCase:
    """구조 파라미터로부터 12개 계수 생성"""

    def __init__(self, tol: Tolerance):
        self.tol = tol

    def execute(self, input_data: ForwardSystemInput) -> ForwardSystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        if not document.has_structural:
            return ForwardSystemOutput(
                coefficients=None, success=False, error="MALFORMED_INPUT",
                message="구조 파라미터(A, a)가 없는 문서입니다.",
            )
        try:
            return ForwardSystemOutput(coefficients=forward(document.structural, self.tol), success=True)
        except QuadSolveError as e:
            logger.info(f"forward 실패: {document.name} ({e.error_code})")
            return ForwardSystemOutput(coefficients=None, success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"forward 중 오류 발생: {e}")
            return ForwardSystemOutput(coefficients=None, success=False, error="INTERNAL_ERROR", message=str(e))

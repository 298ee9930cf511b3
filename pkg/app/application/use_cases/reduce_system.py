from dataclasses import dataclass, field
from typing import Dict, Optional

from app.application.use_cases.system_resolver import SystemResolver
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import inverse_map
from app.domain.value_objects.reduced_form import ReducedForm

logger = get_logger("application.use_cases.reduce_system")


@dataclass
class ReduceSystemInput:
    """환원 유스케이스 입력"""
    document: SystemDocument


@dataclass
class ReduceSystemOutput:
    """환원 유스케이스 출력"""
    reduced: Optional[ReducedForm]
    success: bool
    residuals: Dict[str, complex] = field(default_factory=dict)
    error: Optional[str] = None
    message: Optional[str] = None


class ReduceSystemUseCase:
    """계수를 환원 형태 (z, alpha, beta, w+-) 로 변환하고 z 잔차를 보고"""

    def __init__(self, resolver: SystemResolver):
        self.resolver = resolver

    def execute(self, input_data: ReduceSystemInput) -> ReduceSystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        try:
            rf = self.resolver.reduced_form(document)
            residuals = dict(zip(
                inverse_map.RESIDUAL_LABELS,
                inverse_map.residual_suite(document.coefficients, rf),
            ))
            return ReduceSystemOutput(reduced=rf, residuals=residuals, success=True)
        except QuadSolveError as e:
            logger.info(f"환원 실패: {document.name} ({e.error_code}: {e})")
            return ReduceSystemOutput(reduced=None, success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"환원 중 오류 발생: {e}")
            return ReduceSystemOutput(reduced=None, success=False, error="INTERNAL_ERROR", message=str(e))

from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.services import inverse_map
from app.domain.value_objects.reduced_form import ReducedForm
from app.domain.value_objects.tolerance import Tolerance

logger = get_logger("application.use_cases.system_resolver")


class SystemResolver:
    """문서 -> 환원 형태

    구조 파라미터가 있으면 reduced_from_structural 을 (계수가 비일반적이어도 사용 가능),
    계수만 있으면 reduce 를 사용합니다.
    """

    def __init__(self, tol: Tolerance, z_match_tol: float = inverse_map.DEFAULT_Z_MATCH_TOL):
        self.tol = tol
        self.z_match_tol = z_match_tol

    def reduced_form(self, document: SystemDocument) -> ReducedForm:
        if document.has_structural:
            logger.debug(f"구조 파라미터로 환원: {document.name}")
            return inverse_map.reduced_from_structural(document.structural, self.tol)
        return inverse_map.reduce(document.coefficients, self.tol, self.z_match_tol)

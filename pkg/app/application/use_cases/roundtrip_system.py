from dataclasses import dataclass
from typing import Optional, Tuple

from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import QuadSolveError
from app.domain.services import inverse_map
from app.domain.services.forward_map import forward
from app.domain.value_objects.tolerance import Tolerance

logger = get_logger("application.use_cases.roundtrip_system")

# 복원된 z 와 재구성 계수의 허용 상대오차
DEFAULT_AGREEMENT_TOL = 1e-8


@dataclass
class RoundtripSystemInput:
    """forward -> reduce -> forward 왕복 유스케이스 입력"""
    document: SystemDocument


@dataclass
class RoundtripSystemOutput:
    """왕복 유스케이스 출력

    z_expected 는 구조 파라미터가 있을 때의 (A11/A21, A12/A22) 입니다.
    """
    success: bool
    z_recovered: Optional[Tuple[complex, complex]] = None
    z_expected: Optional[Tuple[complex, complex]] = None
    z_error: Optional[float] = None
    coefficient_error: Optional[float] = None
    error: Optional[str] = None
    message: Optional[str] = None


class RoundtripSystemUseCase:
    """계수 환원 후 구조 파라미터를 재구성해 같은 계수가 나오는지 확인"""

    def __init__(self, tol: Tolerance, z_match_tol: float, agreement_tol: float = DEFAULT_AGREEMENT_TOL):
        self.tol = tol
        self.z_match_tol = z_match_tol
        self.agreement_tol = agreement_tol

    def execute(self, input_data: RoundtripSystemInput) -> RoundtripSystemOutput:
        """유스케이스 실행"""
        document = input_data.document
        c = document.coefficients
        try:
            rf = inverse_map.reduce(c, self.tol, self.z_match_tol)

            lambdas = (1.0, 1.0)
            z_expected = None
            z_error = 0.0
            if document.has_structural:
                (A11, A12), (A21, A22) = document.structural.A
                lambdas = (A21, A22)
                z_expected = (A11 / A21, A12 / A22)
                z_error = _set_error(rf.z, z_expected)

            rebuilt = forward(inverse_map.structural_from_reduced(rf, *lambdas), self.tol)
            scale = max(c.max_abs(), 1e-300)
            coefficient_error = max(
                abs(u - v) for row_u, row_v in zip(c.rows, rebuilt.rows) for u, v in zip(row_u, row_v)
            ) / scale

            output = RoundtripSystemOutput(
                success=True,
                z_recovered=rf.z,
                z_expected=z_expected,
                z_error=z_error,
                coefficient_error=coefficient_error,
            )
            if z_error > self.agreement_tol or coefficient_error > self.agreement_tol:
                logger.warning(
                    f"왕복 불일치: {document.name} (z 오차={z_error:.3e}, 계수 오차={coefficient_error:.3e})"
                )
                output.success = False
                output.error = "ROUNDTRIP_MISMATCH"
            return output
        except QuadSolveError as e:
            logger.info(f"왕복 실패: {document.name} ({e.error_code})")
            return RoundtripSystemOutput(success=False, error=e.error_code, message=str(e))
        except Exception as e:
            logger.exception(f"왕복 중 오류 발생: {e}")
            return RoundtripSystemOutput(success=False, error="INTERNAL_ERROR", message=str(e))


def _set_error(found: Tuple[complex, complex], expected: Tuple[complex, complex]) -> float:
    """순서를 무시한 두 쌍 사이의 최대 상대오차"""
    def rel(a, b):
        return abs(a - b) / max(abs(b), 1e-300)

    same = max(rel(found[0], expected[0]), rel(found[1], expected[1]))
    crossed = max(rel(found[0], expected[1]), rel(found[1], expected[0]))
    return min(same, crossed)

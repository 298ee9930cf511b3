from typing import Optional, Sequence


class QuadSolveError(Exception):
    """도메인 오류 기본 클래스

    error_code 는 유스케이스 출력과 CLI 종료 코드 매핑에 사용됩니다.
    """
    error_code = "QUADSOLVE_ERROR"


class InvalidInput(QuadSolveError):
    """입력 문서 또는 옵션 형식 오류"""
    error_code = "MALFORMED_INPUT"


class DeterminantZero(QuadSolveError):
    """혼합 행렬 A 의 행렬식이 0"""
    error_code = "DETERMINANT_ZERO"


class ConstraintViolated(QuadSolveError):
    """가해(solvable) 부분류의 4개 제약식 위반"""
    error_code = "CONSTRAINT_VIOLATED"

    def __init__(self, residuals: Sequence[complex], message: Optional[str] = None):
        self.residuals = tuple(residuals)
        super().__init__(message or f"제약식 위반: 정규화 잔차={[abs(r) for r in self.residuals]}")


class NonGeneric(QuadSolveError):
    """일반 위치(genericity) 조건 위반"""
    error_code = "NON_GENERIC"

    def __init__(self, reasons: Sequence[str]):
        self.reasons = tuple(reasons)
        super().__init__(f"비일반 계수: {', '.join(self.reasons)}")


class DegenerateZ(QuadSolveError):
    """z1, z2 가 중근이거나 판별식이 0"""
    error_code = "DEGENERATE_Z"


class ZMismatch(QuadSolveError):
    """두 방식으로 구한 z 값이 일치하지 않음"""
    error_code = "Z_MISMATCH"


class InvalidLambda(QuadSolveError):
    """스케일 파라미터 lambda 가 0"""
    error_code = "INVALID_LAMBDA"


class PoleAtTime(QuadSolveError):
    """닫힌 해가 주어진 시각에서 극(pole)을 가짐"""
    error_code = "POLE_AT_TIME"

    def __init__(self, t: complex, component: Optional[int] = None):
        self.t = t
        self.component = component
        where = f" (성분 {component})" if component is not None else ""
        super().__init__(f"t={t} 에서 극 발생{where}")


class BlowupDetected(QuadSolveError):
    """수치 적분 중 해의 크기가 임계값을 초과"""
    error_code = "BLOWUP_DETECTED"

    def __init__(self, t: float):
        self.t = t
        super().__init__(f"t={t} 에서 발산 감지")


class StepLimitExceeded(QuadSolveError):
    """수치 적분 스텝 수 한도 초과"""
    error_code = "STEP_LIMIT_EXCEEDED"

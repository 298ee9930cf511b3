from dataclasses import dataclass, replace
from typing import Optional, Tuple

from app.domain.value_objects.riccati import RiccatiBranch, RiccatiParams, RiccatiSolution

Pair = Tuple[complex, complex]
OptionalPair = Tuple[Optional[complex], Optional[complex]]


@dataclass(frozen=True)
class GenericityFlags:
    """닫힌 해 환원에 필요한 비퇴화 조건들"""
    c21_nonzero: bool
    c12_nonzero: bool
    c24_nonzero: bool
    ineq1: bool  # (2c11 - c22)^2 + 8 c12 c21 != 0
    ineq2: bool  # (c25 - c14)^2 + 4 c15 c24 != 0
    scalar_linear: bool  # c15 == 0 이고 c14 == c25

    @property
    def generic(self) -> bool:
        if not (self.c21_nonzero and self.c12_nonzero and self.ineq1):
            return False
        if self.c24_nonzero:
            return self.ineq2
        return self.scalar_linear

    def reasons(self) -> Tuple[str, ...]:
        """위반된 조건 목록"""
        out = []
        if not self.c21_nonzero:
            out.append("c21 == 0")
        if not self.c12_nonzero:
            out.append("c12 == 0")
        if not self.c24_nonzero and not self.scalar_linear:
            out.append("c24 == 0 (선형 블록이 스칼라가 아님)")
        if not self.ineq1:
            out.append("(2c11 - c22)^2 + 8c12c21 == 0")
        if self.c24_nonzero and not self.ineq2:
            out.append("(c25 - c14)^2 + 4c15c24 == 0")
        return tuple(out)


@dataclass(frozen=True)
class ConstraintReport:
    """4개 제약식 판정 결과

    residuals 는 각 제약식을 최대 단항식 크기로 나눈 정규화 잔차,
    raw_residuals 는 나누기 전 값입니다.
    """
    residuals: Tuple[complex, complex, complex, complex]
    raw_residuals: Tuple[complex, complex, complex, complex]
    satisfied: bool
    flags: GenericityFlags

    @property
    def generic(self) -> bool:
        return self.flags.generic


@dataclass(frozen=True)
class ReducedForm:
    """두 개의 분리된 리카티 방정식으로 환원된 형태

    x1 = z1 w1 + z2 w2, x2 = w1 + w2,
    w_n' = alpha_n2 w_n^2 + alpha_n1 w_n + alpha_n0
    alpha 의 각 행은 (alpha_n2, alpha_n1, alpha_n0) 순서입니다.
    """
    z1: complex
    z2: complex
    alpha: Tuple[Tuple[complex, complex, complex], Tuple[complex, complex, complex]]
    beta: Pair
    w_plus: OptionalPair
    w_minus: OptionalPair
    branches: Tuple[RiccatiBranch, RiccatiBranch]

    def __post_init__(self):
        """데이터 유효성 검증"""
        if self.z1 == self.z2:
            raise ValueError("z1 과 z2 는 서로 달라야 합니다.")

    @property
    def z(self) -> Pair:
        return self.z1, self.z2

    def riccati_params(self, n: int) -> RiccatiParams:
        """n 번째(1 기반) 리카티 계수"""
        a2, a1, a0 = self.alpha[n - 1]
        return RiccatiParams(a2, a1, a0)

    def riccati_solution(self, n: int) -> RiccatiSolution:
        i = n - 1
        return RiccatiSolution(self.w_plus[i], self.w_minus[i], self.beta[i], self.branches[i])

    def swapped(self) -> "ReducedForm":
        """행 교환 (w1 <-> w2, z1 <-> z2) - 같은 계를 나타냄"""
        return replace(
            self,
            z1=self.z2,
            z2=self.z1,
            alpha=(self.alpha[1], self.alpha[0]),
            beta=(self.beta[1], self.beta[0]),
            w_plus=(self.w_plus[1], self.w_plus[0]),
            w_minus=(self.w_minus[1], self.w_minus[0]),
            branches=(self.branches[1], self.branches[0]),
        )

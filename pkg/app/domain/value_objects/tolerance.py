from dataclasses import dataclass


@dataclass(frozen=True)  # 불변(immutable) 값 객체
class Tolerance:
    """비교 허용오차 값 객체

    |a - b| <= abs_tol + rel_tol * scale 형태의 혼합 허용오차입니다.
    """
    abs_tol: float = 1e-12
    rel_tol: float = 1e-9

    def __post_init__(self):
        """데이터 유효성 검증"""
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("허용오차는 음수일 수 없습니다.")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("abs_tol 과 rel_tol 중 하나 이상은 양수여야 합니다.")

    def bound(self, scale: float) -> float:
        """주어진 크기에 대한 허용 한계"""
        return self.abs_tol + self.rel_tol * scale


DEFAULT_TOLERANCE = Tolerance()

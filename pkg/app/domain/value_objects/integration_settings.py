from dataclasses import dataclass


@dataclass(frozen=True)
class IntegrationSettings:
    """수치 적분기 설정 값 객체

    max_step 이 0 이면 최대 스텝 크기를 제한하지 않습니다.
    beta 는 스텝 크기 제어의 안정화(PI 제어) 계수입니다.
    """
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = 0.0
    max_steps: int = 100000
    blowup_threshold: float = 1e8
    beta: float = 0.04

    def __post_init__(self):
        """데이터 유효성 검증"""
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("적분 허용오차는 양수여야 합니다.")
        if self.max_step < 0:
            raise ValueError("max_step 은 0 이상이어야 합니다.")
        if self.max_steps < 1:
            raise ValueError("max_steps 는 1 이상이어야 합니다.")
        if self.blowup_threshold <= 0:
            raise ValueError("blowup_threshold 는 양수여야 합니다.")
        if not 0 <= self.beta < 0.2:
            raise ValueError("beta 는 [0, 0.2) 범위여야 합니다.")

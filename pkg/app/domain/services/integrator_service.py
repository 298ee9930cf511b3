from abc import ABC, abstractmethod
from typing import List, Sequence

from app.domain.value_objects.coefficients import Coefficients
from app.domain.value_objects.integration_settings import IntegrationSettings
from app.domain.value_objects.trajectory import InitialState, TrajectoryPoint


class IntegratorService(ABC):
    """
    수치 적분기(oracle) 인터페이스

    닫힌 해를 독립적으로 검증하기 위한 적응형 수치 적분기 추상화입니다.
    특정 구현(scipy 등)에 의존하지 않도록 도메인 계층에 정의합니다.
    """

    @abstractmethod
    def integrate(
        self,
        c: Coefficients,
        x0: InitialState,
        t_end: float,
        settings: IntegrationSettings,
    ) -> TrajectoryPoint:
        """
        x(0) = x0 에서 t_end 까지 적분합니다.

        Args:
            c: 계수
            x0: 초기 상태
            t_end: 종료 시각 (0 이면 x0 반환)
            settings: 적분 설정

        Returns:
            TrajectoryPoint: t_end 에서의 상태

        Raises:
            StepLimitExceeded: 스텝 수 한도 초과
            BlowupDetected: 상태 크기가 임계값 초과 또는 스텝 크기 붕괴
        """
        pass

    @abstractmethod
    def integrate_grid(
        self,
        c: Coefficients,
        x0: InitialState,
        t_grid: Sequence[float],
        settings: IntegrationSettings,
    ) -> List[TrajectoryPoint]:
        """
        한 번의 연속 적분으로 격자 시각마다 상태를 기록합니다.

        Raises:
            StepLimitExceeded, BlowupDetected: integrate 와 동일
        """
        pass

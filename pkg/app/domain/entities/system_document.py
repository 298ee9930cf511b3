from dataclasses import dataclass, field
from typing import Dict, Optional

from app.domain.value_objects.coefficients import Coefficients, StructuralParams
from app.domain.value_objects.trajectory import InitialState


@dataclass
class SystemDocument:
    """이차 평면계 입력 문서 도메인 엔티티"""
    coefficients: Coefficients  # 12개 계수 (구조 파라미터만 주어지면 forward 결과)
    structural: Optional[StructuralParams] = None  # 구조 파라미터 (A, a)
    initial_state: Optional[InitialState] = None
    metadata: Dict[str, str] = field(default_factory=dict)
    source: Optional[str] = None  # 읽어온 파일 경로

    @property
    def has_structural(self) -> bool:
        return self.structural is not None

    @property
    def name(self) -> str:
        """표시용 이름 (metadata.name, 없으면 파일 경로)"""
        return self.metadata.get("name") or self.source or "<system>"

    def with_initial_state(self, x0: Optional[InitialState]) -> InitialState:
        """명시된 초기 상태, 없으면 문서의 초기 상태

        Raises:
            ValueError: 둘 다 없을 때
        """
        if x0 is not None:
            return x0
        if self.initial_state is None:
            raise ValueError("초기 상태(x0)가 지정되지 않았습니다.")
        return self.initial_state

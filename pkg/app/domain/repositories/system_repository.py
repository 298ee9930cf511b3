from abc import ABC, abstractmethod

from app.domain.entities.system_document import SystemDocument


class SystemRepository(ABC):
    """계 문서 저장소 인터페이스

    입력 문서를 읽어 도메인 엔티티로 변환하는 추상 인터페이스입니다.
    구체적인 구현은 인프라스트럭처 계층에서 제공됩니다.
    """

    @abstractmethod
    def load(self, path: str) -> SystemDocument:
        """경로의 문서 읽기

        Raises:
            InvalidInput: 파일이 없거나 형식이 잘못되었을 때
        """
        pass

    @abstractmethod
    def save(self, document: SystemDocument, path: str) -> None:
        """문서 저장"""
        pass

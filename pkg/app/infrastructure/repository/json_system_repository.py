import json
from pathlib import Path

from pydantic import ValidationError

from app.api.schemas.system import SystemDocumentSchema
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import DeterminantZero, InvalidInput
from app.domain.repositories.system_repository import SystemRepository
from app.domain.services.forward_map import forward
from app.domain.value_objects.tolerance import Tolerance, DEFAULT_TOLERANCE

logger = get_logger("infrastructure.repository.json_system")


class JsonSystemRepository(SystemRepository):
    """JSON 파일 기반 계 문서 저장소

    c 와 구조 파라미터가 모두 주어지면 forward(A, a) == c 를 확인하고,
    구조 파라미터만 주어지면 c 를 forward 로 채웁니다.
    """

    def __init__(self, tol: Tolerance = DEFAULT_TOLERANCE):
        self.tol = tol

    def load(self, path: str) -> SystemDocument:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            logger.error(f"파일 읽기 실패: {path} ({e})")
            raise InvalidInput(f"파일을 읽을 수 없습니다: {path}") from e
        return self.parse(text, source=path)

    def parse(self, text: str, source: str = None) -> SystemDocument:
        """JSON 문자열 -> 도메인 엔티티"""
        try:
            schema = SystemDocumentSchema.model_validate_json(text)
        except ValidationError as e:
            logger.error(f"문서 형식 오류: {source} ({e.error_count()}개)")
            raise InvalidInput(f"문서 형식 오류 ({source}): {e}") from e

        c = schema.coefficients()
        structural = schema.structural()
        if structural is not None:
            try:
                derived = forward(structural, self.tol)
            except DeterminantZero as e:
                raise InvalidInput(f"구조 파라미터의 det A 가 0 입니다 ({source})") from e
            if c is None:
                c = derived
            elif not all(
                abs(u - v) <= self.tol.bound(derived.max_abs())
                for row_u, row_v in zip(c.rows, derived.rows)
                for u, v in zip(row_u, row_v)
            ):
                raise InvalidInput(f"c 와 forward(A, a) 가 일치하지 않습니다 ({source})")

        logger.debug(f"문서 로드: {source} (구조 파라미터={'있음' if structural else '없음'})")
        return SystemDocument(
            coefficients=c,
            structural=structural,
            initial_state=schema.initial_state(),
            metadata=schema.metadata,
            source=source,
        )

    def save(self, document: SystemDocument, path: str) -> None:
        schema = SystemDocumentSchema.from_domain(
            None if document.has_structural else document.coefficients,
            document.structural,
            document.initial_state,
            document.metadata,
        )
        payload = schema.model_dump(exclude_none=True)
        Path(path).write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.debug(f"문서 저장: {path}")

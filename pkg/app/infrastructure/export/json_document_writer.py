import json
import math
from typing import Any

FLOAT_FORMAT = ".17g"
INDENT = "  "


def dumps(payload: Any) -> str:
    """JSON 직렬화 (json.dumps(indent=2) 와 같은 배치, 실수는 17 유효숫자)

    Raises:
        ValueError: NaN/Inf 가 포함될 때
        TypeError: JSON 으로 표현할 수 없는 값
    """
    return _encode(payload, 0)


def _encode(value: Any, level: int) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"JSON 에 유한하지 않은 실수를 쓸 수 없습니다: {value}")
        return format(value, FLOAT_FORMAT)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)

    inner = INDENT * (level + 1)
    outer = INDENT * level
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = (
            f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, level + 1)}"
            for k, v in value.items()
        )
        return "{\n" + ",\n".join(items) + "\n" + outer + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = (f"{inner}{_encode(v, level + 1)}" for v in value)
        return "[\n" + ",\n".join(items) + "\n" + outer + "]"
    raise TypeError(f"JSON 으로 직렬화할 수 없는 값: {type(value).__name__}")

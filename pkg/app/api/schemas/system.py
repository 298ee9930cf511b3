# Pydantic schemas for the system document format
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, FiniteFloat, field_validator, model_validator

from app.domain.value_objects.coefficients import Coefficients, StructuralParams
from app.domain.value_objects.trajectory import InitialState

# 복소수는 [실수부, 허수부] 쌍으로 표현
ComplexPair = Tuple[FiniteFloat, FiniteFloat]


def to_pair(z: complex) -> List[float]:
    z = complex(z)
    return [z.real, z.imag]


def _rows(values: List[List[ComplexPair]]) -> tuple:
    return tuple(tuple(complex(re, im) for re, im in row) for row in values)


def _check_shape(values, rows: int, cols: int, name: str):
    if values is None:
        return values
    if len(values) != rows or any(len(r) != cols for r in values):
        raise ValueError(f"{name} 는 {rows}x{cols} 복소수 배열이어야 합니다.")
    return values


class SystemDocumentSchema(BaseModel):
    """계 입력 문서

    c (2x6), 또는 구조 파라미터 A (2x2) 와 a (2x3, 행 = (a_n2, a_n1, a_n0)) 중
    하나 이상이 필요합니다.
    """
    c: Optional[List[List[ComplexPair]]] = None
    A: Optional[List[List[ComplexPair]]] = None
    a: Optional[List[List[ComplexPair]]] = None
    x0: Optional[List[ComplexPair]] = None
    metadata: Dict[str, str] = Field(default_factory=dict)

    model_config = {"extra": "forbid"}

    @field_validator("c")
    @classmethod
    def _c_shape(cls, v):
        return _check_shape(v, 2, 6, "c")

    @field_validator("A")
    @classmethod
    def _a_matrix_shape(cls, v):
        return _check_shape(v, 2, 2, "A")

    @field_validator("a")
    @classmethod
    def _a_rows_shape(cls, v):
        return _check_shape(v, 2, 3, "a")

    @field_validator("x0")
    @classmethod
    def _x0_shape(cls, v):
        if v is not None and len(v) != 2:
            raise ValueError("x0 는 복소수 2개여야 합니다.")
        return v

    @model_validator(mode="after")
    def _require_system(self):
        if (self.A is None) != (self.a is None):
            raise ValueError("A 와 a 는 함께 지정해야 합니다.")
        if self.c is None and self.A is None:
            raise ValueError("c 또는 (A, a) 중 하나 이상이 필요합니다.")
        return self

    def coefficients(self) -> Optional[Coefficients]:
        return Coefficients(_rows(self.c)) if self.c is not None else None

    def structural(self) -> Optional[StructuralParams]:
        if self.A is None:
            return None
        return StructuralParams(A=_rows(self.A), a=_rows(self.a))

    def initial_state(self) -> Optional[InitialState]:
        if self.x0 is None:
            return None
        (r1, i1), (r2, i2) = self.x0
        return InitialState(complex(r1, i1), complex(r2, i2))

    @classmethod
    def from_domain(cls, c: Optional[Coefficients], structural: Optional[StructuralParams],
                    x0: Optional[InitialState], metadata: Dict[str, str]) -> "SystemDocumentSchema":
        return cls(
            c=[[to_pair(v) for v in row] for row in c.rows] if c is not None else None,
            A=[[to_pair(v) for v in row] for row in structural.A] if structural else None,
            a=[[to_pair(v) for v in row] for row in structural.a] if structural else None,
            x0=[to_pair(x0.x1), to_pair(x0.x2)] if x0 is not None else None,
            metadata=dict(metadata),
        )

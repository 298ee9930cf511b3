from dataclasses import dataclass
from typing import Sequence, Tuple

from app.domain.services.algebra import ensure_finite

Row6 = Tuple[complex, complex, complex, complex, complex, complex]


def _complex_rows(rows: Sequence[Sequence[complex]], shape: Tuple[int, int], name: str) -> tuple:
    if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
        raise ValueError(f"{name} 의 모양은 {shape[0]}x{shape[1]} 이어야 합니다.")
    return tuple(
        tuple(ensure_finite(v, f"{name}[{i + 1}][{j + 1}]") for j, v in enumerate(r))
        for i, r in enumerate(rows)
    )


@dataclass(frozen=True)
class Coefficients:
    """이차 평면계의 12개 복소 계수

    x_n' = c_n1 x1^2 + c_n2 x1 x2 + c_n3 x2^2 + c_n4 x1 + c_n5 x2 + c_n6
    """
    rows: Tuple[Row6, Row6]

    def __post_init__(self):
        """데이터 유효성 검증"""
        object.__setattr__(self, "rows", _complex_rows(self.rows, (2, 6), "c"))

    @classmethod
    def zeros(cls) -> "Coefficients":
        return cls(((0j,) * 6, (0j,) * 6))

    @classmethod
    def from_mapping(cls, values: dict) -> "Coefficients":
        """{(n, j): 값} 형태(1 기반 인덱스)로 생성, 없는 항목은 0"""
        rows = [[0j] * 6 for _ in range(2)]
        for (n, j), v in values.items():
            rows[n - 1][j - 1] = v
        return cls(tuple(tuple(r) for r in rows))

    def get(self, n: int, j: int) -> complex:
        """c_nj (1 기반 인덱스)"""
        return self.rows[n - 1][j - 1]

    def max_abs(self) -> float:
        return max(abs(v) for row in self.rows for v in row)

    def is_homogeneous(self) -> bool:
        """선형항과 상수항이 모두 정확히 0 인지"""
        return all(row[j] == 0 for row in self.rows for j in (3, 4, 5))

    def rhs(self, x1: complex, x2: complex) -> Tuple[complex, complex]:
        """벡터장 값"""
        out = []
        for c in self.rows:
            out.append(
                c[0] * x1 * x1 + c[1] * x1 * x2 + c[2] * x2 * x2
                + c[3] * x1 + c[4] * x2 + c[5]
            )
        return out[0], out[1]


@dataclass(frozen=True)
class StructuralParams:
    """구조 파라미터: 혼합 행렬 A (2x2) 와 리카티 계수 a (행 n = (a_n2, a_n1, a_n0))

    x = A y, y_n' = a_n2 y_n^2 + a_n1 y_n + a_n0
    """
    A: Tuple[Tuple[complex, complex], Tuple[complex, complex]]
    a: Tuple[Tuple[complex, complex, complex], Tuple[complex, complex, complex]]

    def __post_init__(self):
        """데이터 유효성 검증"""
        object.__setattr__(self, "A", _complex_rows(self.A, (2, 2), "A"))
        object.__setattr__(self, "a", _complex_rows(self.a, (2, 3), "a"))

    @property
    def determinant(self) -> complex:
        (a11, a12), (a21, a22) = self.A
        return a11 * a22 - a12 * a21

    def mix(self, y1: complex, y2: complex) -> Tuple[complex, complex]:
        """x = A y"""
        (a11, a12), (a21, a22) = self.A
        return a11 * y1 + a12 * y2, a21 * y1 + a22 * y2

    def unmix(self, x1: complex, x2: complex) -> Tuple[complex, complex]:
        """y = A^{-1} x"""
        (a11, a12), (a21, a22) = self.A
        d = self.determinant
        return (a22 * x1 - a12 * x2) / d, (a11 * x2 - a21 * x1) / d

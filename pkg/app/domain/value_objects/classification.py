from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple


class Regime(str, Enum):
    """장시간 거동 분류"""
    ISOCHRONOUS = "isochronous"
    ASYMPTOTICALLY_ISOCHRONOUS = "asymptotically_isochronous"
    CONVERGES_TO_EQUILIBRIUM = "converges_to_equilibrium"
    GENERIC = "generic"


class RowMode(str, Enum):
    """리카티 행 하나의 거동"""
    OSCILLATING = "oscillating"
    CONVERGING = "converging"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class ClassificationReport:
    """분류 결과

    period 는 ISOCHRONOUS / ASYMPTOTICALLY_ISOCHRONOUS 일 때,
    rho, omega 는 ISOCHRONOUS 일 때 (Im beta_n = rho_n * omega),
    limit_state 는 CONVERGES_TO_EQUILIBRIUM 일 때만 채워집니다.
    """
    regime: Regime
    beta: Tuple[complex, complex]
    modes: Tuple[RowMode, RowMode]
    period: Optional[float] = None
    rho: Optional[Tuple[Fraction, Fraction]] = None
    omega: Optional[float] = None
    limit_state: Optional[Tuple[complex, complex]] = None

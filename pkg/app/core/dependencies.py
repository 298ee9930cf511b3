# Dependency providers for the command-line surface
from functools import lru_cache
from typing import Optional

from app.core.config import AppConfig
from app.core.logger import get_logger

from app.domain.repositories.system_repository import SystemRepository
from app.domain.services.integrator_service import IntegratorService
from app.domain.value_objects.tolerance import Tolerance

from app.infrastructure.integration.dopri5_integrator import Dopri5Integrator
from app.infrastructure.repository.json_system_repository import JsonSystemRepository

from app.application.use_cases.system_resolver import SystemResolver
from app.application.use_cases.check_constraints import CheckConstraintsUseCase
from app.application.use_cases.reduce_system import ReduceSystemUseCase
from app.application.use_cases.solve_system import SolveSystemUseCase
from app.application.use_cases.sample_trajectory import SampleTrajectoryUseCase
from app.application.use_cases.classify_system import ClassifySystemUseCase
from app.application.use_cases.forward_system import ForwardSystemUseCase
from app.application.use_cases.roundtrip_system import RoundtripSystemUseCase
from app.application.use_cases.verify_system import VerifySystemUseCase
from app.application.use_cases.case51_system import Case51SystemUseCase

logger = get_logger("core.dependencies")

# --- Core Dependencies ---

@lru_cache()
def get_app_config() -> AppConfig:
    """
    애플리케이션 설정을 가져옵니다.
    환경 변수와 프로필 설정에 따라 적절한 설정이 로드됩니다.
    """
    try:
        return AppConfig()
    except Exception as e:
        logger.exception("설정 로드 실패!")
        raise RuntimeError("애플리케이션 설정을 로드할 수 없습니다") from e


def get_tolerance(config: AppConfig, rel_tol: Optional[float] = None, abs_tol: Optional[float] = None) -> Tolerance:
    """설정값에 명령행 옵션(--tol, --abs-tol)을 덮어쓴 허용오차"""
    base = config.tolerance()
    return Tolerance(
        abs_tol=base.abs_tol if abs_tol is None else abs_tol,
        rel_tol=base.rel_tol if rel_tol is None else rel_tol,
    )

# --- Infrastructure Dependencies ---

def get_system_repository(tol: Tolerance) -> SystemRepository:
    """JSON 문서 저장소 제공"""
    return JsonSystemRepository(tol=tol)


@lru_cache()
def get_integrator() -> IntegratorService:
    """수치 적분기 제공"""
    try:
        logger.debug("dopri5 적분기 초기화")
        return Dopri5Integrator()
    except Exception as e:
        logger.exception("적분기 초기화 실패!")
        raise RuntimeError("수치 적분기를 초기화할 수 없습니다") from e

# --- Use Case Dependencies ---

def get_resolver(config: AppConfig, tol: Tolerance) -> SystemResolver:
    return SystemResolver(tol=tol, z_match_tol=config.Z_MATCH_TOL)


def get_check_constraints_use_case(config: AppConfig, tol: Tolerance) -> CheckConstraintsUseCase:
    """제약식 판정 유스케이스 제공"""
    return CheckConstraintsUseCase(tol=tol)


def get_reduce_system_use_case(config: AppConfig, tol: Tolerance) -> ReduceSystemUseCase:
    """환원 유스케이스 제공"""
    return ReduceSystemUseCase(resolver=get_resolver(config, tol))


def get_solve_system_use_case(config: AppConfig, tol: Tolerance) -> SolveSystemUseCase:
    """궤적 평가 유스케이스 제공"""
    return SolveSystemUseCase(resolver=get_resolver(config, tol), pole_rtol=config.POLE_RTOL)


def get_sample_trajectory_use_case(config: AppConfig, tol: Tolerance) -> SampleTrajectoryUseCase:
    """궤적 샘플링 유스케이스 제공"""
    return SampleTrajectoryUseCase(
        resolver=get_resolver(config, tol),
        pole_rtol=config.POLE_RTOL,
        blowup_threshold=config.BLOWUP_THRESHOLD,
    )


def get_classify_system_use_case(config: AppConfig, tol: Tolerance) -> ClassifySystemUseCase:
    """거동 분류 유스케이스 제공"""
    return ClassifySystemUseCase(resolver=get_resolver(config, tol), rational_tol=config.RATIONAL_TOL)


def get_forward_system_use_case(config: AppConfig, tol: Tolerance) -> ForwardSystemUseCase:
    """forward 유스케이스 제공"""
    return ForwardSystemUseCase(tol=tol)


def get_roundtrip_system_use_case(config: AppConfig, tol: Tolerance) -> RoundtripSystemUseCase:
    """왕복 유스케이스 제공"""
    return RoundtripSystemUseCase(tol=tol, z_match_tol=config.Z_MATCH_TOL)


def get_verify_system_use_case(config: AppConfig, tol: Tolerance) -> VerifySystemUseCase:
    """검증 유스케이스 제공"""
    return VerifySystemUseCase(
        resolver=get_resolver(config, tol),
        integrator=get_integrator(),
        settings=config.integration_settings(),
        pole_rtol=config.POLE_RTOL,
    )


def get_case51_system_use_case(config: AppConfig, tol: Tolerance) -> Case51SystemUseCase:
    """응용 부분류 유스케이스 제공"""
    return Case51SystemUseCase(tol=tol)

import os
from typing import Dict, Any
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

from app.domain.value_objects.tolerance import Tolerance
from app.domain.value_objects.integration_settings import IntegrationSettings

# .env 파일 로드 (프로젝트 루트에 .env 파일이 있는 경우)
load_dotenv()

# 환경 변수
ENVIRONMENT = os.getenv("ENVIRONMENT", "local")  # local, dev, test, prod
ENV_PROFILE = os.getenv("ENV_PROFILE", "standard")  # light, standard, strict


class AppConfig(BaseSettings):
    """애플리케이션 전체 설정

    환경(local, dev, test, prod)과 프로필(light, standard, strict)에 따라
    수치 허용오차와 수치 적분기(oracle) 설정을 제공합니다.
    """

    # 기본 앱 설정
    APP_NAME: str = "quadsolve"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = ENVIRONMENT != "prod"

    # 환경 및 프로필 설정
    ENVIRONMENT: str = ENVIRONMENT
    ENV_PROFILE: str = ENV_PROFILE

    # 로깅
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # 대수 판정 허용오차 (제약식 잔차는 최대 단항식으로 정규화되므로 단항식 하나만 남으면 크기와 무관하게 위반)
    ABS_TOL: float = float(os.getenv("ABS_TOL", "1e-12"))
    REL_TOL: float = float(os.getenv("REL_TOL", "1e-9"))
    Z_MATCH_TOL: float = float(os.getenv("Z_MATCH_TOL", "1e-6"))
    POLE_RTOL: float = float(os.getenv("POLE_RTOL", "1e-10"))

    # 등시성(isochrony) 판정
    MAX_DENOMINATOR: int = int(os.getenv("MAX_DENOMINATOR", "64"))
    RATIONAL_TOL: float = float(os.getenv("RATIONAL_TOL", "1e-9"))

    # 수치 적분기 설정 - 프로필에 따라 자동 설정
    ORACLE_REL_TOL: float = float(os.getenv("ORACLE_REL_TOL", "1e-10"))
    ORACLE_ABS_TOL: float = float(os.getenv("ORACLE_ABS_TOL", "1e-12"))
    ORACLE_MAX_STEP: float = float(os.getenv("ORACLE_MAX_STEP", "0"))  # 0 = 제한 없음
    ORACLE_MAX_STEPS: int = int(os.getenv("ORACLE_MAX_STEPS", "100000"))
    ORACLE_BETA: float = float(os.getenv("ORACLE_BETA", "0.04"))
    BLOWUP_THRESHOLD: float = float(os.getenv("BLOWUP_THRESHOLD", "1e8"))

    # 검증(verify) 설정
    VERIFY_THRESHOLD: float = float(os.getenv("VERIFY_THRESHOLD", "1e-6"))
    VERIFY_STEPS: int = int(os.getenv("VERIFY_STEPS", "50"))

    # 배치 처리 동시성
    MAX_WORKERS: int = int(os.getenv("MAX_WORKERS", "4"))

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._apply_profile_settings()

    def _apply_profile_settings(self):
        """환경 프로필에 따른 설정 적용"""
        profile_settings = {
            "light": {
                # 빠른 확인용 (느슨한 적분 허용오차)
                "ORACLE_REL_TOL": 1e-8,
                "ORACLE_ABS_TOL": 1e-10,
                "ORACLE_MAX_STEPS": 20000,
            },
            "standard": {
                "ORACLE_REL_TOL": 1e-10,
                "ORACLE_ABS_TOL": 1e-12,
                "ORACLE_MAX_STEPS": 100000,
            },
            "strict": {
                # 장시간 적분 검증용
                "ORACLE_REL_TOL": 1e-12,
                "ORACLE_ABS_TOL": 1e-14,
                "ORACLE_MAX_STEPS": 500000,
            },
        }

        # 프로필 설정 적용 (환경 변수로 설정되지 않은 항목만)
        profile = self.ENV_PROFILE.lower()
        if profile in profile_settings:
            for key, value in profile_settings[profile].items():
                if not os.getenv(key):
                    setattr(self, key, value)

        if self.ENVIRONMENT == "prod":
            self.DEBUG = False

    def tolerance(self) -> Tolerance:
        """대수 판정용 허용오차 값 객체 생성"""
        return Tolerance(abs_tol=self.ABS_TOL, rel_tol=self.REL_TOL)

    def integration_settings(self) -> IntegrationSettings:
        """수치 적분기 설정 값 객체 생성"""
        return IntegrationSettings(
            rel_tol=self.ORACLE_REL_TOL,
            abs_tol=self.ORACLE_ABS_TOL,
            max_step=self.ORACLE_MAX_STEP,
            max_steps=self.ORACLE_MAX_STEPS,
            blowup_threshold=self.BLOWUP_THRESHOLD,
            beta=self.ORACLE_BETA,
        )

    def to_dict(self) -> Dict[str, Any]:
        """설정을 사전 형태로 변환"""
        return {key: getattr(self, key) for key in type(self).model_fields.keys()}

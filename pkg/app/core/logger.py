import os
import sys
import logging
from logging.handlers import RotatingFileHandler

# 로그 디렉토리 설정 (지정된 경우에만 파일 로그 기록)
LOG_DIR = os.environ.get("LOG_DIR")
LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO").upper()

# 로거 포맷 설정
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def get_logger(name: str, level=None) -> logging.Logger:
    """
    로거 인스턴스 생성

    표준 출력은 계산 결과 전용이므로 콘솔 핸들러는 stderr 로 기록합니다.

    Args:
        name: 로거 이름
        level: 로깅 레벨 (미지정 시 LOG_LEVEL 환경 변수)

    Returns:
        logging.Logger: 로거 인스턴스
    """
    if level is None:
        level = getattr(logging, LOG_LEVEL, logging.INFO)

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # 로거가 이미 핸들러를 가지고 있으면 기존 핸들러 유지
    if logger.handlers:
        return logger

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    logger.addHandler(console_handler)

    if LOG_DIR:
        os.makedirs(LOG_DIR, exist_ok=True)
        file_handler = RotatingFileHandler(
            os.path.join(LOG_DIR, f"{name}.log"),
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
        logger.addHandler(file_handler)

    # 루트 로거로 전파하지 않음 (중복 출력 방지)
    logger.propagate = False
    return logger


def set_level(level: int) -> None:
    """이미 생성된 모든 애플리케이션 로거의 레벨 변경 (--verbose 용)"""
    for name in list(logging.root.manager.loggerDict.keys()):
        logger = logging.getLogger(name)
        if logger.handlers and not logger.propagate:
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)

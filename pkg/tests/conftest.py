import math
import os

import numpy as np
import pytest

from app.domain.exceptions import QuadSolveError
from app.domain.services import inverse_map, solver
from app.domain.services.forward_map import forward
from app.domain.value_objects.coefficients import StructuralParams
from app.domain.value_objects.trajectory import InitialState

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")
CORPUS_DIR = os.path.join(FIXTURE_DIR, "corpus")


def unit_disk(rng) -> complex:
    """복소 단위원판 위 균일 분포 표본"""
    r = math.sqrt(rng.uniform(0.0, 1.0))
    theta = rng.uniform(0.0, 2 * math.pi)
    return complex(r * math.cos(theta), r * math.sin(theta))


def sample_structural(rng, min_det=1e-3, min_a2=1e-3, min_entry=0.0, min_margin=0.0) -> StructuralParams:
    """거부 표본추출로 구조 파라미터 생성

    min_entry 는 A 의 모든 성분, min_margin 은 c21/c12 의 공통 인자와 a11 - a21 의 하한입니다.
    """
    while True:
        A = [[unit_disk(rng), unit_disk(rng)], [unit_disk(rng), unit_disk(rng)]]
        a = [[unit_disk(rng) for _ in range(3)] for _ in range(2)]
        D = A[0][0] * A[1][1] - A[0][1] * A[1][0]
        if abs(D) <= min_det:
            continue
        if abs(a[0][0]) <= min_a2 or abs(a[1][0]) <= min_a2:
            continue
        if min(abs(v) for row in A for v in row) <= min_entry:
            continue
        if min_margin > 0:
            mixed = a[1][0] * A[1][0] + a[0][0] * A[1][1]
            if abs(mixed) <= min_margin or abs(a[0][1] - a[1][1]) <= min_margin:
                continue
        return StructuralParams(A=A, a=a)


def sample_state(rng, radius=1.0) -> InitialState:
    """반지름 radius 의 복소 이중원판 위 초기 상태"""
    return InitialState(radius * unit_disk(rng), radius * unit_disk(rng))


def sample_pole_free(rng, t_end=0.6, bound=10.0, radius=1.0):
    """[0, t_end] 에서 극이 없고 크기가 bound 이하인 (계수, 환원 형태, 초기 상태)"""
    grid = np.linspace(0.0, t_end, 61).tolist()
    while True:
        sp = sample_structural(rng, min_det=0.25, min_entry=0.1, min_margin=0.1)
        c = forward(sp)
        try:
            rf = inverse_map.reduce(c)
        except QuadSolveError:
            continue
        x0 = sample_state(rng, radius)
        trajectory = solver.sample(rf, x0, grid)
        if trajectory.poles or len(trajectory.points) != len(grid):
            continue
        if max(p.norm for p in trajectory.points) > bound:
            continue
        return c, rf, x0


def absolute_error(analytic, numeric) -> float:
    """|x_analytic - x_numeric|"""
    return analytic.distance(numeric)


@pytest.fixture
def rng():
    """재현 가능한 난수 생성기"""
    return np.random.default_rng(12345)


@pytest.fixture
def fixture_path():
    """fixtures 디렉토리 기준 경로"""
    def _path(*parts):
        return os.path.join(FIXTURE_DIR, *parts)
    return _path


@pytest.fixture
def corpus_files():
    """왕복/검증 코퍼스 파일 목록 (이름순)"""
    return sorted(
        os.path.join(CORPUS_DIR, name) for name in os.listdir(CORPUS_DIR) if name.endswith(".json")
    )


@pytest.fixture
def structural_sampler():
    return sample_structural


@pytest.fixture
def state_sampler():
    return sample_state


@pytest.fixture
def pole_free_sampler():
    return sample_pole_free


@pytest.fixture
def error_metric():
    return absolute_error

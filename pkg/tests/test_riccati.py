import math

import pytest

from app.domain.exceptions import PoleAtTime
from app.domain.services import riccati
from app.domain.value_objects.riccati import AsymptoteKind, RiccatiBranch, RiccatiParams


def _flow(params: RiccatiParams, y0: complex, t):
    return riccati.flow_at(riccati.reduce(params), params, y0, t)


class TestRiccatiReduce:
    """리카티 환원 분기 테스트"""

    def test_generic(self):
        """y' = y^2 - 1: beta = 2, y+ = 1, y- = -1"""
        sol = riccati.reduce(RiccatiParams(1, 0, -1))
        assert sol.branch is RiccatiBranch.GENERIC
        assert sol.beta == 2
        assert sol.y_plus == pytest.approx(1)
        assert sol.y_minus == pytest.approx(-1)

    def test_equilibria_are_roots(self, rng):
        """y+- 는 a2 y^2 + a1 y + a0 의 근이고 beta^2 = a1^2 - 4 a0 a2"""
        for _ in range(100):
            p = RiccatiParams(*(complex(rng.normal(), rng.normal()) for _ in range(3)))
            sol = riccati.reduce(p)
            assert sol.branch is RiccatiBranch.GENERIC
            assert abs(sol.beta ** 2 - (p.a1 ** 2 - 4 * p.a0 * p.a2)) <= 1e-12 * max(1.0, abs(sol.beta) ** 2)
            for y in (sol.y_plus, sol.y_minus):
                assert abs(p.rhs(y)) <= 1e-12 * max(1.0, abs(p.a2 * y * y), abs(p.a0))

    def test_double_root(self):
        sol = riccati.reduce(RiccatiParams(1, 2, 1))
        assert sol.branch is RiccatiBranch.DOUBLE_ROOT
        assert sol.y_plus == sol.y_minus == -1

    def test_linear_and_constant(self):
        assert riccati.reduce(RiccatiParams(0, -1, 1)).branch is RiccatiBranch.LINEAR
        constant = riccati.reduce(RiccatiParams(0, 0, 2))
        assert constant.branch is RiccatiBranch.CONSTANT
        assert constant.y_plus is None and constant.y_minus is None

    def test_non_finite_params(self):
        with pytest.raises(ValueError):
            RiccatiParams(float("nan"), 0, 0)


class TestRiccatiFlow:
    """닫힌 해 평가 테스트"""

    def test_tanh(self):
        """y' = y^2 - 1, y(0) = 0 -> -tanh(t)"""
        p = RiccatiParams(1, 0, -1)
        for k in range(1, 11):
            t = k / 10
            assert abs(_flow(p, 0, t) - (-math.tanh(t))) <= 1e-12

    def test_double_root_pole(self):
        """y' = y^2, y(0) = 1 -> 1/(1 - t), t = 1 에서 극"""
        p = RiccatiParams(1, 0, 0)
        for k in range(1, 10):
            t = k / 10
            assert abs(_flow(p, 1, t) - 1 / (1 - t)) <= 1e-12
        with pytest.raises(PoleAtTime) as exc_info:
            _flow(p, 1, 1.0)
        assert exc_info.value.t == 1.0

    def test_tan(self):
        """y' = y^2 + 1, y(0) = 0 -> tan(t)"""
        p = RiccatiParams(1, 0, 1)
        for t in (0.3, 1.0, 1.5, 2.0, -0.7):
            assert abs(_flow(p, 0, t) - math.tan(t)) <= 1e-12 * max(1.0, abs(math.tan(t)))

    def test_linear_and_constant(self):
        assert abs(_flow(RiccatiParams(0, -1, 1), 0, 2.0) - (1 - math.exp(-2.0))) <= 1e-14
        assert _flow(RiccatiParams(0, 0, 2), 1, 1.5) == 4

    def test_time_zero_and_equilibrium(self):
        p = RiccatiParams(1, 0, -1)
        assert _flow(p, 0.3 + 0.1j, 0) == 0.3 + 0.1j
        assert _flow(p, 1, 5.0) == pytest.approx(1)

    def test_large_time_no_overflow(self):
        """|exp| <= 1 쪽 표현을 사용하므로 큰 t 에서도 유한"""
        p = RiccatiParams(1, 0, -1)
        assert _flow(p, 0.5, 800.0) == pytest.approx(-1)
        assert _flow(p, 0.5, -800.0) == pytest.approx(1)

    def test_complex_time(self):
        """순허수 시각: y' = y^2 - 1 에서 -tanh(i s) = -i tan(s)"""
        p = RiccatiParams(1, 0, -1)
        value = _flow(p, 0, 0.4j)
        assert abs(value - (-1j * math.tan(0.4))) <= 1e-12


class TestAsymptoteAndPoles:
    """점근 거동과 극 위치 테스트"""

    def test_asymptote_kinds(self):
        def kind(p):
            return riccati.asymptote(riccati.reduce(p), p)

        assert kind(RiccatiParams(1, 0, 1)).kind is AsymptoteKind.PERIODIC
        converges = kind(RiccatiParams(1, 0, -1))
        assert converges.kind is AsymptoteKind.CONVERGES
        assert converges.value == pytest.approx(-1)
        assert kind(RiccatiParams(0, 1, 0)).kind is AsymptoteKind.NO_LIMIT
        assert kind(RiccatiParams(0, 0, 0)).kind is AsymptoteKind.STATIONARY

    def test_tan_poles(self):
        """tan(t) 의 극: pi/2, 3pi/2"""
        p = RiccatiParams(1, 0, 1)
        poles = riccati.pole_times(riccati.reduce(p), p, 0, 0.0, 5.0)
        assert poles == pytest.approx([math.pi / 2, 3 * math.pi / 2], abs=1e-9)

    def test_double_root_pole_time(self):
        p = RiccatiParams(1, 0, 0)
        assert riccati.pole_times(riccati.reduce(p), p, 2, 0.0, 1.0) == pytest.approx([0.5])
        assert riccati.pole_times(riccati.reduce(p), p, -1, 0.0, 5.0) == []

    def test_real_generic_pole(self):
        """y' = y^2 - 1, y(0) = 2 -> t = atanh(1/2) 에서 극"""
        p = RiccatiParams(1, 0, -1)
        poles = riccati.pole_times(riccati.reduce(p), p, 2, 0.0, 3.0)
        assert poles == pytest.approx([math.atanh(0.5)], abs=1e-12)

    def test_complex_start_has_no_real_pole(self):
        p = RiccatiParams(1, 0, 1)
        assert riccati.pole_times(riccati.reduce(p), p, 0.3j, 0.0, 10.0) == []

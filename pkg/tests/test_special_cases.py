import math

import numpy as np
import pytest

from app.domain.exceptions import ConstraintViolated, InvalidInput, NonGeneric, PoleAtTime
from app.domain.services import inverse_map, riccati, solver, special_cases
from app.domain.services.forward_map import forward, symmetry_transform
from app.domain.value_objects.coefficients import Coefficients
from app.domain.value_objects.integration_settings import IntegrationSettings
from app.domain.value_objects.riccati import RiccatiParams
from app.domain.value_objects.special_case import Case51Params, HomogeneousAB
from app.domain.value_objects.trajectory import InitialState, TrajectoryPoint
from app.infrastructure.integration.dopri5_integrator import Dopri5Integrator


def _random_params(rng) -> Case51Params:
    """|f1|, |f2| in [0.1, 2], g, h 는 단위원판"""
    def modulus(lo, hi):
        phi = rng.uniform(0, 2 * math.pi)
        return rng.uniform(lo, hi) * complex(math.cos(phi), math.sin(phi))

    return Case51Params(
        f1=modulus(0.1, 2.0), f2=modulus(0.1, 2.0),
        g=modulus(0.0, 1.0), h1=modulus(0.0, 1.0), h2=modulus(0.0, 1.0),
    )


def _structural_point(p: Case51Params, x0: InitialState, t: float) -> TrajectoryPoint:
    """x = A y (A11 = 0) 경로로 평가"""
    sp = special_cases.case51_structural(p, 1.5, -0.5 + 1j)
    y = []
    for y0, row in zip(sp.unmix(x0.x1, x0.x2), sp.a):
        params = RiccatiParams(*row)
        y.append(riccati.flow_at(riccati.reduce(params), params, y0, t))
    x1, x2 = sp.mix(*y)
    return TrajectoryPoint(t=t, x1=x1, x2=x2)


class TestMatchCase51:
    """응용 부분류 판정 테스트"""

    def test_direct_match(self):
        c = Coefficients.from_mapping({(1, 1): 1, (2, 2): 2, (2, 3): 1, (1, 6): -1})
        match = special_cases.match_case51(c)
        assert match.matched and not match.mirrored
        p = match.params
        assert (p.f1, p.f2, p.g, p.h1, p.h2) == (1, 1, 0, -1, 0)

    def test_lotka_volterra_rejected(self):
        c = Coefficients.from_mapping({(1, 1): 1, (1, 2): 1, (2, 2): 2, (2, 3): 1})
        match = special_cases.match_case51(c)
        assert not match.matched
        assert "f12 != 0" in match.reasons

    def test_zero_rejected(self):
        match = special_cases.match_case51(Coefficients.zeros())
        assert not match.matched
        assert "|f1| <= tol" in match.reasons

    def test_mirrored_dispatch(self):
        c = symmetry_transform(Coefficients.from_mapping({(1, 1): 1, (2, 2): 2, (2, 3): 1, (1, 6): -1}))
        assert not special_cases.match_case51(c).matched
        match = special_cases.dispatch_case51(c)
        assert match.matched and match.mirrored

    def test_params_validation(self):
        with pytest.raises(ValueError):
            Case51Params(f1=0, f2=1, g=0, h1=0, h2=0)


class TestSolve51:
    """응용 부분류 닫힌 해 테스트"""

    @pytest.fixture
    def params(self):
        """x1' = x1^2 - 1, x2' = x2 (2 x1 + x2)"""
        return Case51Params(f1=1, f2=1, g=0, h1=-1, h2=0)

    def test_reduction(self, params):
        reduced = special_cases.reduce_case51(params)
        assert reduced.eta == ((1, 0, -1), (-1, 0, 1))
        assert reduced.gamma == (2, 2)

    def test_time_zero(self, params):
        x0 = InitialState(0.2, 0.1)
        point = special_cases.solve51_at(params, x0, 0.0)
        assert (point.x1, point.x2) == (x0.x1, x0.x2)

    def test_x1_follows_tanh(self, params):
        """x1(0) = 0 -> x1(t) = -tanh(t)"""
        x0 = InitialState(0, 0.3)
        for t in (0.1, 0.5, 1.0):
            assert abs(special_cases.solve51_at(params, x0, t).x1 + math.tanh(t)) <= 1e-12

    def test_equilibrium_keeps_x1(self, params):
        """xi2(0) = xi2+ 이면 x1 고정"""
        x0 = InitialState(-1, 0.2)
        for t in (0.3, 0.9):
            assert special_cases.solve51_at(params, x0, t).x1 == pytest.approx(-1)

    def test_pole(self, params):
        """xi1(0) = 2 -> t = atanh(1/2) 에서 xi1 극"""
        x0 = InitialState(0, 2)
        xi1 = RiccatiParams(1, 0, -1)
        t_pole = riccati.pole_times(riccati.reduce(xi1), xi1, 2, 0.0, 2.0)[0]
        with pytest.raises(PoleAtTime) as exc_info:
            special_cases.solve51_at(params, x0, t_pole)
        assert exc_info.value.component == 1

    def test_oracle_agreement(self, rng):
        """100개 무작위 파라미터: [0, 0.5] 에서 수치 적분과 1e-6 이내"""
        integrator = Dopri5Integrator()
        settings = IntegrationSettings(rel_tol=1e-10, abs_tol=1e-12)
        grid = np.linspace(0.0, 0.5, 51).tolist()
        checked = 0
        while checked < 100:
            p = _random_params(rng)
            x0 = InitialState(0.3 * complex(*rng.uniform(-1, 1, 2)), 0.3 * complex(*rng.uniform(-1, 1, 2)))
            try:
                analytic = [special_cases.solve51_at(p, x0, t) for t in grid]
            except PoleAtTime:
                continue
            if max(q.norm for q in analytic) > 10:
                continue
            numeric = integrator.integrate_grid(special_cases.case51_coefficients(p), x0, grid, settings)
            for a, b in zip(analytic, numeric):
                assert a.distance(b) <= 1e-6
            checked += 1

    def test_structural_path_agreement(self, rng):
        """일반 환원은 거부하지만 A11 = 0 구조 경로와는 1e-8 이내로 일치"""
        for _ in range(100):
            p = _random_params(rng)
            c = special_cases.case51_coefficients(p)
            sp = special_cases.case51_structural(p, 1.5, -0.5 + 1j)
            rebuilt = forward(sp)
            assert max(
                abs(u - v) for ru, rv in zip(c.rows, rebuilt.rows) for u, v in zip(ru, rv)
            ) <= 1e-10 * max(1.0, c.max_abs())
            with pytest.raises(NonGeneric):
                inverse_map.reduce(c)
            x0 = InitialState(0.3 * complex(*rng.uniform(-1, 1, 2)), 0.3 * complex(*rng.uniform(-1, 1, 2)))
            for t in (0.1, 0.3):
                try:
                    direct = special_cases.solve51_at(p, x0, t)
                except PoleAtTime:
                    continue
                if direct.norm > 10:
                    continue
                other = _structural_point(p, x0, t)
                assert direct.distance(other) <= 1e-8

    def test_swap_symmetry(self, rng):
        """교환 패턴으로 풀면 교환된 궤적"""
        for _ in range(20):
            p = _random_params(rng)
            x0 = InitialState(0.3 * complex(*rng.uniform(-1, 1, 2)), 0.3 * complex(*rng.uniform(-1, 1, 2)))
            mirrored_c = symmetry_transform(special_cases.case51_coefficients(p))
            match = special_cases.dispatch_case51(mirrored_c)
            assert match.mirrored
            try:
                direct = special_cases.solve51_at(p, x0, 0.25)
            except PoleAtTime:
                continue
            swapped = special_cases.solve_case51(match, special_cases.swap_state(x0), 0.25)
            assert abs(swapped.x1 - direct.x2) <= 1e-9 * max(1.0, direct.norm)
            assert abs(swapped.x2 - direct.x1) <= 1e-9 * max(1.0, direct.norm)


class TestHomogeneousGate:
    """동차 계 허용 판정 테스트"""

    def test_admissible_pairs(self):
        for ab in (HomogeneousAB(0, 0), HomogeneousAB(0.5, 0)):
            gate = special_cases.homogeneous_gate(ab)
            assert gate.admissible
            assert max(abs(r) for r in gate.residuals) <= 1e-12

    def test_first_residual(self):
        gate = special_cases.homogeneous_gate(HomogeneousAB(0.5, 0.1))
        assert not gate.admissible
        assert gate.raw_residuals[0] == pytest.approx(-0.1)

    def test_single_monomial_residual_is_unit(self):
        """단항식 하나만 남은 제약식은 크기와 무관하게 정규화 잔차 1"""
        gate = special_cases.homogeneous_gate(HomogeneousAB(0.5, 1e-15))
        assert not gate.admissible
        assert abs(gate.raw_residuals[0]) == pytest.approx(1e-15)
        assert abs(gate.residuals[0]) == pytest.approx(1.0)

    def test_grid_rejected(self):
        """20x20 격자의 다른 (A, B) 는 모두 거부"""
        values = np.linspace(-1.0, 1.0, 20)
        for A in values:
            for B in values:
                assert not special_cases.homogeneous_gate(HomogeneousAB(A, B)).admissible


class TestExpScaling:
    """지수 스케일 확장 테스트"""

    @pytest.fixture
    def c_half(self):
        return special_cases.homogeneous_coefficients(HomogeneousAB(0.5, 0))

    def test_lambda_zero(self, c_half):
        x0 = InitialState(0.2, 0.1)
        rf = inverse_map.reduce(c_half)
        scaled = special_cases.exp_scaling_extend(c_half, 0, x0, 0.7)
        plain = solver.solve_at(rf, x0, 0.7)
        assert scaled.distance(plain) <= 1e-14

    def test_log_two(self, c_half):
        """lambda = 1, t = ln 2 -> tau = 1, x = 2 zeta(1)"""
        x0 = InitialState(0.2, 0.1)
        zeta = solver.solve_at(inverse_map.reduce(c_half), x0, 1.0)
        point = special_cases.exp_scaling_extend(c_half, 1, x0, math.log(2))
        assert abs(point.x1 - 2 * zeta.x1) <= 1e-12
        assert abs(point.x2 - 2 * zeta.x2) <= 1e-12

    def test_extended_ode(self, c_half):
        """x' = lambda x + 이차항 (중심 차분, h = 1e-5)"""
        lam, h, t = 0.5, 1e-5, 0.4
        x0 = InitialState(0.2 + 0.1j, -0.1)
        ahead = special_cases.exp_scaling_extend(c_half, lam, x0, t + h)
        behind = special_cases.exp_scaling_extend(c_half, lam, x0, t - h)
        here = special_cases.exp_scaling_extend(c_half, lam, x0, t)
        quadratic = c_half.rhs(here.x1, here.x2)
        for derivative, x, q in zip(
            ((ahead.x1 - behind.x1) / (2 * h), (ahead.x2 - behind.x2) / (2 * h)), (here.x1, here.x2), quadratic
        ):
            assert abs(derivative - (lam * x + q)) <= 1e-6

    def test_integrator_fallback(self):
        """(A, B) = (1, 1) 은 환원 불가: 수치 적분으로 대체"""
        c_hom = special_cases.homogeneous_coefficients(HomogeneousAB(1, 1))
        x0 = InitialState(0.1, 0.05)
        lam, t = 0.5, 0.4
        with pytest.raises(ConstraintViolated):
            special_cases.exp_scaling_extend(c_hom, lam, x0, t)

        integrator = Dopri5Integrator()
        settings = IntegrationSettings(rel_tol=1e-11, abs_tol=1e-13)
        point = special_cases.exp_scaling_extend(c_hom, lam, x0, t, integrator=integrator, settings=settings)
        rows = [list(r) for r in c_hom.rows]
        rows[0][3] = lam
        rows[1][4] = lam
        direct = integrator.integrate(Coefficients(tuple(tuple(r) for r in rows)), x0, t, settings)
        assert point.distance(direct) <= 1e-8

    def test_rejects_linear_terms(self):
        c = Coefficients.from_mapping({(1, 2): 1, (2, 1): 0.5, (2, 3): 0.5, (1, 4): 1})
        with pytest.raises(InvalidInput):
            special_cases.exp_scaling_extend(c, 1, InitialState(0.1, 0.1), 0.5)

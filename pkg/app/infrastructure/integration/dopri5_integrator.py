import warnings
from typing import List, Sequence

import numpy as np
from scipy.integrate import ode

from app.core.logger import get_logger
from app.domain.exceptions import BlowupDetected, StepLimitExceeded
from app.domain.services.integrator_service import IntegratorService
from app.domain.value_objects.coefficients import Coefficients
from app.domain.value_objects.integration_settings import IntegrationSettings
from app.domain.value_objects.trajectory import InitialState, TrajectoryPoint

logger = get_logger("infrastructure.integration.dopri5")

# dopri5 반환 코드
_INTERRUPTED_BY_SOLOUT = 2
_NSTEPS_EXCEEDED = -2
_STEP_TOO_SMALL = -3
_PROBABLY_STIFF = -4


class Dopri5Integrator(IntegratorService):
    """Dormand-Prince 5(4) 적응형 적분기 (scipy.integrate.ode 'dopri5')

    복소 상태 (x1, x2) 를 실수 4차원 (Re x1, Im x1, Re x2, Im x2) 으로 나누어
    적분합니다. beta 파라미터로 스텝 크기 안정화(PI) 제어를 사용합니다.
    """

    def integrate(
        self,
        c: Coefficients,
        x0: InitialState,
        t_end: float,
        settings: IntegrationSettings,
    ) -> TrajectoryPoint:
        if t_end == 0:
            return TrajectoryPoint(t=0.0, x1=x0.x1, x2=x0.x2)
        return self.integrate_grid(c, x0, [t_end], settings)[0]

    def integrate_grid(
        self,
        c: Coefficients,
        x0: InitialState,
        t_grid: Sequence[float],
        settings: IntegrationSettings,
    ) -> List[TrajectoryPoint]:
        solver = self._build(c, x0, settings)
        points = []
        for t in t_grid:
            if t == 0:
                points.append(TrajectoryPoint(t=0.0, x1=x0.x1, x2=x0.x2))
                continue
            with warnings.catch_warnings():
                # 실패는 반환 코드로 판정
                warnings.simplefilter("ignore", UserWarning)
                state = solver.integrate(t)
            self._check(solver, t)
            points.append(TrajectoryPoint(t=t, x1=complex(state[0], state[1]), x2=complex(state[2], state[3])))
        return points

    def _build(self, c: Coefficients, x0: InitialState, settings: IntegrationSettings) -> ode:
        threshold = settings.blowup_threshold

        def rhs(t, v):
            dx1, dx2 = c.rhs(complex(v[0], v[1]), complex(v[2], v[3]))
            return [dx1.real, dx1.imag, dx2.real, dx2.imag]

        def solout(t, v):
            if not np.all(np.isfinite(v)) or np.linalg.norm(v) > threshold:
                return -1
            return 0

        solver = ode(rhs).set_integrator(
            "dopri5",
            rtol=settings.rel_tol,
            atol=settings.abs_tol,
            nsteps=settings.max_steps,
            max_step=settings.max_step,
            beta=settings.beta,
        )
        # solout 은 초기값 설정 전에 등록해야 함
        solver.set_solout(solout)
        solver.set_initial_value([x0.x1.real, x0.x1.imag, x0.x2.real, x0.x2.imag], 0.0)
        return solver

    def _check(self, solver: ode, t_target: float) -> None:
        code = solver.get_return_code()
        if code == _INTERRUPTED_BY_SOLOUT or code == _STEP_TOO_SMALL:
            logger.debug(f"발산 감지: t={solver.t} (목표 t={t_target}, 코드={code})")
            raise BlowupDetected(solver.t)
        if code == _NSTEPS_EXCEEDED or code == _PROBABLY_STIFF:
            raise StepLimitExceeded(f"t={solver.t} 에서 스텝 한도 초과 (목표 t={t_target}, 코드={code})")
        if code < 0:
            raise ValueError(f"dopri5 입력 오류 (코드={code})")

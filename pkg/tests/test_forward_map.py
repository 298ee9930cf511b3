import pytest

from app.domain.exceptions import DeterminantZero
from app.domain.services.forward_map import forward, swap_structural, symmetry_transform
from app.domain.services.inverse_map import check_constraints
from app.domain.value_objects.coefficients import Coefficients, StructuralParams


def _max_diff(u: Coefficients, v: Coefficients) -> float:
    return max(abs(x - y) for row_u, row_v in zip(u.rows, v.rows) for x, y in zip(row_u, row_v))


class TestForward:
    """구조 파라미터 -> 계수 테스트"""

    @pytest.fixture
    def isochronous_params(self):
        """x = A y, y1' = y1^2 + 1, y2' = y2^2 + 4"""
        return StructuralParams(A=((1, 1), (1, -1)), a=((1, 0, 1), (1, 0, 4)))

    def test_isochronous_coefficients(self, isochronous_params):
        """x1' = (x1^2 + x2^2)/2 + 5, x2' = x1 x2 - 3"""
        expected = Coefficients.from_mapping({
            (1, 1): 0.5, (1, 3): 0.5, (1, 6): 5,
            (2, 2): 1, (2, 6): -3,
        })
        assert _max_diff(forward(isochronous_params), expected) <= 1e-15

    def test_vector_field_matches_mixing(self, isochronous_params, rng):
        """c 의 벡터장 == A * (y 의 리카티 우변)"""
        c = forward(isochronous_params)
        for _ in range(20):
            y = (complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
            x = isochronous_params.mix(*y)
            dy = [
                (a2 * yn + a1) * yn + a0
                for (a2, a1, a0), yn in zip(isochronous_params.a, y)
            ]
            dx = isochronous_params.mix(*dy)
            lhs = c.rhs(*x)
            assert abs(lhs[0] - dx[0]) <= 1e-12 * max(1.0, abs(dx[0]))
            assert abs(lhs[1] - dx[1]) <= 1e-12 * max(1.0, abs(dx[1]))

    def test_singular_mixing(self):
        with pytest.raises(DeterminantZero):
            forward(StructuralParams(A=((1, 2), (2, 4)), a=((1, 0, 0), (1, 0, 0))))

    def test_constraint_closure(self, rng, structural_sampler):
        """무작위 1000개 계 모두 4개 제약식 만족 (정규화 잔차 <= 1e-10)"""
        for _ in range(1000):
            report = check_constraints(forward(structural_sampler(rng)))
            assert max(abs(r) for r in report.residuals) <= 1e-10
            assert report.satisfied

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            StructuralParams(A=((1, 2),), a=((1, 0, 0), (1, 0, 0)))
        with pytest.raises(ValueError):
            Coefficients(((0,) * 6, (0,) * 5))


class TestSymmetryTransform:
    """x1 <-> x2 대칭 변환 테스트"""

    def test_involution(self, rng):
        c = Coefficients(tuple(
            tuple(complex(rng.normal(), rng.normal()) for _ in range(6)) for _ in range(2)
        ))
        assert symmetry_transform(symmetry_transform(c)) == c

    def test_c12_maps_to_c22(self):
        moved = symmetry_transform(Coefficients.from_mapping({(1, 2): 1}))
        assert moved == Coefficients.from_mapping({(2, 2): 1})

    def test_constraints_preserved(self, rng, structural_sampler):
        for _ in range(100):
            report = check_constraints(symmetry_transform(forward(structural_sampler(rng))))
            assert report.satisfied

    def test_equivariance(self, rng, structural_sampler):
        """forward(교환된 구조) == symmetry_transform(forward(구조))"""
        for _ in range(100):
            sp = structural_sampler(rng)
            lhs = forward(swap_structural(sp))
            rhs = symmetry_transform(forward(sp))
            assert _max_diff(lhs, rhs) <= 1e-12 * max(1.0, rhs.max_abs())

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from expcross.errors import DomainError, StateError
from expcross.intersect import (
    TANGENT_BASE,
    IntersectionClass,
    base_to_z,
    bisectrix_slope,
    classify_base,
    diagonal_intersections,
    tangency_certificate,
)
from expcross.lambertw import BRANCH_POINT_Z


def log_spaced(lo: float, hi: float, count: int) -> list[float]:
    ratio = math.log(hi / lo)
    return [lo * math.exp(ratio * (i + 0.5) / count) for i in range(count)]


class TestBaseToZ:
    def test_tangent_base_maps_to_branch_point(self):
        assert abs(base_to_z(TANGENT_BASE) - BRANCH_POINT_Z) <= 1e-16

    def test_reciprocal_e(self):
        assert base_to_z(1 / math.e) == pytest.approx(1.0, abs=1e-15)

    def test_quoted_log(self):
        # cross-checked against ln(1.3) = 0.26236426446749106
        assert base_to_z(1.3) == -0.26236426446749106

    def test_signs(self):
        assert base_to_z(0.5) > 0.0
        assert base_to_z(2.0) < 0.0

    @pytest.mark.parametrize("b", [0.0, -2.0, 1.0, math.inf, math.nan])
    def test_rejects(self, b):
        with pytest.raises(DomainError):
            base_to_z(b)


class TestClassifyBase:
    def test_quoted_regimes(self):
        assert classify_base(0.8) is IntersectionClass.UNIQUE_DIAGONAL
        assert classify_base(1.3) is IntersectionClass.TWO_POINTS
        assert classify_base(TANGENT_BASE) is IntersectionClass.TANGENT
        assert classify_base(math.e) is IntersectionClass.NO_INTERSECTION

    def test_tangent_snap_band(self):
        assert classify_base(TANGENT_BASE * (1 + 1e-10)) is IntersectionClass.TANGENT
        assert classify_base(TANGENT_BASE * (1 - 1e-10)) is IntersectionClass.TANGENT
        assert classify_base(TANGENT_BASE * (1 + 1e-7)) is IntersectionClass.NO_INTERSECTION
        assert classify_base(TANGENT_BASE * (1 - 1e-7)) is IntersectionClass.TWO_POINTS

    def test_unit_base_excluded(self):
        for b in (1.0, 1.0 + 1e-10, 1.0 - 1e-10):
            with pytest.raises(DomainError):
                classify_base(b)

    def test_nonpositive(self):
        with pytest.raises(DomainError):
            classify_base(0.0)
        with pytest.raises(DomainError):
            classify_base(-0.3)


class TestDiagonalIntersections:
    def test_decreasing_base_single_point(self):
        report = diagonal_intersections(0.8)
        assert report.classification is IntersectionClass.UNIQUE_DIAGONAL
        (point,) = report.points
        assert abs(point.x - 0.83) <= 0.005
        assert point.source_branch == "W0"
        assert point.y == point.x

    def test_two_point_regime(self):
        report = diagonal_intersections(1.3)
        assert report.classification is IntersectionClass.TWO_POINTS
        p0, p1 = report.points
        assert abs(p0.x - 1.47) <= 0.005
        assert abs(p1.x - 7.86) <= 0.005
        assert p0.source_branch == "W0"
        assert p1.source_branch == "Wm1"
        assert p0.x < p1.x

    def test_tangent_regime(self):
        report = diagonal_intersections(TANGENT_BASE)
        assert report.classification is IntersectionClass.TANGENT
        (point,) = report.points
        assert point.x == math.e
        assert point.source_branch == "tangency"

    def test_no_intersection(self):
        report = diagonal_intersections(3.0)
        assert report.classification is IntersectionClass.NO_INTERSECTION
        assert report.points == ()

    def test_report_consistency(self):
        report = diagonal_intersections(1.2)
        assert report.b == 1.2
        assert report.z == -math.log(1.2)

    def test_base_near_zero_supported(self):
        report = diagonal_intersections(1e-300)
        (point,) = report.points
        assert point.residual <= 1e-10 * max(1.0, point.x)

    def test_propagates_domain_error(self):
        with pytest.raises(DomainError):
            diagonal_intersections(1.0)


EXPECTED_COUNT = {
    IntersectionClass.UNIQUE_DIAGONAL: 1,
    IntersectionClass.TWO_POINTS: 2,
    IntersectionClass.TANGENT: 1,
    IntersectionClass.NO_INTERSECTION: 0,
}


def regime_samples(count: int = 100) -> list[float]:
    bases = log_spaced(0.02, 0.99, count)
    bases += log_spaced(1.01, TANGENT_BASE - 5e-3, count)
    bases += log_spaced(TANGENT_BASE + 5e-3, 100.0, count)
    bases.append(TANGENT_BASE)
    return bases


def test_count_matches_class():
    for b in regime_samples():
        report = diagonal_intersections(b)
        assert len(report.points) == EXPECTED_COUNT[report.classification], b


def test_fixed_point_property():
    for b in regime_samples():
        for p in diagonal_intersections(b).points:
            assert abs(b**p.x - p.x) <= 1e-10 * max(1.0, p.x), b
            # inverse-function form, looser by conditioning
            assert abs(math.log(p.x) / math.log(b) - p.x) <= 1e-9 * max(1.0, p.x), b


def test_substitution_identity():
    for b in regime_samples():
        ln_b = math.log(b)
        for p in diagonal_intersections(b).points:
            w = -p.x * ln_b
            assert abs(w * math.exp(w) - (-ln_b)) <= 1e-12 * max(1.0, abs(ln_b)), b


def test_two_point_abscissas_converge_at_tangency():
    deviations = []
    for k in range(2, 7):
        report = diagonal_intersections(TANGENT_BASE * (1.0 - 10.0**-k))
        assert report.classification is IntersectionClass.TWO_POINTS
        deviations.append(max(abs(p.x - math.e) for p in report.points))
    assert all(a > b for a, b in zip(deviations, deviations[1:]))


@given(b=st.floats(min_value=0.01, max_value=0.99))
def test_decreasing_bases_always_one_diagonal_point(b):
    report = diagonal_intersections(b)
    assert report.classification is IntersectionClass.UNIQUE_DIAGONAL
    assert len(report.points) == 1


@given(b=st.floats(min_value=1.001, max_value=TANGENT_BASE - 1e-3))
def test_growing_bases_two_ordered_points(b):
    points = diagonal_intersections(b).points
    assert [p.source_branch for p in points] == ["W0", "Wm1"]
    assert points[0].x < points[1].x


class TestTangency:
    def test_certificate_at_tangent_base(self):
        assert abs(tangency_certificate(TANGENT_BASE) - 1.0) <= 1e-12

    def test_certificate_requires_tangent_regime(self):
        with pytest.raises(StateError):
            tangency_certificate(1.3)
        with pytest.raises(StateError):
            tangency_certificate(2.0)

    def test_slope_grows_past_tangency(self):
        # the raw slope, without the regime gate
        assert bisectrix_slope(TANGENT_BASE + 1e-3) > 1.0
        assert bisectrix_slope(TANGENT_BASE - 1e-3) < 1.0

    def test_slope_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            bisectrix_slope(-1.0)

"""Smoke tests for the python bindings against known closed forms."""

import math

import pytest

import cmclab


def test_clifford_curvature_closed_forms():
    s = cmclab.make_clifford(2, 1, 0.6)
    assert s.dim == 2
    assert s.ambient == 4
    cd = cmclab.curvature(s, [0.3, 1.1])
    assert cd["kappas"] == pytest.approx([-4.0 / 3.0, 0.75], abs=1e-12)
    assert cd["mean_h"] == pytest.approx(-7.0 / 24.0, abs=1e-12)
    assert cd["norm_a_sq"] == pytest.approx(337.0 / 144.0, abs=1e-12)


def test_chart_center_point_and_normal():
    s = cmclab.make_clifford(2, 1, 0.6)
    assert cmclab.point(s, [0.0, 0.0]) == pytest.approx([0.6, 0.0, 0.8, 0.0])
    assert cmclab.normal(s, [0.0, 0.0]) == pytest.approx([0.8, 0.0, -0.6, 0.0])


def test_umbilical_support_relation():
    s = cmclab.make_umbilical(2, 0.5)
    sample = cmclab.support_sample(s, [1.0, 2.0], [0.0, 0.0, 1.0, 0.0])
    factor = -0.5 / math.sqrt(0.75)
    assert sample["normal_component"] == pytest.approx(
        factor * sample["height"], abs=1e-12
    )


def test_proportionality_ratio():
    s = cmclab.make_clifford(2, 1, 0.6)
    res = cmclab.proportionality(s, [1.0, 0.0, 0.0, 0.0], samples=150)
    assert res["holds"]
    assert res["ratio"] == pytest.approx(0.75, abs=1e-12)


def test_gram_dimensions_great_sphere():
    assert cmclab.gram_dimensions(cmclab.make_umbilical(2, 0.0)) == (3, 1)
    assert cmclab.gram_dimensions(cmclab.make_clifford(2, 1, 0.6)) == (4, 4)


def test_index_counts_minimal_torus():
    idx = cmclab.index_counts(2, 1, math.sqrt(0.5))
    assert idx["weak"] == 4
    assert idx["strong"] == 5
    assert any(p == 1 and q == 1 for (p, q, _) in idx["kernel"])


def test_index_test_constants():
    c = cmclab.index_test_constants(-7.0 / 24.0, 337.0 / 144.0, 2)
    assert c["alpha_plus"] == pytest.approx(-4.0 / 3.0, abs=1e-12)
    assert c["alpha_minus"] == pytest.approx(0.75, abs=1e-12)
    assert c["mu_plus"] == pytest.approx(25.0 / 9.0, abs=1e-12)
    assert c["mu_minus"] == pytest.approx(25.0 / 16.0, abs=1e-12)


def test_counterexample_height_equals_normal_component():
    s = cmclab.make_counterexample(2, math.acos(0.8), 0.02, 2)
    for u in cmclab.sample_params(s, 20):
        x = cmclab.point(s, u)
        nu = cmclab.normal(s, u)
        assert x[0] == pytest.approx(nu[0], abs=1e-12)
        assert sum(c * c for c in x) == pytest.approx(1.0, abs=1e-12)


def test_base_surface_curvature_gate():
    with pytest.raises(cmclab._core.CurvatureOutOfBoundsError):
        cmclab.make_base_surface(2, math.acos(0.8), 0.5, 3)


def test_transport_curvature_fixed_points():
    for s in (-0.4, 0.0, 0.7):
        assert cmclab.transport_curvature(0.75, 0.75, s) == pytest.approx(0.75)
        assert cmclab.transport_curvature(-4.0 / 3.0, 0.75, s) == pytest.approx(
            -4.0 / 3.0
        )


def test_partition_obstruction():
    verdict = cmclab.partition_obstruction([0.75], 0.75, -7.0 / 24.0)
    assert verdict["consistent"]
    assert verdict["groups"] == []
    verdict = cmclab.partition_obstruction([0.2, 0.3], 1.0, 0.1)
    assert not verdict["consistent"]
    assert len(verdict["groups"]) == 2


def test_partial_fraction_rejects():
    assert cmclab.partial_fraction_rejects([(1, 1), (2, 1)], [1, -1], 0)
    assert not cmclab.partial_fraction_rejects([(1, 1), (2, 1)], [0, 0], 0)


def test_mesh_crosscheck_second_order():
    rows = cmclab.mesh_crosscheck(math.sqrt(0.5), grid=32)
    assert rows[0][0] == pytest.approx(2.0)
    assert rows[0][2] < 1e-2

"""Surface construction: data model, evaluation, conversions, description files."""

import json
import math

import numpy as np
import pytest

from minface.errors import (
    DataConversionDegenerate,
    InvalidCurveData,
    InvalidWeierstrassData,
    ModeUnsupported,
    SingularPoint,
    SpecFileError,
)
from minface.paracomplex import null_residual
from minface.surface import (
    RealWeierstrassData,
    Rect,
    as_pair,
    conjugate_data,
    curves_from_data,
    data_from_curves,
    evaluate,
    jets_at,
    load_spec,
    mean_curvature_residual,
    pair_from_position_expressions,
    save_spec,
    surface_from_dict,
    surface_to_dict,
)

from oracles import position as oracle_position


def enneper_closed_form(u, v):
    """Antiderivative of the degree-one data surface, integrated by hand."""
    return np.array([
        0.25 * (-u - u ** 3 / 3 + v + v ** 3 / 3),
        0.25 * (u - u ** 3 / 3 + v - v ** 3 / 3),
        0.25 * (u * u + v * v),
    ])


def test_rect_validation():
    with pytest.raises(ValueError):
        Rect(1.0, 1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        Rect(0.0, 1.0, 2.0, -2.0)
    r = Rect(-1.0, 1.0, 0.0, 2.0)
    assert r.contains(0.0, 1.0)
    assert not r.contains(1.5, 1.0)
    assert r.contains(1.05, 1.0, pad=0.1)


def test_degree_one_position_matches_closed_form(enneper, rng):
    for _ in range(50):
        u, v = rng.uniform(-3, 3, size=2)
        got = evaluate(enneper, u, v)
        assert np.max(np.abs(got - enneper_closed_form(u, v))) < 1e-10


def test_position_matches_independent_quadrature(enneper, rng):
    want = oracle_position("u", "-v", "1/2", "1/2", (0.0, 0.0),
                           (0.0, 0.0, 0.0), 1.7, -2.4)
    got = evaluate(enneper, 1.7, -2.4)
    assert np.max(np.abs(got - np.array([float(w) for w in want]))) < 1e-10


def test_surface_jet_spot_values(enneper):
    sj = jets_at(enneper, 0.0, 0.0)
    assert sj.Lambda == pytest.approx(0.125, abs=1e-15)
    assert np.allclose(sj.nu, [0.0, 0.0, -1.0])
    assert np.allclose(sj.n, [0.0, 0.0, -1.0])
    assert sj.Q == pytest.approx(-0.5, abs=1e-15)
    assert sj.R == pytest.approx(-0.5, abs=1e-15)
    assert np.allclose(sj.f_uv, 0.0)
    assert np.allclose(sj.f_u, [-0.25, 0.25, 0.0])
    assert np.allclose(sj.f_v, [0.25, 0.25, 0.0])


def test_generating_velocities_are_null(enneper, ce_quasi, rng):
    for surface in (enneper, ce_quasi):
        pair = as_pair(surface)
        dom = pair.domain
        for _ in range(25):
            u = rng.uniform(dom.u_min, dom.u_max)
            v = rng.uniform(dom.v_min, dom.v_max)
            pu = pair.phi_prime_value(u)
            pv = pair.psi_prime_value(v)
            assert null_residual(pu) < 1e-10 * max(1.0, float(pu @ pu))
            assert null_residual(pv) < 1e-10 * max(1.0, float(pv @ pv))


def test_minimality_residual_is_zero(enneper):
    assert mean_curvature_residual(enneper, 0.7, -1.2) == 0.0


def test_minimality_rejects_singular_point(enneper):
    with pytest.raises(SingularPoint):
        mean_curvature_residual(enneper, 1.0, -1.0)


def test_data_validation_rejects_vanishing_weight():
    with pytest.raises(InvalidWeierstrassData):
        RealWeierstrassData.from_strings("u", "v", "u", "1", Rect(-1, 1, -1, 1))


def test_data_validation_rejects_identically_singular():
    with pytest.raises(InvalidWeierstrassData):
        RealWeierstrassData.from_strings("2", "1/2", "1", "1",
                                         Rect(-1, 1, -1, 1))


def test_data_validation_rejects_base_outside_domain():
    with pytest.raises(InvalidWeierstrassData):
        RealWeierstrassData.from_strings("u", "-v", "1/2", "1/2",
                                         Rect(-1, 1, -1, 1), base=(2.0, 0.0))


def test_curve_mode_requires_null_velocities():
    with pytest.raises(InvalidCurveData):
        pair_from_position_expressions(
            ("u", "2*u", "0"), ("v", "v", "0"), Rect(-1, 1, -1, 1))


def test_curve_mode_rejects_vanishing_velocity():
    with pytest.raises(InvalidCurveData):
        pair_from_position_expressions(
            ("u^2/2", "u^2/2", "0"), ("v", "v", "0"), Rect(0, 2, -1, 1))


def test_curve_mode_position_matches_expressions(kchange, rng):
    pair = as_pair(kchange)
    for _ in range(20):
        u = rng.uniform(-2, 2)
        v = rng.uniform(-2, 2)
        phi = np.array([u + u ** 5 / 5, 2 * u ** 3 / 3, u - u ** 5 / 5])
        psi = np.array([-v - v ** 5 / 5, 2 * v ** 3 / 3, v - v ** 5 / 5])
        got = evaluate(pair, u, v)
        assert np.max(np.abs(got - 0.5 * (phi + psi))) < 1e-12


def test_data_to_curves_to_data_round_trip(enneper, ce_quasi, rng):
    for surface in (enneper, ce_quasi):
        pair = as_pair(surface)
        rec = data_from_curves(pair)
        d = surface if isinstance(surface, RealWeierstrassData) else pair.data
        dom = pair.domain
        for _ in range(25):
            u = rng.uniform(dom.u_min, dom.u_max)
            v = rng.uniform(dom.v_min, dom.v_max)
            assert rec.g1(u) == pytest.approx(d.g1_jet(u).value, abs=1e-10)
            assert rec.g2(v) == pytest.approx(d.g2_jet(v).value, abs=1e-10)
            assert rec.w1(u) == pytest.approx(d.w1_jet(u).value, abs=1e-10)
            assert rec.w2(v) == pytest.approx(d.w2_jet(v).value, abs=1e-10)


def test_degenerate_conversion_names_parameter(kchange):
    rec = data_from_curves(as_pair(kchange))
    with pytest.raises(DataConversionDegenerate) as exc:
        rec.w1(1.0)
    assert exc.value.axis == "u"
    assert exc.value.param == 1.0


def test_rotation_angle_removes_conversion_degeneracy(kchange):
    pair = as_pair(kchange)
    theta = 0.3
    rec = data_from_curves(pair, theta=theta)
    c, s = math.cos(theta), math.sin(theta)
    for u in (-1.5, -1.0, 0.3, 1.0, 1.9):
        vel = pair.phi_prime_value(u)
        rot = np.array([vel[0], vel[1] * c - vel[2] * s,
                        vel[1] * s + vel[2] * c])
        g, w = rec.g1(u), rec.w1(u)
        rebuilt = np.array([-w * (1 + g * g), w * (1 - g * g), 2 * g * w])
        assert np.max(np.abs(rebuilt - rot)) < 1e-10 * max(1.0, float(rot @ rot))


def test_conjugate_negates_second_weight(enneper):
    conj = conjugate_data(enneper)
    for v in (-2.0, 0.4, 1.7):
        assert conj.w2_jet(v).value == -enneper.w2_jet(v).value
        assert conj.g2_jet(v).value == enneper.g2_jet(v).value


def test_conjugate_sum_is_independent_of_v(enneper):
    """f + f* = (integral of phi') + 2 f0 carries no v-dependence."""
    conj = conjugate_data(enneper)
    u = 0.8
    sums = [evaluate(enneper, u, v) + evaluate(conj, u, v)
            for v in (-2.0, 0.0, 1.3)]
    assert np.max(np.abs(sums[0] - sums[1])) < 1e-10
    assert np.max(np.abs(sums[0] - sums[2])) < 1e-10


def test_conjugation_requires_data_mode(kchange):
    with pytest.raises(ModeUnsupported):
        conjugate_data(as_pair(kchange))


# --- description files -----------------------------------------------------


def enneper_dict():
    return {
        "mode": "weierstrass",
        "g1": "u", "g2": "-v", "w1": "1/2", "w2": "1/2",
        "domain": {"u": [-3, 3], "v": [-3, 3]},
    }


def test_dict_round_trip(tmp_path):
    d = surface_from_dict(enneper_dict())
    path = tmp_path / "surf.json"
    save_spec(d, path)
    d2 = load_spec(path)
    assert np.allclose(evaluate(d, 1.1, -0.7), evaluate(d2, 1.1, -0.7))
    obj = json.loads(path.read_text())
    assert obj["mode"] == "weierstrass"
    assert obj["base"] == [0.0, 0.0]


def test_dict_rejects_unknown_keys():
    bad = enneper_dict()
    bad["gauss"] = "u"
    with pytest.raises(SpecFileError) as exc:
        surface_from_dict(bad)
    assert "gauss" in str(exc.value)


def test_dict_rejects_missing_and_bad_mode():
    with pytest.raises(SpecFileError):
        surface_from_dict({"mode": "weierstrass", "g1": "u",
                           "domain": {"u": [0, 1], "v": [0, 1]}})
    with pytest.raises(SpecFileError):
        surface_from_dict({"mode": "isothermal"})
    with pytest.raises(SpecFileError):
        surface_from_dict([1, 2, 3])


def test_dict_rejects_bad_domain_and_f0():
    bad = enneper_dict()
    bad["domain"] = {"u": [0, 1]}
    with pytest.raises(SpecFileError):
        surface_from_dict(bad)
    bad = enneper_dict()
    bad["f0"] = [0, 0]
    with pytest.raises(SpecFileError):
        surface_from_dict(bad)


def test_dict_wraps_expression_errors():
    bad = enneper_dict()
    bad["g1"] = "u + ("
    with pytest.raises(SpecFileError):
        surface_from_dict(bad)


def test_dict_curve_mode():
    obj = {
        "mode": "curves",
        "phi": ["u + u^5/5", "2/3*u^3", "u - u^5/5"],
        "psi": ["-v - v^5/5", "2/3*v^3", "v - v^5/5"],
        "domain": {"u": [-2, 2], "v": [-2, 2]},
        "base": [0, 0],
    }
    pair = surface_from_dict(obj)
    got = evaluate(pair, 1.0, 1.0)
    phi = np.array([1.2, 2.0 / 3.0, 0.8])
    psi = np.array([-1.2, 2.0 / 3.0, 0.8])
    assert np.allclose(got, 0.5 * (phi + psi), atol=1e-12)
    with pytest.raises(ModeUnsupported):
        surface_to_dict(pair)


def test_dict_curve_mode_rejects_non_null():
    obj = {
        "mode": "curves",
        "phi": ["u", "2*u", "0"],
        "psi": ["v", "v", "0"],
        "domain": {"u": [-1, 1], "v": [-1, 1]},
    }
    with pytest.raises(SpecFileError):
        surface_from_dict(obj)


def test_load_spec_bad_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{ not json")
    with pytest.raises(SpecFileError):
        load_spec(p)
    with pytest.raises(SpecFileError):
        load_spec(tmp_path / "missing.json")

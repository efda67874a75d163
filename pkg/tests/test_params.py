import math

import pytest

import casimir_sense as cs
from casimir_sense.params import ConfigError


def test_constants_identities():
    c = cs.CONSTANTS
    assert c.alpha == pytest.approx(
        c.e**2 / (4 * math.pi * c.eps0 * c.hbar * c.c), rel=1e-12)
    assert c.c**2 * c.eps0 * c.mu0 == pytest.approx(1.0, rel=1e-12)
    assert c.sigma0 == pytest.approx(6.085e-5, rel=1e-3)


def test_load_paper_operating_point(config_text):
    s = cs.load_scenario(config_text)
    assert s.emitter.lambda0 == pytest.approx(2e-6, rel=1e-12)
    assert s.emitter.gamma0 == pytest.approx(2 * math.pi * 240e6, rel=1e-6)
    assert s.graphene.mu == pytest.approx(0.8 * s.emitter.omega0, rel=1e-12)
    assert s.graphene.gamma_g == pytest.approx(s.emitter.omega0 / 1e3, rel=1e-12)
    assert s.mechanics.mass == 2.81e-18
    assert s.drive.epsilon == 0.3
    assert s.drive.eta_det == 0.75
    assert s.distance == 18e-9


def test_load_rejects_zero_distance(config_text):
    bad = config_text.replace("distance_m = 18e-9", "distance_m = 0")
    with pytest.raises(ConfigError, match="distance must be positive"):
        cs.load_scenario(bad)


def test_load_reports_missing_key(config_text):
    bad = config_text.replace("mass_kg = 2.81e-18\n", "")
    with pytest.raises(ConfigError, match="mechanics.mass_kg"):
        cs.load_scenario(bad)


def test_load_reports_non_numeric(config_text):
    bad = config_text.replace("epsilon = 0.3", "epsilon = strong")
    with pytest.raises(ConfigError, match="drive.epsilon"):
        cs.load_scenario(bad)


def test_thermal_occupation_at_one_kelvin():
    m = cs.MechanicalParams(omega_m=2 * math.pi * 1e6, mass=2.81e-18,
                            quality=5e4, t_bath=1.0)
    # kB * 1 K / (hbar * 2pi MHz), CODATA values
    assert m.n_th == pytest.approx(20836.619136, rel=1e-9)
    assert m.x_zpm**2 * m.mass * m.omega_m == pytest.approx(cs.CONSTANTS.hbar,
                                                            rel=1e-12)
    assert m.gamma == pytest.approx(m.omega_m / m.quality, rel=1e-15)


def test_natural_units_values(ref_scenario):
    n = cs.natural_units(ref_scenario)
    assert n.distance == pytest.approx(18e-9 * 2 * math.pi / 2e-6, rel=1e-12)
    assert n.distance == pytest.approx(0.05655, rel=1e-3)
    assert n.gamma0 == pytest.approx(1.601e-6, rel=1e-3)
    assert n.mu == 0.8


def test_natural_si_round_trip(ref_scenario):
    n = cs.natural_units(ref_scenario)
    back = cs.si_units(n)
    for attr in ("distance",):
        assert getattr(back, attr) == pytest.approx(getattr(ref_scenario, attr),
                                                    rel=1e-12)
    assert back.emitter.omega0 == pytest.approx(ref_scenario.emitter.omega0, rel=1e-12)
    assert back.emitter.gamma0 == pytest.approx(ref_scenario.emitter.gamma0, rel=1e-12)
    assert back.graphene.mu == pytest.approx(ref_scenario.graphene.mu, rel=1e-12)
    assert back.graphene.gamma_g == pytest.approx(ref_scenario.graphene.gamma_g,
                                                  rel=1e-12)
    assert back.mechanics.omega_m == pytest.approx(ref_scenario.mechanics.omega_m,
                                                   rel=1e-12)
    assert back.mechanics.t_bath == pytest.approx(ref_scenario.mechanics.t_bath,
                                                  rel=1e-12)
    again = cs.natural_units(back)
    assert again == cs.natural_units(ref_scenario)


def test_config_round_trip(ref_scenario):
    text = cs.scenario_to_config(ref_scenario)
    s = cs.load_scenario(text)
    assert s == ref_scenario


def test_drive_validation():
    with pytest.raises(ConfigError):
        cs.DriveParams(epsilon=0.0, eta_det=0.5)
    with pytest.raises(ConfigError):
        cs.DriveParams(epsilon=0.3, eta_det=1.5)
    with pytest.raises(ConfigError):
        cs.DriveParams(epsilon=0.3, eta_det=0.5, rabi=1e8)


def test_rabi_detuning_parsed(config_text):
    text = config_text.replace(
        "eta_det = 0.75", "eta_det = 0.75\nrabi_rad_s = 1e9\ndetuning_rad_s = 0.0")
    s = cs.load_scenario(text)
    assert s.drive.rabi == 1e9
    assert s.drive.detuning == 0.0

"""Smoke tests for the python bindings."""

import math

import pytest

import semigen


def test_named_function_eval():
    f = semigen.named_function("halfplane", order=256)
    z = 0.3 + 0.1j
    expected = z * (1 + z) / (1 - z)
    assert abs(f(z) - expected) < 1e-12


def test_membership_split():
    # The default grid reaches |z| = 0.999, where the halfplane functional's
    # true minimum is ~5e-4; order 16384 keeps the truncation tail below 1e-7.
    assert semigen.check_a_beta(semigen.named_function("halfplane", order=16384), 1.0)["member"]
    assert not semigen.check_a_beta(
        semigen.named_function("starlike_non_generator", order=16384), 1.0
    )["member"]


def test_kappa_endpoints():
    assert semigen.kappa(1.0) == 0.0
    assert abs(semigen.kappa(0.0) - (2 * math.log(2) - 1)) < 1e-9


def test_radius_closed_form():
    res = semigen.radius(1.0, "parabolic")
    assert res["r"] == pytest.approx(math.sqrt(5) - 2, abs=1e-9)


def test_flow_decays():
    f = semigen.named_function("halfplane", order=256)
    out = semigen.integrate(f, 0.5 + 0.0j, 2.0, samples=16)
    assert not out["escaped"]
    mods = [abs(u) for u in out["points"]]
    assert mods == sorted(mods, reverse=True)
    assert mods[-1] < 0.5


def test_decay_rates():
    assert semigen.decay_rate_janowski(0.0, -1.0) == pytest.approx(0.5)
    assert semigen.decay_rate_u(0.25) == pytest.approx(2.0 / 9.0)

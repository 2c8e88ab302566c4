import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from abvortex import (ExtensionSpec, NoRootError, NonpositiveEnergyError, WrongChannelError,
                      bound_state_factor, decompose_flux, delta_correction,
                      find_resonance_numeric, resonance_energy, standard_phase_shift,
                      total_phase_shift)
from abvortex.phase import channel_exponent, correction_angle, resonance_bracket


@pytest.mark.parametrize("l, alpha, expected", [
    (0, 0.0, 0.0), (0, 0.5, -math.pi / 4), (-1, 0.25, math.pi / 8)])
def test_standard_phase_shift(l, alpha, expected):
    assert standard_phase_shift(l, alpha) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("l, energy, expected", [(0, 1.0, 1.0), (0, 16.0, 2.0), (-1, 16.0, 8.0)])
def test_bound_state_factor(l, energy, expected):
    flux = decompose_flux(0.25)
    assert bound_state_factor(l, flux, energy, ExtensionSpec(1.0, 1.0)) == pytest.approx(expected, rel=1e-15)


def test_bound_state_factor_absent_and_wrong_channel():
    flux = decompose_flux(1.25)
    assert bound_state_factor(-2, flux, 3.0, ExtensionSpec(1.0)) is None
    with pytest.raises(WrongChannelError):
        bound_state_factor(0, flux, 3.0, ExtensionSpec(1.0))


def test_correction_absent_is_zero():
    flux = decompose_flux(0.25)
    assert delta_correction(0, flux, 3.0, ExtensionSpec()) == 0.0
    assert delta_correction(-1, flux, 3.0, ExtensionSpec(1.0)) == 0.0


def test_correction_at_resonance():
    flux = decompose_flux(0.25)
    assert delta_correction(0, flux, 4.0, ExtensionSpec(1.0)) == pytest.approx(math.pi / 2, abs=1e-14)


def test_correction_integer_flux_is_zero():
    for alpha in (0.0, 3.0, -2.0):
        flux = decompose_flux(alpha)
        for l in flux.modified_channels:
            assert delta_correction(l, flux, 2.0, ExtensionSpec(1.0, 0.5)) == 0.0


def test_correction_rejects_nonpositive_energy():
    with pytest.raises(NonpositiveEnergyError):
        delta_correction(0, decompose_flux(0.25), 0.0, ExtensionSpec(1.0))


@pytest.mark.parametrize("alpha, e_n, e_n1, energy", [
    (0.25, 1.0, 2.0, 2.0), (0.6, 0.7, 1.5, 1.3), (1.4, 3.0, 0.2, 0.8), (-0.3, 0.01, 50.0, 7.0)])
def test_correction_matches_mpmath(alpha, e_n, e_n1, energy):
    flux = decompose_flux(alpha)
    spec = ExtensionSpec(e_n, e_n1)
    for offset, e_b in ((0, e_n), (1, e_n1)):
        got = delta_correction(-flux.n - offset, flux, energy, spec)
        assert got == pytest.approx(float(oracles.correction(alpha, e_b, energy, offset)), abs=1e-13)


def test_total_phase_shift_unmodified_channel():
    flux = decompose_flux(0.25)
    ph = total_phase_shift(5, flux, 2.0, ExtensionSpec(1.0, 1.0))
    assert ph.correction == 0.0 and ph.total == ph.delta0 == standard_phase_shift(5, 0.25)


def test_total_phase_shift_examples():
    flux = decompose_flux(0.25)
    assert total_phase_shift(0, flux, 2.0, ExtensionSpec()).total == standard_phase_shift(0, 0.25)
    ph = total_phase_shift(0, flux, 4.0, ExtensionSpec(1.0))
    assert ph.total == pytest.approx(standard_phase_shift(0, 0.25) + math.pi / 2, abs=1e-14)


@given(st.floats(-5, 5), st.integers(-8, 8), st.floats(0.01, 100), st.floats(0.01, 100))
def test_channel_phase_invariants(alpha, l, energy, e_bound):
    flux = decompose_flux(alpha)
    ph = total_phase_shift(l, flux, energy, ExtensionSpec(e_bound, 2 * e_bound))
    assert ph.total == ph.delta0 + ph.correction
    assert abs(abs(ph.s_element) - 1.0) <= 1e-12
    if l not in flux.modified_channels:
        assert ph.correction == 0.0


@given(st.floats(-50, 50))
def test_channel_exponents(alpha):
    flux = decompose_flux(alpha)
    assert channel_exponent(-flux.n, flux) == flux.eta
    assert channel_exponent(-flux.n - 1, flux) == 1.0 - flux.eta


@given(st.floats(0.01, 0.99), st.floats(1e-3, 1e3))
def test_correction_branch_range(p, inv):
    # positive numerator: the angle lies in (0, pi) and is continuous
    assert 0.0 < correction_angle(p, inv) < math.pi


def test_conventional_limit_invariant():
    """|Delta_l| <= 1e-6 (taken mod pi) once |E_l| >= 1e8 E, as stated for the module.

    Fails for eta far from 0 or 1: Delta ~ sin(p pi) (E/|E_l|)**p, which is
    1e-8**0.25 ~ 1e-2 at p = 1/4.
    """
    worst = 0.0
    for alpha in (0.25, 0.5, 0.75):
        flux = decompose_flux(alpha)
        for l in flux.modified_channels:
            d = delta_correction(l, flux, 1.0, ExtensionSpec(1e8, 1e8))
            worst = max(worst, abs(math.remainder(d, math.pi)))
    assert worst <= 1e-6


@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.5, 0.75, 0.9])
def test_limits_approach_at_power_rate(alpha):
    flux = decompose_flux(alpha)
    for l in flux.modified_channels:
        p = channel_exponent(l, flux)
        for x in (1e-3, 1e-6):
            ratio = x ** (-1.0 / p)
            conv = abs(math.remainder(delta_correction(l, flux, 1.0, ExtensionSpec(ratio, ratio)), math.pi))
            assert conv == pytest.approx(math.sin(p * math.pi) * x, rel=1e-2)
            ph = total_phase_shift(l, flux, 1.0, ExtensionSpec(1 / ratio, 1 / ratio))
            flip = abs(ph.s_element - cmath.exp(-2j * ph.delta0))
            assert flip == pytest.approx(2 * math.sin(p * math.pi) * x, rel=1e-2)


# -- resonances ---------------------------------------------------------------

@pytest.mark.parametrize("eta, e_n, expected", [(0.25, 1.0, 4.0), (1 / 3, 2.0, 16.0)])
def test_resonance_closed_form(eta, e_n, expected):
    res = resonance_energy(decompose_flux(eta), ExtensionSpec(e_n))
    assert res.energy == pytest.approx(expected, rel=1e-14)
    assert res.channel == 0


@pytest.mark.parametrize("eta, e_n, bracket, expected, tol", [
    (0.25, 1.0, (1.0, 10.0), 4.0, 1e-9), (1 / 3, 2.0, (2.0, 100.0), 16.0, 1e-8)])
def test_resonance_numeric(eta, e_n, bracket, expected, tol):
    flux = decompose_flux(eta)
    e = find_resonance_numeric(flux, ExtensionSpec(e_n), 0, bracket)
    # the same numbers from a 50-digit bisection on Delta itself
    assert float(oracles.resonance_bisection(eta, e_n, *bracket)) == pytest.approx(expected, abs=1e-12)
    assert abs(e - expected) <= tol
    d = delta_correction(0, flux, e, ExtensionSpec(e_n))
    assert abs(math.remainder(d - math.pi / 2, math.pi)) < 1e-10


def test_resonance_no_root():
    with pytest.raises(NoRootError):
        find_resonance_numeric(decompose_flux(0.25), ExtensionSpec(1.0), 0, (5.0, 6.0))


def test_resonance_diverges_towards_half():
    energies = [resonance_energy(decompose_flux(eta), ExtensionSpec(1.0)).energy
                for eta in (0.45, 0.49, 0.499, 0.4999)]
    assert all(a < b for a, b in zip(energies, energies[1:]))
    assert energies[-1] > 1e7


@pytest.mark.parametrize("eta", [0.0, 0.5, 0.75])
def test_resonance_outside_region_is_explicit(eta):
    res = resonance_energy(decompose_flux(eta), ExtensionSpec(1.0, 1.0))
    assert res.energy is None and not res
    assert "eta" in res.reason


def test_resonance_upper_channel_numeric():
    # 1/2 < eta < 1: the l=-n-1 denominator cos((1-eta) pi) - 1/A vanishes
    flux = decompose_flux(1.75)
    spec = ExtensionSpec(None, 1.0)
    e = find_resonance_numeric(flux, spec, -2, resonance_bracket(flux, spec, -2))
    assert e == pytest.approx(float(oracles.resonance_bisection(1.75, 1.0, 1, 100, channel_offset=1)), rel=1e-12)


def test_resonance_grid_agrees():
    for eta in np.arange(0.05, 0.46, 0.05):
        for e_n in (0.5, 1.0, 2.0):
            flux, spec = decompose_flux(float(eta)), ExtensionSpec(e_n)
            closed = resonance_energy(flux, spec).energy
            numeric = find_resonance_numeric(flux, spec, -flux.n, resonance_bracket(flux, spec, 0))
            assert abs(closed - numeric) / closed <= 1e-8

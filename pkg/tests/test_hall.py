import math
import warnings

import numpy as np
import pytest

import oracles
from abvortex import (ExtensionSpec, InvalidInputError, Kinematics, UnitSystem, corrections,
                      decompose_flux, hall_resistivity, hall_sweep)
from abvortex.flux import IntegerFluxWarning
from abvortex.hall import hall_from_corrections

GOLDEN_RHO = 0.015655404664993377150469405941551722212232196084532  # mpmath, n_v/n_e = 0.01


def test_integer_flux_gives_zero():
    res = hall_resistivity(1.0, 1.0, decompose_flux(2.0), 1.0, ExtensionSpec(1.0, 1.0))
    assert res.rho_xy == 0.0 and res.rho_xy_quadrature == 0.0


def test_conventional_vortices_give_zero():
    res = hall_resistivity(1.0, 1.0, decompose_flux(0.3), 1.0, ExtensionSpec())
    assert res.rho_xy == 0.0 and abs(res.rho_xy_quadrature) < 1e-15


def test_golden_point():
    res = hall_resistivity(0.01, 1.0, decompose_flux(0.25), 2.0, ExtensionSpec(1.0))
    assert res.rho_xy == pytest.approx(GOLDEN_RHO, rel=1e-13)
    assert res.rho_xy_quadrature == pytest.approx(GOLDEN_RHO, rel=1e-10)
    assert (res.n_v, res.n_e) == (0.01, 1.0)


@pytest.mark.parametrize("alpha, e_n, e_n1, energy", [
    (0.6, 0.7, 1.5, 1.3), (1.4, 3.0, 0.2, 0.8), (-0.35, 0.4, 2.5, 5.0)])
def test_matches_mpmath(alpha, e_n, e_n1, energy):
    dn = oracles.correction(alpha, e_n, energy, 0)
    dn1 = oracles.correction(alpha, e_n1, energy, 1)
    res = hall_resistivity(0.2, 3.0, decompose_flux(alpha), energy, ExtensionSpec(e_n, e_n1))
    assert res.rho_xy == pytest.approx(float(oracles.hall(0.2 / 3.0, alpha, dn, dn1)), rel=1e-12)


def test_linearity_in_densities():
    flux, spec = decompose_flux(0.25), ExtensionSpec(1.0, 2.0)
    base = hall_resistivity(1.0, 1.0, flux, 2.0, spec).rho_xy
    assert hall_resistivity(4.0, 1.0, flux, 2.0, spec).rho_xy == 4.0 * base
    assert hall_resistivity(1.0, 4.0, flux, 2.0, spec).rho_xy == base / 4.0
    assert hall_resistivity(3.0, 3.0, flux, 2.0, spec).rho_xy == base


def test_mirror_antisymmetry():
    # alpha -> -alpha with the channel energies exchanged negates rho_xy
    for alpha, spec in ((0.25, ExtensionSpec(1.0)), (0.6, ExtensionSpec(0.7, 1.5)),
                        (1.4, ExtensionSpec(3.0, 0.2))):
        a = hall_resistivity(1.0, 1.0, decompose_flux(alpha), 1.3, spec)
        b = hall_resistivity(1.0, 1.0, decompose_flux(-alpha), 1.3, spec.swapped())
        assert b.rho_xy == pytest.approx(-a.rho_xy, rel=1e-12)
        assert b.rho_xy_quadrature == pytest.approx(-a.rho_xy_quadrature, rel=1e-10)


def test_branch_invariance():
    flux = decompose_flux(0.6)
    dn, dn1 = corrections(flux, 1.3, ExtensionSpec(0.7, 1.5))
    base = hall_from_corrections(1.0, 1.0, flux, dn, dn1).rho_xy
    for a, b in ((dn + math.pi, dn1), (dn, dn1 + math.pi), (dn - math.pi, dn1 - math.pi)):
        assert abs(hall_from_corrections(1.0, 1.0, flux, a, b).rho_xy - base) <= 1e-12 * abs(base)


def test_quadrature_identity_grid():
    for eta in np.linspace(0.1, 0.9, 5):
        for energy in np.geomspace(0.1, 10.0, 5):
            res = hall_resistivity(0.01, 1.0, decompose_flux(float(eta)), float(energy),
                                   ExtensionSpec(1.0, 2.0))
            assert abs(res.rho_xy - res.rho_xy_quadrature) <= max(1e-8, 1e-6 * abs(res.rho_xy))


def test_explicit_units():
    flux, spec = decompose_flux(0.25), ExtensionSpec(1.0)
    kin = Kinematics(2.0, mass=3.0, hbar=0.5, unit_system=UnitSystem.EXPLICIT)
    res = hall_resistivity(0.01, 1.0, flux, 2.0, spec, kinematics=kin, hc2_over_e2=2.5)
    assert res.rho_xy == pytest.approx(2.5 * GOLDEN_RHO, rel=1e-13)
    assert res.rho_xy_quadrature == pytest.approx(2.5 * GOLDEN_RHO, rel=1e-10)


def test_rejects_bad_density():
    with pytest.raises(InvalidInputError):
        hall_resistivity(0.0, 1.0, decompose_flux(0.3), 1.0, ExtensionSpec(1.0))
    with pytest.raises(InvalidInputError):
        hall_resistivity(1.0, -1.0, decompose_flux(0.3), 1.0, ExtensionSpec(1.0))


def test_sweep_integer_flux_zero():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegerFluxWarning)
        out = hall_sweep(1.0, 1.0, [-1.0, 0.0, 1.0, 2.0], 2.0, ExtensionSpec(1.0, 1.0))
    assert [a for a, _ in out] == [-1.0, 0.0, 1.0, 2.0]
    assert all(r.rho_xy == 0.0 for _, r in out)


def test_sweep_periodic_and_ordered(monkeypatch):
    monkeypatch.setenv("AB_VORTEX_THREADS", "4")
    alphas = list(np.linspace(0.05, 0.95, 10))
    spec = ExtensionSpec(1.0, 0.5)
    a = hall_sweep(1.0, 1.0, alphas, 2.0, spec)
    b = hall_sweep(1.0, 1.0, [x + 1.0 for x in alphas], 2.0, spec)
    assert [x for x, _ in a] == alphas
    for (_, ra), (_, rb) in zip(a, b):
        assert abs(ra.rho_xy - rb.rho_xy) <= 1e-12 * abs(ra.rho_xy)


def test_sweep_with_rule():
    rule = lambda flux: ExtensionSpec(1.0 + flux.eta)
    out = hall_sweep(1.0, 1.0, [0.2, 0.4], 2.0, rule)
    direct = hall_resistivity(1.0, 1.0, decompose_flux(0.4), 2.0, ExtensionSpec(1.4))
    assert out[1][1].rho_xy == direct.rho_xy


def test_sweep_rejects_empty_and_bad_threads(monkeypatch):
    with pytest.raises(InvalidInputError):
        hall_sweep(1.0, 1.0, [], 2.0, ExtensionSpec())
    monkeypatch.setenv("AB_VORTEX_THREADS", "0")
    with pytest.raises(InvalidInputError):
        hall_sweep(1.0, 1.0, [0.3], 2.0, ExtensionSpec())

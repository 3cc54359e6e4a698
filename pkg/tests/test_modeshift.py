import math

import numpy as np
import pytest

from bathlab import numerics
from bathlab.bath import Drude, StrictOhmic
from bathlab.errors import DomainError
from bathlab.modeshift import (
    DensityShift,
    characteristic_frequencies,
    delta_rho,
    delta_rho_generic,
    delta_rho_lorentzian,
    g,
    g_by_quadrature,
    lorentzian_components,
)


class TestCharacteristicFrequencies:
    def test_real_pair(self):
        fr = characteristic_frequencies(1.0, 5.0)
        assert fr.omega1 == pytest.approx(3.618033988749895, abs=1e-12)
        assert fr.omega2 == pytest.approx(1.3819660112501053, abs=1e-12)
        assert fr.is_real_pair
        assert (fr.omega1 * fr.omega2).real == pytest.approx(5.0, abs=1e-12)

    def test_double_root(self):
        fr = characteristic_frequencies(1.0, 4.0)
        assert fr.omega1 == pytest.approx(2.0)
        assert fr.omega2 == pytest.approx(2.0)

    def test_complex_branch(self):
        fr = characteristic_frequencies(1.0, 0.1)
        assert fr.omega1 == pytest.approx(0.05 + 0.3122498999199199j, abs=1e-12)
        assert fr.omega2 == pytest.approx(0.05 - 0.3122498999199199j, abs=1e-12)
        assert not fr.is_real_pair

    @pytest.mark.parametrize("omega_d", [0.1, 1.0, 3.9, 4.0, 4.1, 5.0, 50.0])
    def test_vieta_identities(self, omega_d):
        fr = characteristic_frequencies(1.0, omega_d)
        assert abs(fr.omega1 + fr.omega2 - omega_d) <= 1e-13 * omega_d
        assert abs(fr.omega1 * fr.omega2 - omega_d) <= 1e-13 * omega_d
        if omega_d >= 4.0:
            assert fr.omega1.imag == 0.0 and fr.omega1.real > 0
            assert fr.omega2.imag == 0.0 and fr.omega2.real > 0
        else:
            assert fr.omega2 == fr.omega1.conjugate()
            assert fr.omega1.real == pytest.approx(omega_d / 2)

    def test_gamma_recovery(self):
        assert characteristic_frequencies(1.0, 0.7).gamma == pytest.approx(1.0)


class TestG:
    def test_reduced_form_values(self):
        assert g(Drude(1.0, 1.0), 1.0) == pytest.approx(1.0)
        assert g(Drude(1.0, 5.0), 2.0) == pytest.approx(1.92)

    def test_infrared_limit(self):
        for sd in (Drude(1.0, 0.3), StrictOhmic(1.0)):
            assert abs(g(sd, 1e-6)) < 1e-5

    @pytest.mark.parametrize("omega_d", [0.1, 5.0])
    def test_quadrature_path_agrees(self, omega_d):
        sd = Drude(1.0, omega_d)
        for w in (0.3, 1.0, 2.5):
            assert g_by_quadrature(sd, w) == pytest.approx(g(sd, w), abs=1e-7)

    def test_strict_ohmic(self):
        assert g(StrictOhmic(2.0), 3.0) == pytest.approx(1.5)
        assert g_by_quadrature(StrictOhmic(2.0), 3.0) == pytest.approx(1.5, abs=1e-8)


class TestDeltaRho:
    def test_zero_frequency_values(self):
        assert delta_rho(Drude(1.0, 5.0), 0.0) == pytest.approx(
            0.25464790894703254, abs=1e-10
        )
        assert delta_rho(Drude(1.0, 1.0), 0.0) == pytest.approx(0.0, abs=1e-14)
        assert delta_rho(Drude(1.0, 0.1), 0.0) == pytest.approx(
            -2.864788975654116, abs=1e-9
        )

    def test_generic_path_agrees(self):
        sd = Drude(1.0, 5.0)
        for w in (0.5, 2.0, 7.0):
            assert delta_rho_generic(sd, w) == pytest.approx(
                delta_rho(sd, w), abs=1e-8
            )

    def test_strict_ohmic_single_lorentzian(self):
        sd = StrictOhmic(1.5)
        w = np.linspace(0, 5, 11)
        expected = 1.5 / (math.pi * (1.5**2 + w * w))
        assert delta_rho(sd, w) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("omega_d", [0.1, 1.0, 5.0])
    def test_lorentzian_decomposition_identity(self, omega_d):
        sd = Drude(1.0, omega_d)
        fr = characteristic_frequencies(1.0, omega_d)
        grid = np.geomspace(1e-3, 1e3, 50)
        a = delta_rho(sd, grid)
        b = delta_rho_lorentzian(fr, grid)
        assert np.all(np.abs(a - b) <= 1e-10 * np.maximum(1.0, np.abs(a)))

    @pytest.mark.parametrize("omega_d", [0.1, 1.0, 5.0])
    def test_zero_frequency_law(self, omega_d):
        # lim delta_rho = (1/pi)(1 + gamma_hat'(0))/gamma_hat(0)
        sd = Drude(1.0, omega_d)
        expected = (1.0 + sd.gamma_hat_prime_zero()) / (math.pi * sd.gamma_hat(0.0))
        assert delta_rho(sd, 0.0) == pytest.approx(expected, abs=1e-8)

    def test_large_frequency_tail(self):
        # Omega^4 * delta_rho -> 3*gamma*wd^2/pi
        fr = characteristic_frequencies(1.0, 5.0)
        w = 1e3
        assert w**4 * delta_rho_lorentzian(fr, w) == pytest.approx(
            75.0 / math.pi, rel=1e-4
        )

    @pytest.mark.parametrize("omega_d", [0.1, 1.0, 5.0])
    def test_sum_rule(self, omega_d):
        sd = Drude(1.0, omega_d)
        val = numerics.integrate_semi_infinite(
            lambda w: delta_rho(sd, w), breakpoints=(0.1, omega_d, 1.0)
        )
        assert val == pytest.approx(0.5, abs=1e-6)

    def test_sign_structure(self):
        # for omega_d < gamma the shift is negative below the g' zero at
        # sqrt((gamma*wd - wd^2)/3) and positive above it
        crossing = math.sqrt((0.1 - 0.01) / 3.0)
        low = np.linspace(1e-4, crossing - 1e-3, 50)
        high = np.linspace(crossing + 1e-3, 1.0, 50)
        assert np.all(delta_rho(Drude(1.0, 0.1), low) < 0)
        assert np.all(delta_rho(Drude(1.0, 0.1), high) > 0)
        grid = np.linspace(1e-4, 0.2, 60)
        assert np.all(delta_rho(Drude(1.0, 5.0), grid) > 0)


class TestLorentzianComponents:
    def test_real_branch_values(self):
        fr = characteristic_frequencies(1.0, 5.0)
        c1, c2, c3 = lorentzian_components(fr, 0.0)
        assert c1 == pytest.approx(0.08797868875017763, abs=1e-12)
        assert c2 == pytest.approx(0.23033119743361305, abs=1e-12)
        assert c3 == pytest.approx(-0.06366197723675814, abs=1e-12)
        assert c1 + c2 + c3 == pytest.approx(0.25464790894703254, abs=1e-13)

    def test_sum_equals_total(self):
        fr = characteristic_frequencies(1.0, 5.0)
        c1, c2, c3 = lorentzian_components(fr, 2.0)
        total = delta_rho_lorentzian(fr, 2.0)
        assert abs(c1 + c2 + c3 - total) <= 1e-13

    def test_complex_branch_pairing(self):
        fr = characteristic_frequencies(1.0, 0.1)
        c1, c2, c3 = lorentzian_components(fr, 0.0)
        # conjugate-pair algebra: 1/w1 + 1/w2 = 1/gamma
        assert c1 == pytest.approx(1.0 / math.pi, abs=1e-12)
        assert c2 == 0.0
        assert c3 == pytest.approx(-10.0 / math.pi, abs=1e-12)
        assert c1 + c2 + c3 == pytest.approx(-2.864788975654116, abs=1e-12)

    def test_vectorized(self):
        fr = characteristic_frequencies(1.0, 0.5)
        grid = np.linspace(0.0, 3.0, 7)
        c1, c2, c3 = lorentzian_components(fr, grid)
        assert np.allclose(c1 + c2 + c3, delta_rho_lorentzian(fr, grid), atol=1e-14)


class TestDensityShift:
    def test_callable(self):
        shift = DensityShift(Drude(1.0, 5.0))
        assert shift(0.0) == pytest.approx(0.25464790894703254, abs=1e-10)

    def test_components_requires_drude(self):
        with pytest.raises(DomainError):
            DensityShift(StrictOhmic(1.0)).components(1.0)

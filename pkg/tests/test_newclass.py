# flake8: noqa pylint: disable=W,C,R

import cmath
import math

import mpmath
import pytest

from hyperwave.config import EvalOptions
from hyperwave.exceptions import DomainError, NonFiniteError
from hyperwave.newclass import (
    SATURATION_TAU,
    antiderivative,
    arcsin_tanh,
    g_k,
    ode_residual_newclass,
    profile,
    y_newclass,
    y_newclass_tilde,
)
from hyperwave.specs import NewClassSpec


class TestArcsinTanh:
    """arcsin(tanh tau) across the saturation point"""

    @pytest.mark.parametrize("tau", [-5.0, -0.3, 0.0, 1.1, 5.0])
    def test_matches_asin(self, tau):
        assert arcsin_tanh(tau) == pytest.approx(math.asin(math.tanh(tau)), abs=1e-13)

    @pytest.mark.parametrize("tau", [-40.0, -25.0, -19.5, 19.5, 25.0, 40.0])
    def test_matches_arctan_form(self, tau):
        assert arcsin_tanh(tau) == pytest.approx(2.0 * math.atan(math.exp(tau)) - math.pi / 2.0, abs=1e-14)

    def test_continuous_at_saturation(self):
        below = arcsin_tanh(SATURATION_TAU)
        above = arcsin_tanh(math.nextafter(SATURATION_TAU, math.inf))
        assert above == pytest.approx(below, abs=1e-14)

    def test_limit(self):
        assert arcsin_tanh(1000.0) == pytest.approx(math.pi / 2.0)
        assert arcsin_tanh(-1000.0) == pytest.approx(-math.pi / 2.0)


class TestAntiderivative:
    """Closed forms of int_0^x (1-t^2)^(k-1/2) dt"""

    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
    @pytest.mark.parametrize("x", [-0.8, 0.3, 0.95])
    def test_against_quadrature(self, k, x):
        with mpmath.workdps(30):
            expected = float(mpmath.quad(lambda t: (1 - t ** 2) ** (k - mpmath.mpf(1) / 2), [0, x]))
        assert antiderivative(k, x) == pytest.approx(expected, rel=1e-12, abs=1e-14)

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    @pytest.mark.parametrize("x", [-0.8, 0.3, 0.95])
    def test_forms_agree(self, k, x):
        assert antiderivative(k, x, "a") == pytest.approx(antiderivative(k, x, "b"), rel=1e-13, abs=1e-15)

    def test_outside_interval(self):
        with pytest.raises(DomainError):
            antiderivative(1, 1.0)

    def test_unknown_form(self):
        with pytest.raises(DomainError):
            antiderivative(3, 0.2, "c")


class TestNewClassFunctions:
    """The m = +-k family"""

    def test_constant_branch_k0(self):
        assert y_newclass(NewClassSpec(0, alpha=1.0, beta=0.0), 2.0, 1.0) == pytest.approx(1.0)

    def test_arcsin_branch_k0(self):
        assert profile(NewClassSpec(0), 0.7) == pytest.approx(math.asin(math.tanh(0.7)), abs=1e-14)

    def test_constant_branch_k1_is_cosh(self):
        value = y_newclass(NewClassSpec(1, 1.0, 0.0), 0.8, 0.4)
        assert value == pytest.approx(cmath.exp(0.4j) * math.cosh(0.8), rel=1e-14)

    def test_g_k_matches_profile(self):
        spec = NewClassSpec(2, 0.5, 1.5)
        tau = 0.6
        assert g_k(spec, math.tanh(tau)) == pytest.approx(profile(spec, tau), rel=1e-12)

    def test_g_k_domain(self):
        with pytest.raises(DomainError):
            g_k(NewClassSpec(1), -1.0)

    def test_tilde_is_mirror(self):
        tau, phi = 0.9, 1.3
        expected = cmath.exp(-4j * phi) * y_newclass(NewClassSpec(2), tau, phi)
        assert y_newclass_tilde(2, tau, phi) == pytest.approx(expected, rel=1e-14)

    def test_large_tau_arcsin_branch(self):
        assert profile(NewClassSpec(0), 30.0) == pytest.approx(math.pi / 2.0, rel=1e-12)

    @pytest.mark.parametrize("tau", [400.0, 800.0, 1000.0])
    def test_arcsin_branch_far_out(self, tau):
        assert y_newclass(NewClassSpec(0), tau, 0.0).real == pytest.approx(math.pi / 2.0, rel=1e-15)
        assert y_newclass(NewClassSpec(0), -tau, 0.0).real == pytest.approx(-math.pi / 2.0, rel=1e-15)

    def test_growth_overflow(self):
        assert math.isfinite(profile(NewClassSpec(1, 1.0, 0.0), 400.0))
        with pytest.raises(NonFiniteError):
            profile(NewClassSpec(1, 1.0, 0.0), 800.0)

    def test_growth(self):
        # not square integrable: grows like cosh^k
        assert abs(profile(NewClassSpec(2), 10.0)) > abs(profile(NewClassSpec(2), 5.0)) * 100

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    @pytest.mark.parametrize("alpha, beta", [(1.0, 0.0), (0.0, 1.0), (0.7, -0.4)])
    @pytest.mark.parametrize("tau", [-1.2, 0.3, 1.2])
    def test_ode(self, k, alpha, beta, tau):
        spec = NewClassSpec(k, alpha, beta)
        assert ode_residual_newclass(spec, tau, EvalOptions()) < 1e-5

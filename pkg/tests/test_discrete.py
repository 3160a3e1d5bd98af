# flake8: noqa pylint: disable=W,C,R

import cmath
import math

import pytest
import sympy as sp

from hyperwave.config import EvalOptions
from hyperwave.discrete import (
    RECURRENCE_IDS,
    assoc_p,
    first_weights,
    hypergeometric_ode_residual,
    lowest_weight_norm,
    recurrence_residual,
    recurrence_terms,
    volume_function,
    y_dminus,
    y_dminus_hypergeometric,
    y_dplus,
    y_dplus_hypergeometric,
)
from hyperwave.exceptions import DomainError
from hyperwave.specs import DiscreteSpec, parse_rational
from tests.config import DISCRETE_WEIGHTS, INV_SQRT2_PI, PHIS, TAUS


@pytest.fixture
def opts():
    return EvalOptions()


x = sp.Symbol("x", real=True)


def rodrigues_p(k, m):
    """(-1)^n 2^k G(k+1) (1+x^2)^(m/2) d^n/dx^n (1+x^2)^-(k+1), n = m - k - 1."""
    k, m = sp.Rational(k), sp.Rational(m)
    n = int(m - k - 1)
    base = (1 + x ** 2) ** (-(k + 1))
    core = sp.diff(base, x, n) if n else base
    return (-1) ** n * 2 ** k * sp.gamma(k + 1) * (1 + x ** 2) ** (m / 2) * core


class TestNormalization:
    """Lowest-weight constants and the normalized finite sum"""

    def test_k0(self):
        assert lowest_weight_norm(0) == pytest.approx(INV_SQRT2_PI, rel=1e-14)

    def test_k1(self):
        assert lowest_weight_norm(1) == pytest.approx(1.0 / math.pi, rel=1e-14)

    @pytest.mark.parametrize("k", range(7))
    def test_integer_k_closed_form(self, k):
        # c_k = sqrt((2k)!! / (2k-1)!!) / (sqrt2 pi)
        even = math.prod(range(2 * k, 0, -2))
        odd = math.prod(range(2 * k - 1, 0, -2))
        expected = math.sqrt(even / odd) / (math.sqrt(2.0) * math.pi)
        assert lowest_weight_norm(k) == pytest.approx(expected, rel=1e-14)

    def test_minus_half_not_normalizable(self):
        with pytest.raises(DomainError, match="not square integrable"):
            lowest_weight_norm("-1/2")

    def test_y_minus_half_raises(self):
        with pytest.raises(DomainError):
            y_dplus("-1/2", "1/2", 0.0, 0.0)

    @pytest.mark.parametrize("k", ["0", "1/2", "1", "2", "3"])
    @pytest.mark.parametrize("tau", TAUS)
    def test_lowest_weight_profile(self, k, tau):
        spec = DiscreteSpec(k, parse_rational(k) + 1)
        phi = 0.9
        expected = lowest_weight_norm(k) * cmath.exp(1j * float(spec.m) * phi) / math.cosh(tau) ** float(spec.m)
        assert abs(y_dplus(spec.k, spec.m, tau, phi) - expected) <= 1e-13 * abs(expected)

    def test_waist_value(self):
        assert y_dplus(0, 1, 0.0, 0.0).real == pytest.approx(0.2250791, abs=1e-7)

    def test_large_tau_does_not_overflow(self):
        value = y_dplus(2, 9, 800.0, 0.3)
        assert math.isfinite(value.real) and abs(value) < 1e-300


class TestLegendreAnalogue:
    """Finite sum P^m_k and its recurrences"""

    def test_lowest(self):
        for at in (-2.0, 0.0, 0.5):
            assert assoc_p(0, 1, at) == pytest.approx(1.0 / math.sqrt(1.0 + at * at), rel=1e-14)

    def test_p_2_0(self):
        assert assoc_p(0, 2, 0.8) == pytest.approx(1.6 / 1.64, rel=1e-14)

    def test_minus_half_is_defined(self):
        assert assoc_p("-1/2", "1/2", 0.0) == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-14)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            assoc_p(0, 1, float("inf"))

    @pytest.mark.parametrize("identity", RECURRENCE_IDS)
    @pytest.mark.parametrize("k, m", [("1", "3"), ("1/2", "5/2"), ("2", "5")])
    @pytest.mark.parametrize("at", [-1.7, 0.3, 2.4])
    def test_recurrences(self, identity, k, m, at):
        terms = recurrence_terms(identity, k, m, at)
        assert terms.residual <= 1e-10 * terms.scale

    @pytest.mark.parametrize("identity", ["raise", "three-term", "lower", "ode"])
    def test_recurrences_at_lowest_weight(self, identity):
        terms = recurrence_terms(identity, "1", "2", 0.4)
        assert terms.residual <= 1e-10 * terms.scale

    def test_k_lower_at_edge(self):
        # coefficient (k-m+1) vanishes at m = k+1, P^{m-1}_k is never formed
        terms = recurrence_terms("k-lower", "1", "2", 0.4)
        assert terms.rhs == ()
        assert terms.residual <= 1e-12 * terms.scale

    def test_recurrence_residual_absolute(self):
        assert recurrence_residual("three-term", 0, 1, 0.5) < 1e-12

    def test_unknown_recurrence(self):
        with pytest.raises(DomainError):
            recurrence_terms("five-term", 0, 1, 0.5)

    def test_first_weights(self):
        assert first_weights(1, 3) == [2, 3, 4]
        assert first_weights("1/2", 2, "D-") == [-1.5, -2.5]


class TestRoutes:
    """D- against the Rodrigues form and the hypergeometric route"""

    @pytest.mark.parametrize("k, m", DISCRETE_WEIGHTS)
    def test_dminus_against_rodrigues(self, k, m):
        # Y~^m_k = (-1)^(m+k+1) N e^{im phi} P^{-m}_k(sinh tau) for m <= -(k+1)
        kq, mq = sp.Rational(k), -sp.Rational(m)
        n = int(-mq - kq - 1)
        norm = math.sqrt(
            (2.0 * float(kq) + 1.0) / (2.0 * math.pi ** 2 * math.factorial(n) * math.gamma(float(kq - mq) + 1.0))
        )
        sign = (-1) ** int(mq + kq + 1)
        p = rodrigues_p(k, m)
        for tau in TAUS:
            profile = float(sp.N(p.subs(x, math.sinh(tau)), 30))
            for phi in PHIS:
                expected = sign * norm * cmath.exp(1j * float(mq) * phi) * profile
                assert abs(y_dminus(k, "-" + m, tau, phi) - expected) <= 1e-12 * max(abs(expected), 1e-3)

    def test_dminus_highest_weight(self):
        value = y_dminus(1, -2, 0.5, 0.3)
        expected = cmath.exp(-2j * 0.3) / (math.pi * math.cosh(0.5) ** 2)
        assert abs(value - expected) <= 1e-14

    @pytest.mark.parametrize("k, m", DISCRETE_WEIGHTS)
    def test_hypergeometric_route(self, opts, k, m):
        for tau in TAUS + [3.0]:
            direct = y_dplus(k, m, tau, 0.4, opts)
            route = y_dplus_hypergeometric(k, m, tau, 0.4, opts)
            assert abs(direct - route) <= 1e-9 * max(abs(direct), 1e-3)
            direct_minus = y_dminus(k, "-" + m, tau, 0.4, opts)
            route_minus = y_dminus_hypergeometric(k, "-" + m, tau, 0.4, opts)
            assert abs(direct_minus - route_minus) <= 1e-9 * max(abs(direct_minus), 1e-3)

    @pytest.mark.parametrize("k, m", [("0", "1"), ("0", "3"), ("1", "4"), ("1/2", "7/2")])
    @pytest.mark.parametrize("z", [0.0, 0.4, 0.9])
    def test_hypergeometric_ode(self, opts, k, m, z):
        assert hypergeometric_ode_residual(k, m, z, opts) < 1e-9

    def test_hypergeometric_ode_domain(self, opts):
        with pytest.raises(DomainError):
            hypergeometric_ode_residual(0, 1, 1.0, opts)


class TestVolumeFunction:
    def test_scales_with_a(self):
        assert volume_function(1, 2, 2.0, 0.3, 0.1) == pytest.approx(2.0 * y_dplus(1, 2, 0.3, 0.1), rel=1e-15)

    def test_rejects_non_positive_a(self):
        with pytest.raises(DomainError):
            volume_function(1, 2, 0.0, 0.3, 0.1)

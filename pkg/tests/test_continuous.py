# flake8: noqa pylint: disable=W,C,R

import cmath
import math

import mpmath
import pytest

from hyperwave.config import EvalOptions
from hyperwave.continuous import (
    asymptotic_amplitude,
    legendre_p1,
    legendre_p2,
    norm_even,
    norm_odd,
    phase_even,
    phase_odd,
    principal_envelope_amplitude,
    supplementary_envelope,
    y_half,
    y_principal,
    y_principal_pfaff,
    y_principal_raw,
    y_seq,
    y_seq_dispatch,
    y_supplementary,
    z_factor,
    z_factor_gamma,
    z_product_identity_residual,
)
from hyperwave.exceptions import DomainError
from hyperwave.specs import PrincipalSpec, SupplementarySpec
from hyperwave.numerics import log_cosh
from tests.config import INV_SQRT2_PI, LAMBDAS, LARGE_TAUS, TAUS


@pytest.fixture
def opts():
    return EvalOptions()


def cos_form(lam, tau, phi):
    return cmath.exp(0.5j * phi) * math.cos(lam * tau) * INV_SQRT2_PI / math.sqrt(math.cosh(tau))


def sin_form(lam, tau, phi):
    return cmath.exp(0.5j * phi) * math.sin(lam * tau) * INV_SQRT2_PI / math.sqrt(math.cosh(tau))


class TestHalfInteger:
    """Weight m = 1/2 in closed form and through the raw 2F1 families"""

    @pytest.mark.parametrize("lam", LAMBDAS)
    @pytest.mark.parametrize("tau", TAUS)
    def test_cos_form(self, lam, tau):
        assert abs(y_half(1, 0, lam, tau, 0.7) - cos_form(lam, tau, 0.7)) <= 1e-13

    @pytest.mark.parametrize("lam", LAMBDAS)
    @pytest.mark.parametrize("tau", TAUS)
    def test_sin_form(self, lam, tau):
        assert abs(y_half(2, 0, lam, tau, 0.7) - sin_form(lam, tau, 0.7)) <= 1e-13

    def test_waist_value(self):
        value = y_principal(PrincipalSpec(1.0, "1/2", "seq1"), 0.0, 0.0)
        assert value.real == pytest.approx(0.2250791, abs=1e-7)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_norm_even_half(self, lam):
        assert norm_even(0.5, lam) * math.sqrt(2.0) * math.pi == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_norm_odd_half(self, lam):
        assert norm_odd(0.5, lam) == pytest.approx(lam * INV_SQRT2_PI, rel=1e-12)

    @pytest.mark.parametrize("lam", LAMBDAS)
    @pytest.mark.parametrize("tau", TAUS)
    def test_raw_even_matches_cos(self, opts, lam, tau):
        value = y_principal_raw("even", "1/2", lam, tau, 0.7, opts)
        assert abs(value - cos_form(lam, tau, 0.7)) <= 1e-10

    @pytest.mark.parametrize("lam", LAMBDAS)
    @pytest.mark.parametrize("tau", TAUS)
    def test_raw_odd_matches_sin(self, opts, lam, tau):
        value = y_principal_raw("odd", "1/2", lam, tau, 0.7, opts)
        assert abs(value - sin_form(lam, tau, 0.7)) <= 1e-10

    def test_negative_half(self):
        lam, tau, phi = 1.0, 0.4, 0.9
        value = y_principal(PrincipalSpec(lam, "-1/2", "seq1"), tau, phi)
        assert abs(value - y_half(1, 0, lam, tau, phi).conjugate()) <= 1e-15

    def test_bad_sequence(self):
        with pytest.raises(DomainError):
            y_half(3, 0, 1.0, 0.0, 0.0)


class TestZFactor:
    """Z_m as a product and as Gamma ratios"""

    def test_m0(self):
        assert z_factor(0, 2.0) == 1.0

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_m1(self, lam):
        assert z_factor(1, lam) == pytest.approx(1.0 / math.sqrt(0.25 + lam * lam), rel=1e-14)

    @pytest.mark.parametrize("form", ["a", "b"])
    @pytest.mark.parametrize("m", range(6))
    def test_gamma_forms(self, form, m):
        assert z_factor_gamma(m, 1.3, form) == pytest.approx(z_factor(m, 1.3), rel=1e-12)

    @pytest.mark.parametrize("m", [1, 4, 9])
    def test_product_identity(self, m):
        assert z_product_identity_residual(m, 0.8) < 1e-12

    def test_rejects_negative_m(self):
        with pytest.raises(DomainError):
            z_factor(-1, 1.0)

    def test_unknown_form(self):
        with pytest.raises(DomainError):
            z_factor_gamma(2, 1.0, "c")


class TestSequences:
    """Y1/Y2 finite sums against the raw families"""

    def test_phase_tables(self):
        assert [phase_even(m).real for m in range(5)] == [1, -1, -1, 1, 1]
        assert [phase_odd(m).real for m in range(5)] == [1, 1, -1, -1, 1]

    @pytest.mark.parametrize("seq", [1, 2])
    @pytest.mark.parametrize("m", range(5))
    @pytest.mark.parametrize("tau", [-0.7, 0.0, 0.4, 1.6])
    def test_interleave(self, opts, seq, m, tau):
        direct = y_seq(seq, m, 1.0, tau, 0.3, opts)
        raw = y_seq_dispatch(seq, m, 1.0, tau, 0.3, opts)
        assert abs(direct - raw) <= 1e-9 * max(abs(direct), 1e-3)

    @pytest.mark.parametrize("seq", [1, 2])
    @pytest.mark.parametrize("m", range(4))
    def test_parity(self, opts, seq, m):
        sign = (-1) ** m if seq == 1 else (-1) ** (m + 1)
        for tau in (0.4, 1.6):
            assert abs(y_seq(seq, m, 3.0, -tau, 0.0, opts) - sign * y_seq(seq, m, 3.0, tau, 0.0, opts)) <= 1e-12

    @pytest.mark.parametrize("tau", [-0.7, 0.4, 1.6])
    def test_pfaff_vacuum(self, opts, tau):
        assert abs(y_principal_pfaff("even", 0.5, tau, 0.0, opts) - y_seq(1, 0, 0.5, tau, 0.0, opts)) <= 1e-10
        assert abs(y_principal_pfaff("odd", 0.5, tau, 0.0, opts) - y_seq(2, 0, 0.5, tau, 0.0, opts)) <= 1e-10

    @pytest.mark.parametrize("m", [0, 1, 3])
    @pytest.mark.parametrize("tau", [-0.7, 0.4, 1.6])
    def test_legendre_p1(self, opts, m, tau):
        lam = 1.0
        expected = y_seq(1, m, lam, tau, 0.0, opts)
        value = z_factor(m, lam) * legendre_p1(m, lam, math.sinh(tau), opts) / (2.0 * math.sqrt(2.0) * math.pi ** 1.5)
        assert abs(value - expected) <= 1e-9 * max(abs(expected), 1e-3)

    @pytest.mark.parametrize("m", [0, 2])
    @pytest.mark.parametrize("tau", [-0.7, 0.4, 1.6])
    def test_legendre_p2(self, opts, m, tau):
        lam = 1.0
        expected = y_seq(2, m, lam, tau, 0.0, opts)
        value = z_factor(m, lam) * legendre_p2(m, lam, math.sinh(tau), opts) / (math.sqrt(2.0) * math.pi ** 1.5)
        assert abs(value - expected) <= 1e-9 * max(abs(expected), 1e-3)

    def test_negative_weight(self, opts):
        value = y_principal(PrincipalSpec(1.0, -2, "seq1"), 0.4, 0.9, opts)
        assert abs(value - y_seq(1, 2, 1.0, 0.4, 0.9, opts).conjugate()) <= 1e-15

    def test_negative_odd_weight_flips_sign(self, opts):
        value = y_principal(PrincipalSpec(1.0, -3, "seq2"), 0.4, 0.9, opts)
        assert abs(value + y_seq(2, 3, 1.0, 0.4, 0.9, opts).conjugate()) <= 1e-15

    def test_bad_parity(self):
        with pytest.raises(DomainError):
            y_principal_raw("mixed", 0, 1.0, 0.0, 0.0)


class TestAsymptotics:
    """Large-|tau| behavior of both continuous series"""

    @pytest.mark.parametrize("parity", ["even", "odd"])
    @pytest.mark.parametrize("m", [0, 2])
    def test_principal_envelope(self, opts, parity, m):
        lam = 1.0
        measured = principal_envelope_amplitude(parity, m, lam, 12.0, opts)
        assert measured == pytest.approx(2.0 * asymptotic_amplitude(parity, m, lam), rel=1e-6)

    @pytest.mark.parametrize("parity, m, gamma", [("even", 1, 0.3), ("odd", 2, 0.2)])
    @pytest.mark.parametrize("tau", [-12.0, 12.0])
    def test_supplementary_envelope(self, opts, parity, m, gamma, tau):
        spec = SupplementarySpec(gamma, m, parity)
        value = y_supplementary(spec, tau, 0.0, opts).real
        assert value == pytest.approx(supplementary_envelope(spec, tau), rel=1e-6)


class TestSupplementary:
    """Supplementary-series functions"""

    def test_even_at_waist(self):
        assert y_supplementary(SupplementarySpec(0.3, 0), 0.0, 0.0) == pytest.approx(1.0)

    def test_odd_at_waist(self):
        assert abs(y_supplementary(SupplementarySpec(0.3, 1, "odd"), 0.0, 0.0)) == 0.0

    def test_weight_phase(self):
        spec = SupplementarySpec(0.3, 2)
        ratio = y_supplementary(spec, 0.5, 0.4) / y_supplementary(spec, 0.5, 0.0)
        assert ratio == pytest.approx(cmath.exp(0.8j), rel=1e-14)

    def test_parity_in_tau(self):
        spec = SupplementarySpec(0.2, 1, "odd")
        assert y_supplementary(spec, -0.6, 0.0) == pytest.approx(-y_supplementary(spec, 0.6, 0.0), rel=1e-14)


def mp_cosh_2f1(a, b, c, tau, exponent):
    with mpmath.workdps(int(abs(tau)) + 50):
        t = mpmath.mpf(tau)
        value = mpmath.cosh(t) ** exponent * mpmath.hyp2f1(a, b, c, mpmath.tanh(t) ** 2)
        return complex(value)


class TestLargeTau:
    """Evaluation where sinh, cosh and sech^2 no longer fit in a double"""

    @pytest.mark.parametrize("tau", [-1.3, 0.7] + LARGE_TAUS)
    def test_half_l1_closed_form(self, tau):
        # T^1 = 2 cosh^(-1/2) (tanh cos(lambda tau) + lambda sin(lambda tau))
        lam, phi = 1.0, 0.4
        envelope = math.exp(-0.5 * log_cosh(tau))
        wave = math.tanh(tau) * math.cos(lam * tau) + lam * math.sin(lam * tau)
        expected = cmath.exp(1.5j * phi) * wave * envelope * INV_SQRT2_PI / math.sqrt(1.0 + lam * lam)
        assert abs(y_half(1, 1, lam, tau, phi) - expected) <= 1e-12 * envelope

    @pytest.mark.parametrize("tau", LARGE_TAUS)
    def test_half_cos_form(self, tau):
        envelope = math.exp(-0.5 * log_cosh(tau))
        expected = math.cos(2.0 * tau) * INV_SQRT2_PI * envelope
        assert abs(y_half(1, 0, 2.0, tau, 0.0) - expected) <= 1e-12 * envelope
        assert abs(y_principal_raw("even", "1/2", 2.0, tau, 0.0) - expected) <= 1e-9 * envelope

    @pytest.mark.parametrize("tau", LARGE_TAUS)
    def test_raw_vacuum(self, opts, tau):
        lam = 1.0
        a = 0.25 + 0.5j * lam
        expected = norm_even(0.0, lam) * mp_cosh_2f1(a, a, 0.5, tau, -(0.5 + 1j * lam))
        value = y_principal_raw("even", 0, lam, tau, 0.0, opts)
        assert abs(value) > 0.0
        assert abs(value - expected) <= 1e-9 * abs(expected)

    @pytest.mark.parametrize("tau", LARGE_TAUS)
    def test_sequence_sum(self, opts, tau):
        direct = y_seq(1, 2, 1.0, tau, 0.0, opts)
        raw = y_seq_dispatch(1, 2, 1.0, tau, 0.0, opts)
        assert abs(direct) > 0.0
        assert abs(direct - raw) <= 1e-9 * abs(raw)

    @pytest.mark.parametrize("tau", LARGE_TAUS)
    def test_supplementary(self, opts, tau):
        expected = mp_cosh_2f1(0.375, 0.375, 0.5, tau, -0.75).real
        value = y_supplementary(SupplementarySpec(0.25, 0), tau, 0.0, opts)
        assert value.real == pytest.approx(expected, rel=1e-9)

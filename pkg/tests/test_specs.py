# flake8: noqa pylint: disable=W,C,R

import math
import re
from fractions import Fraction

import pytest

from hyperwave.exceptions import DomainError
from hyperwave.specs import (
    DiscreteSpec,
    HyperPoint,
    NewClassSpec,
    PrincipalSpec,
    SupplementarySpec,
    casimir_eigenvalue,
    parse_rational,
    spec_from_dict,
)


class TestParseRational:
    """Rational parsing of command-line and dict parameters"""

    @pytest.mark.parametrize("raw, expected", [
        ("1/2", Fraction(1, 2)),
        ("-3/2", Fraction(-3, 2)),
        (" 2 ", Fraction(2)),
        (3, Fraction(3)),
        (0.5, Fraction(1, 2)),
        (Fraction(5, 2), Fraction(5, 2)),
    ])
    def test_parse(self, raw, expected):
        assert parse_rational(raw) == expected

    @pytest.mark.parametrize("raw", ["half", "1/0", True, float("nan")])
    def test_reject(self, raw):
        with pytest.raises(DomainError):
            parse_rational(raw)


class TestDiscreteSpec:
    """Admissible D+/D- weights"""

    def test_lowest_weight(self):
        spec = DiscreteSpec("1/2", "3/2")
        assert spec.k == Fraction(1, 2)
        assert spec.m == Fraction(3, 2)
        assert spec.level == 0

    def test_level(self):
        assert DiscreteSpec(1, 5).level == 3
        assert DiscreteSpec(1, -5, "D-").level == 3

    @pytest.mark.parametrize("k, m, series, fragment", [
        (1, 1, "D+", "m >= k+1"),
        (0, "1/2", "D+", "m - k must be an integer"),
        (-1, 0, "D+", "k must be one of"),
        (1, -1, "D-", "m <= -(k+1)"),
        (0, 1, "D0", "series must be"),
        ("1/3", 1, "D+", "half-integer"),
    ])
    def test_invalid(self, k, m, series, fragment):
        with pytest.raises(DomainError, match=re.escape(fragment)):
            DiscreteSpec(k, m, series)

    def test_minus_half_is_admissible(self):
        assert DiscreteSpec("-1/2", "1/2").level == 0


class TestOtherSpecs:
    """New-class, principal and supplementary parameter records"""

    def test_newclass(self):
        spec = NewClassSpec(2, sign=-1)
        assert spec.m == -2
        assert (spec.alpha, spec.beta) == (0.0, 1.0)

    @pytest.mark.parametrize("k", ["1/2", -1])
    def test_newclass_invalid_k(self, k):
        with pytest.raises(DomainError):
            NewClassSpec(k)

    def test_newclass_invalid_sign(self):
        with pytest.raises(DomainError):
            NewClassSpec(1, sign=2)

    def test_principal(self):
        spec = PrincipalSpec(1.5, "-7/2", "seq2")
        assert spec.is_half_integer
        assert spec.m == Fraction(-7, 2)

    @pytest.mark.parametrize("lam", [0.0, -1.0, float("inf")])
    def test_principal_invalid_lambda(self, lam):
        with pytest.raises(DomainError):
            PrincipalSpec(lam, 0)

    def test_principal_invalid_sequence(self):
        with pytest.raises(DomainError):
            PrincipalSpec(1.0, 0, "seq3")

    @pytest.mark.parametrize("gamma", [0.0, 0.5, 0.7])
    def test_supplementary_invalid_gamma(self, gamma):
        with pytest.raises(DomainError, match="0 < gamma < 1/2"):
            SupplementarySpec(gamma, 0)

    def test_supplementary_needs_integer_m(self):
        with pytest.raises(DomainError):
            SupplementarySpec(0.3, "1/2")


class TestSpecFromDict:
    """Building specs from dicts and command-line names"""

    def test_aliases(self):
        assert spec_from_dict({"series": "dminus", "k": "0", "m": "-2"}) == DiscreteSpec(0, -2, "D-")
        assert spec_from_dict({"series": "D+", "k": 1, "m": 2}) == DiscreteSpec(1, 2)

    def test_round_trip(self):
        specs = [
            DiscreteSpec("1/2", "7/2"),
            NewClassSpec(3, 0.5, 2.0, -1),
            PrincipalSpec(2.0, "1/2", "seq2"),
            SupplementarySpec(0.25, 3, "odd"),
        ]
        for spec in specs:
            assert spec_from_dict(spec.to_dict()) == spec

    def test_principal_accepts_lam_key(self):
        assert spec_from_dict({"series": "principal", "lam": 1.0, "m": 0}) == PrincipalSpec(1.0, 0)

    def test_missing_parameter(self):
        with pytest.raises(DomainError, match="missing parameter 'k'"):
            spec_from_dict({"series": "dplus", "m": "1"})

    def test_unknown_series(self):
        with pytest.raises(DomainError, match="Unknown series"):
            spec_from_dict({"series": "tachyon"})


class TestHelpers:
    def test_casimir_eigenvalue(self):
        assert casimir_eigenvalue(DiscreteSpec(1, 2)) == 2
        assert casimir_eigenvalue(NewClassSpec(0)) == 0
        assert casimir_eigenvalue(PrincipalSpec(2.0, 0)) == pytest.approx(-4.25)
        assert casimir_eigenvalue(SupplementarySpec(0.3, 0)) == pytest.approx(0.09 - 0.25)

    def test_hyperpoint(self):
        x, y, z = HyperPoint(0.5, math.pi / 2).cartesian()
        assert x == pytest.approx(0.0, abs=1e-15)
        assert y == pytest.approx(math.cosh(0.5))
        assert z == pytest.approx(math.sinh(0.5))
        # on the unit one-sheet hyperboloid x^2 + y^2 - z^2 = 1
        assert x * x + y * y - z * z == pytest.approx(1.0)

    def test_hyperpoint_rejects_nan(self):
        with pytest.raises(DomainError):
            HyperPoint(float("nan"), 0.0)

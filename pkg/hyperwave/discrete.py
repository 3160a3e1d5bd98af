"""
Discrete-series pseudospherical functions.

D+ functions Y^m_k(tau, phi) = N e^{i m phi} P^m_k(sinh tau) for m >= k+1,
their D- partners, the Legendre analogues P^m_k, the hypergeometric route,
the Appendix-style recurrences and the harmonic volume functions a^k Y^m_k.

Production evaluation uses the finite sum in tanh/cosh form; cosh powers
are taken in log space so large |tau| does not overflow.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from scipy import special

from .config import EvalOptions
from .exceptions import DomainError
from .numerics import (
    Hyp2F1Params,
    ensure_finite,
    gauss_2f1,
    gauss_2f1_deriv,
    gauss_2f1_tanh2,
    generalized_double_factorial_ratio,
    log_cosh,
)
from .specs import DiscreteSpec, parse_rational
from .symbolic import PowerExpansion

logger = logging.getLogger(__name__)

RecurrenceId = Literal["ode", "raise", "three-term", "lower", "k-three-term", "k-lower"]
RECURRENCE_IDS: Tuple[str, ...] = ("ode", "raise", "three-term", "lower", "k-three-term", "k-lower")


def _dplus(k, m) -> DiscreteSpec:
    return DiscreteSpec(parse_rational(k), parse_rational(m), "D+")


def _sum_coefficients(spec: DiscreteSpec) -> List[Tuple[int, int, float]]:
    """
    (r, j, log|c_r|) for the finite sum sum_r (-1)^r G(m-r)/(r!(n-2r)!) y^(n-2r),
    with n = |m| - k - 1 and j = n - 2r.
    """
    m = float(abs(spec.m))
    n = spec.level
    return [
        (
            r,
            n - 2 * r,
            special.gammaln(m - r) - special.gammaln(r + 1) - special.gammaln(n - 2 * r + 1),
        )
        for r in range(n // 2 + 1)
    ]


def _log_norm(spec: DiscreteSpec) -> float:
    """log of 2^k sqrt((2k+1) n! / (2 pi^2 (m+k)!))."""
    k = float(spec.k)
    m = float(abs(spec.m))
    if spec.k == Fraction(-1, 2):
        raise DomainError("k = -1/2 functions are not square integrable; no normalization exists")
    return k * math.log(2.0) + 0.5 * (
        math.log(2 * k + 1)
        + special.gammaln(spec.level + 1)
        - math.log(2 * math.pi ** 2)
        - special.gammaln(m + k + 1)
    )


def lowest_weight_norm(k) -> float:
    """
    Normalization c_k of the lowest-weight function c_k e^{i(k+1)phi} cosh^{-(k+1)} tau.

    c_k = 1 / (sqrt(2) pi sqrt((2k-1)!!/(2k)!!)), with the double-factorial
    ratio continued through Gamma for half-integer k.

    Raises:
        DomainError: k is not admissible, or k = -1/2 (not normalizable).

    Example:
        >>> round(lowest_weight_norm(1), 10)
        0.3183098862
    """
    spec = _dplus(k, parse_rational(k) + 1)
    if spec.k == Fraction(-1, 2):
        raise DomainError("k = -1/2 lowest-weight function sech^(1/2) tau is not square integrable")
    ratio = generalized_double_factorial_ratio(float(spec.k))
    return 1.0 / (math.pi * math.sqrt(2.0 * ratio))


def assoc_p(k, m, x: float, opts: Optional[EvalOptions] = None) -> float:
    """
    Legendre analogue P^m_k(x) by the explicit finite sum

        P^m_k(x) = 2^k n! sum_r (-1)^r G(m-r) / (r! (n-2r)!) (2x)^(n-2r) (1+x^2)^(r - m/2),

    with n = m - k - 1. Valid for half-integer k through Gamma.
    """
    spec = _dplus(k, m)
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    k_f, m_f = float(spec.k), float(spec.m)
    log_1px2 = math.log1p(x * x)
    prefix = k_f * math.log(2.0) + special.gammaln(spec.level + 1)
    terms = []
    for r, j, log_c in _sum_coefficients(spec):
        magnitude = math.exp(prefix + log_c + (r - m_f / 2.0) * log_1px2)
        terms.append((-1) ** r * magnitude * (2.0 * x) ** j)
    return float(ensure_finite(math.fsum(terms), "P^m_k").real)


def assoc_p_expansion(k, m) -> PowerExpansion:
    """P^m_k as an exact x^j u^e expansion (u = sqrt(1+x^2))."""
    spec = _dplus(k, m)
    k_f, m_f = float(spec.k), float(spec.m)
    prefix = k_f * math.log(2.0) + special.gammaln(spec.level + 1)
    return PowerExpansion.from_terms(
        ((j, 2.0 * r - m_f, 0j), (-1) ** r * 2.0 ** j * math.exp(prefix + log_c))
        for r, j, log_c in _sum_coefficients(spec)
    )


def assoc_p_derivative(k, m, x: float, order: int = 1) -> float:
    """Exact x-derivative of P^m_k through the term algebra."""
    if order < 0:
        raise DomainError(f"Derivative order must be >= 0, got {order}")
    return float(assoc_p_expansion(k, m).derivative(order).evaluate(float(x)).real)


def _profile(spec: DiscreteSpec, tau: float) -> float:
    """N * P^{|m|}_k(sinh tau) written in tanh/cosh form."""
    t = math.tanh(tau)
    log_front = _log_norm(spec) - (float(spec.k) + 1.0) * log_cosh(tau)
    terms = [
        (-1) ** r * math.exp(log_front + log_c) * (2.0 * t) ** j
        for r, j, log_c in _sum_coefficients(spec)
    ]
    return math.fsum(terms)


def y_dplus(k, m, tau: float, phi: float, opts: Optional[EvalOptions] = None) -> complex:
    """
    Normalized D+ function Y^m_k(tau, phi).

    Example:
        >>> abs(y_dplus(0, 1, 0.0, 0.0) - 1 / (math.sqrt(2) * math.pi)) < 1e-15
        True
    """
    spec = _dplus(k, m)
    value = cmath.exp(1j * float(spec.m) * phi) * _profile(spec, tau)
    return ensure_finite(value, "Y^m_k")


def y_dminus(k, m, tau: float, phi: float, opts: Optional[EvalOptions] = None) -> complex:
    """
    D- function for m <= -(k+1):

        Y~^m_k = (-1)^(m+k+1) N e^{i m phi} P^{-m}_k(sinh tau).
    """
    spec = DiscreteSpec(parse_rational(k), parse_rational(m), "D-")
    sign = -1.0 if spec.level % 2 else 1.0
    value = sign * cmath.exp(1j * float(spec.m) * phi) * _profile(spec, tau)
    return ensure_finite(value, "Y~^m_k")


def _hypergeometric_profile(spec: DiscreteSpec, tau: float, opts: EvalOptions) -> complex:
    k, m = float(spec.k), float(abs(spec.m))
    n = spec.level
    t = math.tanh(tau)
    log_front = _log_norm(spec) - (k + 1.0) * log_cosh(tau)
    if n % 2 == 0:
        # m - k odd: constant term of the sum times 2F1(.;1/2;.)
        half = n // 2
        log_coef = log_front + special.gammaln((m + k + 1) / 2) - special.gammaln(half + 1)
        coef = (-1) ** half * math.exp(log_coef)
        return coef * gauss_2f1_tanh2((m + k + 1) / 2, (-m + k + 1) / 2, 0.5, tau, opts)
    half = (n - 1) // 2
    log_coef = log_front + special.gammaln((m + k + 2) / 2) - special.gammaln(half + 1)
    coef = (-1) ** half * 2.0 * math.exp(log_coef)
    return coef * t * gauss_2f1_tanh2((m + k + 2) / 2, (-m + k + 2) / 2, 1.5, tau, opts)


def y_dplus_hypergeometric(
    k, m, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """
    D+ value through the terminating 2F1 forms: 2F1(.;1/2;tanh^2) for m-k odd,
    tanh * 2F1(.;3/2;tanh^2) for m-k even, with phases (-1)^((m-k-1)/2) and
    (-1)^((m-k-2)/2).
    """
    opts = opts or EvalOptions()
    spec = _dplus(k, m)
    value = cmath.exp(1j * float(spec.m) * phi) * _hypergeometric_profile(spec, tau, opts)
    return ensure_finite(value, "Y^m_k (2F1 route)")


def y_dminus_hypergeometric(
    k, m, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """D- value as (-1)^(|m|-k-1) times the conjugate of the 2F1-route D+ value."""
    spec = DiscreteSpec(parse_rational(k), parse_rational(m), "D-")
    sign = -1.0 if spec.level % 2 else 1.0
    return sign * y_dplus_hypergeometric(spec.k, -spec.m, tau, phi, opts).conjugate()


def hypergeometric_ode_residual(k, m, x: float, opts: Optional[EvalOptions] = None) -> float:
    """
    Residual of the hypergeometric equation z(1-z)F'' + [c - (a+b+1)z]F' - abF = 0
    for the 2F1 factor of the D+ function, with z = x in [0, 1).
    """
    opts = opts or EvalOptions()
    spec = _dplus(k, m)
    kf, mf = float(spec.k), float(spec.m)
    if spec.level % 2 == 0:
        a, b, c = (mf + kf + 1) / 2, (-mf + kf + 1) / 2, 0.5
    else:
        a, b, c = (mf + kf + 2) / 2, (-mf + kf + 2) / 2, 1.5
    z = float(x)
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z must lie in [0, 1), got {z!r}")
    p = Hyp2F1Params(a, b, c, z)
    f0 = gauss_2f1(p, opts)
    f1 = gauss_2f1_deriv(p, 1, opts)
    f2 = gauss_2f1_deriv(p, 2, opts)
    return abs(z * (1 - z) * f2 + (c - (a + b + 1) * z) * f1 - a * b * f0)


def volume_function(
    k, m, a: float, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """Harmonic volume function a^k Y^m_k(tau, phi) for a > 0."""
    a = float(a)
    if not a > 0:
        raise DomainError(f"volume functions need a > 0, got a = {a!r}")
    spec = _dplus(k, m)
    return a ** float(spec.k) * y_dplus(spec.k, spec.m, tau, phi, opts)


def _required_indices(identity: str, k: Fraction, m: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """Every (k, m) whose P^m_k enters the identity with a nonzero coefficient."""
    one = Fraction(1)
    if identity in ("ode", "raise", "three-term", "lower") and m < k + 1:
        raise DomainError(f"P^m_k requires m >= k+1, got m = {m}, k = {k}")
    if identity == "ode":
        return [(k, m)]
    if identity == "raise":
        return [(k, m), (k, m + one)]
    if identity == "three-term":
        needed = [(k, m + 2 * one), (k, m + one)]
        if (m - k) * (m + k + 1) != 0:
            needed.append((k, m))
        return needed
    if identity == "lower":
        needed = [(k, m)]
        if (m + k) * (m - k - 1) != 0:
            needed.append((k, m - one))
        return needed
    if identity == "k-three-term":
        needed = [(k - one, m), (k, m), (k, m + one)]
        if (m - k) * (m - k - 1) != 0:
            needed.append((k, m - one))
        return needed
    if identity == "k-lower":
        needed = [(k - one, m), (k, m)]
        if k - m + 1 != 0:
            needed.append((k, m - one))
        return needed
    raise DomainError(
        f"Unknown recurrence {identity!r}; expected one of {', '.join(RECURRENCE_IDS)}"
    )


@dataclass(frozen=True)
class RecurrenceTerms:
    """Signed terms on each side of a recurrence; `scale` is the sum of their magnitudes."""

    lhs: Tuple[float, ...]
    rhs: Tuple[float, ...]

    @property
    def lhs_value(self) -> float:
        return math.fsum(self.lhs)

    @property
    def rhs_value(self) -> float:
        return math.fsum(self.rhs)

    @property
    def residual(self) -> float:
        return abs(self.lhs_value - self.rhs_value)

    @property
    def scale(self) -> float:
        return math.fsum(abs(t) for t in (*self.lhs, *self.rhs))


def recurrence_terms(identity: RecurrenceId, k, m, x: float) -> RecurrenceTerms:
    """
    Terms of a Legendre-analogue recurrence, s = sqrt(1+x^2):

        ode:          (1+x^2)P'' + 2xP' + [-k(k+1) + m^2/(1+x^2)] P = 0
        raise:        (1+x^2)P'^m = -s P^{m+1} + m x P^m
        three-term:   P^{m+2} - 2(m+1)(x/s) P^{m+1} + (m-k)(m+k+1) P^m = 0
        lower:        (1+x^2)P'^m = (m+k)(m-k-1) s P^{m-1} - m x P^m
        k-three-term: 2k P^m_{k-1} = s P^{m+1}_k - 2(m-k) x P^m_k + s(m-k)(m-k-1) P^{m-1}_k
        k-lower:      P^m_{k-1} - x P^m_k = (k-m+1) s P^{m-1}_k

    Indices whose coefficient vanishes are never evaluated, so the identities
    hold right down to the lowest weight.
    """
    if identity not in RECURRENCE_IDS:
        raise DomainError(f"Unknown recurrence {identity!r}")
    k, m = parse_rational(k), parse_rational(m)
    for kk, mm in _required_indices(identity, k, m):
        _dplus(kk, mm)
    x = float(x)
    s = math.hypot(1.0, x)
    kf, mf = float(k), float(m)

    def p(kk, mm) -> float:
        return assoc_p(kk, mm, x)

    def term(coef: float, kk, mm) -> Tuple[float, ...]:
        return (coef * p(kk, mm),) if coef else ()

    if identity == "ode":
        lhs = (
            (1 + x * x) * assoc_p_derivative(k, m, x, 2),
            2 * x * assoc_p_derivative(k, m, x, 1),
            (-kf * (kf + 1) + mf * mf / (1 + x * x)) * p(k, m),
        )
        return RecurrenceTerms(lhs, ())
    if identity == "raise":
        lhs = ((1 + x * x) * assoc_p_derivative(k, m, x, 1),)
        return RecurrenceTerms(lhs, (-s * p(k, m + 1), *term(mf * x, k, m)))
    if identity == "three-term":
        lhs = (p(k, m + 2), *term(-2 * (mf + 1) * (x / s), k, m + 1))
        return RecurrenceTerms(lhs, term(-(mf - kf) * (mf + kf + 1), k, m))
    if identity == "lower":
        lhs = ((1 + x * x) * assoc_p_derivative(k, m, x, 1),)
        rhs = (*term((mf + kf) * (mf - kf - 1) * s, k, m - 1), *term(-mf * x, k, m))
        return RecurrenceTerms(lhs, rhs)
    if identity == "k-three-term":
        rhs = (
            s * p(k, m + 1),
            *term(-2 * (mf - kf) * x, k, m),
            *term(s * (mf - kf) * (mf - kf - 1), k, m - 1),
        )
        return RecurrenceTerms((2 * kf * p(k - 1, m),), rhs)
    # k-lower
    lhs = (p(k - 1, m), *term(-x, k, m))
    return RecurrenceTerms(lhs, term((kf - mf + 1) * s, k, m - 1))


def recurrence_residual(
    identity: RecurrenceId, k, m, x: float, opts: Optional[EvalOptions] = None
) -> float:
    """|LHS - RHS| of the chosen recurrence."""
    residual = recurrence_terms(identity, k, m, x).residual
    logger.debug("recurrence %s at k=%s m=%s x=%g: residual %.3e", identity, k, m, x, residual)
    return residual


def first_weights(k, count: int, series: str = "D+") -> List[Fraction]:
    """The first `count` admissible weights of D+ (or D-) for k."""
    k = parse_rational(k)
    sign = 1 if series == "D+" else -1
    return [sign * (k + 1 + j) for j in range(count)]

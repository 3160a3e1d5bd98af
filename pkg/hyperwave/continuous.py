"""
Principal and supplementary series.

Principal series (k = -1/2 + i lambda):
  - raw even/odd functions, 2F1(.;1/2;tanh^2) and tanh * 2F1(.;3/2;tanh^2),
    normalized through the asymptotic amplitude and carrying the m-dependent
    phase tables;
  - the ladder sequences Y1/Y2 by explicit finite sums with the Z-factor;
  - Legendre analogues P1/P2 (argument -x^2) and T/U for half-integer weights;
  - negative weights through conjugation.

Supplementary series (k = gamma - 1/2, 0 < gamma < 1/2) are returned with
constant 1: their norm diverges.
"""

import cmath
import logging
import math
from functools import lru_cache
from typing import Literal, Optional, Tuple

from .config import EvalOptions
from .exceptions import DomainError
from .numerics import (
    Hyp2F1Params,
    continuation_coefficients,
    cosh_power,
    ensure_finite,
    gamma_magnitude_sq,
    gauss_2f1,
    gauss_2f1_tanh2,
    log_cosh,
    log_gamma_complex,
)
from .specs import PrincipalSpec, SupplementarySpec, parse_rational
from .symbolic import PowerExpansion

logger = logging.getLogger(__name__)

ParityName = Literal["even", "odd"]
Sequence = Literal[1, 2]

_SQRT2 = math.sqrt(2.0)


def _check_lambda(lam: float) -> float:
    return PrincipalSpec(lam, 0).lam


def _nonneg_int(m, what: str = "m") -> int:
    q = parse_rational(m)
    if q.denominator != 1 or q < 0:
        raise DomainError(f"{what} must be a non-negative integer, got {q}")
    return int(q)


def _params(parity: ParityName, m: float, lam: float) -> Tuple[complex, complex, float]:
    """(a, b, c) of the raw even (c = 1/2) or odd (c = 3/2) 2F1."""
    if parity == "even":
        return 0.5 * (m + 0.5 + 1j * lam), 0.5 * (-m + 0.5 + 1j * lam), 0.5
    if parity == "odd":
        return 0.5 * (m + 1.5 + 1j * lam), 0.5 * (-m + 1.5 + 1j * lam), 1.5
    raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")


def _abs_gamma_ix(lam: float) -> float:
    return math.sqrt(gamma_magnitude_sq("ix", x=lam))


def asymptotic_amplitude(parity: ParityName, m, lam: float) -> float:
    """
    |A1| of the 1-z continuation of the raw 2F1, i.e. the amplitude |B| of

        sqrt(cosh tau) f(tau) ~ B e^{-i lambda tau} + B* e^{i lambda tau}.

    Equals Gamma(c) |Gamma(i lambda)| / |Gamma(a) Gamma(b)|.
    """
    lam = _check_lambda(lam)
    m = float(parse_rational(m))
    a, b, c = _params(parity, m, lam)
    log_ab = log_gamma_complex(a).real + log_gamma_complex(b).real
    gamma_c = math.sqrt(math.pi) if c == 0.5 else math.sqrt(math.pi) / 2.0
    return gamma_c * _abs_gamma_ix(lam) * math.exp(-log_ab)


def norm_even(m, lam: float) -> float:
    """
    |c_hat_{m lambda}| fixed by 8 pi^2 |A1_hat|^2 |c_hat|^2 = 1.

    Example:
        >>> round(norm_even(0.5, 1.0) * math.sqrt(2) * math.pi, 12)
        1.0
    """
    return 1.0 / (2.0 * _SQRT2 * math.pi * asymptotic_amplitude("even", m, lam))


def norm_odd(m, lam: float) -> float:
    """|c_bar_{m lambda}| fixed by 8 pi^2 |A1_bar|^2 |c_bar|^2 = 1."""
    return 1.0 / (2.0 * _SQRT2 * math.pi * asymptotic_amplitude("odd", m, lam))


def phase_even(m) -> complex:
    """Phase c_hat_m: (-1)^(m/2) for even m, (-1)^((m+1)/2) for odd m."""
    m = _nonneg_int(m)
    exponent = m // 2 if m % 2 == 0 else (m + 1) // 2
    return complex((-1) ** exponent)


def phase_odd(m) -> complex:
    """Phase c_bar_m: (-1)^(m/2) for even m, (-1)^((m-1)/2) for odd m."""
    m = _nonneg_int(m)
    exponent = m // 2 if m % 2 == 0 else (m - 1) // 2
    return complex((-1) ** exponent)


def _raw_phase(parity: ParityName, m) -> complex:
    """
    Phase of the raw functions: table value for m >= 0 integer,
    (-1)^m times the |m| value for negative integer m, 1 for half-integer m.
    """
    q = parse_rational(m)
    if q.denominator != 1:
        return 1 + 0j
    table = phase_even if parity == "even" else phase_odd
    if q >= 0:
        return table(q)
    return (-1) ** int(-q) * table(-q)


def _raw_profile(
    parity: ParityName, m: float, lam: float, tau: float, opts: EvalOptions
) -> complex:
    """cosh^{-(1/2 + i lambda)} (tanh)^[odd] 2F1(a, b; c; tanh^2), no constants."""
    a, b, c = _params(parity, m, lam)
    t = math.tanh(tau)
    value = gauss_2f1_tanh2(a, b, c, tau, opts, cosh_exponent=-(0.5 + 1j * lam))
    return value * t if parity == "odd" else value


def y_principal_raw(
    parity: ParityName, m, lam: float, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """
    Normalized even (hat) or odd (bar) principal-series function of weight m.

    Integer and half-integer m of either sign are accepted; the 2F1
    parameters are symmetric under m -> -m.
    """
    opts = opts or EvalOptions()
    spec = PrincipalSpec(lam, m, "even-raw" if parity == "even" else "odd-raw")
    mf = float(spec.m)
    norm = norm_even(mf, spec.lam) if parity == "even" else norm_odd(mf, spec.lam)
    value = (
        cmath.exp(1j * mf * phi)
        * _raw_phase(parity, spec.m)
        * norm
        * _raw_profile(parity, mf, spec.lam, tau, opts)
    )
    return ensure_finite(value, "principal-series function")


def z_factor(m, lam: float) -> float:
    """Z_m = 1 / prod_{r=1}^m sqrt(((2r-1)/2)^2 + lambda^2)."""
    m = _nonneg_int(m)
    lam = _check_lambda(lam)
    log_terms = (math.log(((2 * r - 1) / 2.0) ** 2 + lam * lam) for r in range(1, m + 1))
    return math.exp(-0.5 * math.fsum(log_terms))


def z_factor_gamma(m, lam: float, form: Literal["a", "b"] = "a") -> float:
    """
    Gamma-ratio forms of Z_m:

        a: 2^-m |G((-m + 1/2 + i lambda)/2)| / |G((m + 1/2 + i lambda)/2)|
        b: 2^-m |G((-m + 3/2 + i lambda)/2)| / |G((m + 3/2 + i lambda)/2)|
    """
    m = _nonneg_int(m)
    lam = _check_lambda(lam)
    shift = {"a": 0.5, "b": 1.5}.get(form)
    if shift is None:
        raise DomainError(f"form must be 'a' or 'b', got {form!r}")
    log_ratio = (
        log_gamma_complex(0.5 * (-m + shift + 1j * lam)).real
        - log_gamma_complex(0.5 * (m + shift + 1j * lam)).real
    )
    return math.exp(-m * math.log(2.0) + log_ratio)


def z_product_identity_residual(m, lam: float) -> float:
    """
    Relative residual of

        prod_{r=1}^m |(2r-1)/2 + i lambda|^2 = |G(m + 1/2 + i lambda)|^2 / |G(1/2 + i lambda)|^2.
    """
    m = _nonneg_int(m)
    lam = _check_lambda(lam)
    z = 1j * lam + 0.5
    log_ratio = 2.0 * (log_gamma_complex(z + m).real - log_gamma_complex(z).real)
    return abs(math.exp(-2.0 * math.log(z_factor(m, lam)) - log_ratio) - 1.0)


def _sequence_sum(
    seq: int, m: int, lam: float, tau: float, x: float, opts: EvalOptions, pfaff: bool
) -> complex:
    """
    sum_r (-1)^r (2y)^(N-2r) / (r! (N-2r)!) |G(a+j)|^2 / G(c0+j) 2F1(a+j, b_j; c0+j; z),
    j = m - r, N = m (seq 1) or m+1 (seq 2).

    pfaff=False: y = tanh tau, b_j = a, z = tanh^2 tau (profile form);
    pfaff=True:  y = x, b_j = a* + j, z = -x^2 (Legendre-analogue form).
    """
    if seq == 1:
        a, c0, top = 0.25 + 0.5j * lam, 0.5, m
    else:
        a, c0, top = 0.75 + 0.5j * lam, 1.5, m + 1
    y = x if pfaff else math.tanh(tau)
    re_parts = []
    im_parts = []
    for r in range(top // 2 + 1):
        j = m - r
        power = top - 2 * r
        log_mag = (
            2.0 * log_gamma_complex(a + j).real
            - math.lgamma(c0 + j)
            - math.lgamma(r + 1)
            - math.lgamma(power + 1)
        )
        if pfaff:
            f = gauss_2f1(Hyp2F1Params(a + j, a.conjugate() + j, c0 + j, -x * x), opts)
        else:
            f = gauss_2f1_tanh2(a + j, a, c0 + j, tau, opts)
        term = (-1) ** r * (2.0 * y) ** power * math.exp(log_mag) * f
        re_parts.append(term.real)
        im_parts.append(term.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def y_seq(
    seq: Sequence, m, lam: float, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """
    Ladder sequence Y1 (seq=1) or Y2 (seq=2) for integer m >= 0 by the
    explicit finite sums:

        Y1^m = m! Z_m / (2 sqrt2 pi |G(i lambda)|) e^{im phi} cosh^{-(1/2+i lambda)} sum(...)
        Y2^m = (m+1)! Z_m / (4 sqrt2 pi |G(i lambda)|) e^{im phi} cosh^{-(1/2+i lambda)} sum(...)

    Y1 runs through hat functions for even m and bar functions for odd m;
    Y2 the other way round.
    """
    opts = opts or EvalOptions()
    if seq not in (1, 2):
        raise DomainError(f"seq must be 1 or 2, got {seq!r}")
    m = _nonneg_int(m)
    lam = _check_lambda(lam)
    if seq == 1:
        front = math.lgamma(m + 1) - math.log(2.0 * _SQRT2 * math.pi)
    else:
        front = math.lgamma(m + 2) - math.log(4.0 * _SQRT2 * math.pi)
    scale = math.exp(front) * z_factor(m, lam) / _abs_gamma_ix(lam)
    total = _sequence_sum(seq, m, lam, float(tau), 0.0, opts, pfaff=False)
    value = scale * cmath.exp(1j * m * phi) * cosh_power(tau, -(0.5 + 1j * lam)) * total
    return ensure_finite(value, f"Y{seq}^m")


def y_seq_dispatch(
    seq: Sequence, m, lam: float, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """Y1/Y2 through the raw families: hat for (seq 1, even m) and (seq 2, odd m), else bar."""
    m = _nonneg_int(m)
    parity: ParityName = "even" if (m % 2 == 0) == (seq == 1) else "odd"
    return y_principal_raw(parity, m, lam, tau, phi, opts)


def legendre_p1(m, lam: float, x: float, opts: Optional[EvalOptions] = None) -> complex:
    """
    P1^m(x) = sqrt(pi) m! / |G(i lambda)| (1+x^2)^(m/2)
              sum_r (-1)^r (2x)^(m-2r) / (r!(m-2r)!) |G(a+j)|^2 / G(1/2+j)
                    2F1(a+j, a*+j; 1/2+j; -x^2),

    a = 1/4 + i lambda / 2, j = m - r. Y1 = Z_m e^{im phi} P1(sinh tau) / (2 sqrt2 pi^(3/2)).
    """
    opts = opts or EvalOptions()
    m = _nonneg_int(m)
    lam = _check_lambda(lam)
    x = float(x)
    front = 0.5 * math.log(math.pi) + math.lgamma(m + 1) + 0.5 * m * math.log1p(x * x)
    total = _sequence_sum(1, m, lam, 0.0, x, opts, pfaff=True)
    value = math.exp(front) / _abs_gamma_ix(lam) * total
    return ensure_finite(value, "P1^m")


def legendre_p2(m, lam: float, x: float, opts: Optional[EvalOptions] = None) -> complex:
    """
    P2^m(x) = sqrt(pi) (m+1)! / (4 |G(i lambda)|) (1+x^2)^(m/2)
              sum_r (-1)^r (2x)^(m+1-2r) / (r!(m+1-2r)!) |G(a'+j)|^2 / G(3/2+j)
                    2F1(a'+j, a'*+j; 3/2+j; -x^2),

    a' = 3/4 + i lambda / 2. Y2 = Z_m e^{im phi} P2(sinh tau) / (sqrt2 pi^(3/2)).
    """
    opts = opts or EvalOptions()
    m = _nonneg_int(m)
    lam = _check_lambda(lam)
    x = float(x)
    front = (
        0.5 * math.log(math.pi) + math.lgamma(m + 2) - math.log(4.0) + 0.5 * m * math.log1p(x * x)
    )
    total = _sequence_sum(2, m, lam, 0.0, x, opts, pfaff=True)
    value = math.exp(front) / _abs_gamma_ix(lam) * total
    return ensure_finite(value, "P2^m")


def y_principal_pfaff(
    parity: ParityName, lam: float, tau: float, phi: float = 0.0, opts: Optional[EvalOptions] = None
) -> complex:
    """
    Vacuum functions (m = 0) in Pfaff-transformed form, argument -sinh^2 tau:

        hat: |G(a)|^2 / (2 sqrt2 pi^(3/2) |G(i lambda)|) 2F1(a, a*; 1/2; -sinh^2 tau)
        bar: |G(a')|^2 / (sqrt2 pi^(3/2) |G(i lambda)|) sinh tau 2F1(a', a'*; 3/2; -sinh^2 tau)

    with a = 1/4 + i lambda/2 and a' = 3/4 + i lambda/2.
    """
    opts = opts or EvalOptions()
    lam = _check_lambda(lam)
    x = math.sinh(tau)
    if parity == "even":
        a, c, front, lead = 0.25 + 0.5j * lam, 0.5, 2.0 * _SQRT2, 1.0
    elif parity == "odd":
        a, c, front, lead = 0.75 + 0.5j * lam, 1.5, _SQRT2, x
    else:
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    scale = math.exp(2.0 * log_gamma_complex(a).real) / (
        front * math.pi ** 1.5 * _abs_gamma_ix(lam)
    )
    value = scale * lead * gauss_2f1(Hyp2F1Params(a, a.conjugate(), c, -x * x), opts)
    return ensure_finite(value, "vacuum (Pfaff form)")


@lru_cache(maxsize=64)
def _tu_expansion(kind: str, l: int, lam: float) -> PowerExpansion:
    """(-1)^l u^(l+1/2) d^l/dx^l [u^-1 (w^{i lambda} +- w^{-i lambda})]."""
    sign = 1.0 if kind == "T" else -1.0
    seed = PowerExpansion.monomial(1.0, 0, -1.0, 1j * lam) + PowerExpansion.monomial(
        sign, 0, -1.0, -1j * lam
    )
    return seed.derivative(l).times_u(l + 0.5).scaled((-1) ** l)


def legendre_t(
    l: int, lam: float, x: float, u: Optional[float] = None, log_w: Optional[float] = None
) -> complex:
    """
    T^l_lambda(x) = (-1)^l (1+x^2)^((2l+1)/4) d^l/dx^l
                    [(1+x^2)^(-1/2) ((sqrt(1+x^2)+x)^{i lambda} + (sqrt(1+x^2)-x)^{i lambda})].
    """
    l = _nonneg_int(l, "l")
    lam = _check_lambda(lam)
    return _tu_expansion("T", l, lam).evaluate(float(x), u, log_w)


def legendre_u(
    l: int, lam: float, x: float, u: Optional[float] = None, log_w: Optional[float] = None
) -> complex:
    """U^l_lambda: as legendre_t with the difference of the two powers."""
    l = _nonneg_int(l, "l")
    lam = _check_lambda(lam)
    return _tu_expansion("U", l, lam).evaluate(float(x), u, log_w)


def y_half(
    seq: Sequence, l: int, lam: float, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """
    Half-integer weight m = l + 1/2:

        seq 1: prod_{r<=l} (r^2+lambda^2)^(-1/2) e^{im phi} T^l(sinh tau) / (2 sqrt2 pi)
        seq 2: prod_{r<=l} (r^2+lambda^2)^(-1/2) e^{im phi} U^l(sinh tau) / (2i sqrt2 pi)

    At l = 0 these are cos(lambda tau) / (sqrt2 pi sqrt(cosh tau)) and the sine analogue.
    """
    if seq not in (1, 2):
        raise DomainError(f"seq must be 1 or 2, got {seq!r}")
    l = _nonneg_int(l, "l")
    lam = _check_lambda(lam)
    tau = float(tau)
    ladder = math.exp(-0.5 * math.fsum(math.log(r * r + lam * lam) for r in range(1, l + 1)))
    if seq == 1:
        profile = _tu_expansion("T", l, lam).evaluate_tau(tau) / (2.0 * _SQRT2 * math.pi)
    else:
        profile = _tu_expansion("U", l, lam).evaluate_tau(tau) / (2j * _SQRT2 * math.pi)
    value = ladder * cmath.exp(1j * (l + 0.5) * phi) * profile
    return ensure_finite(value, "half-integer principal function")


def y_principal_negative(
    seq: Sequence, m, lam: float, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """
    Negative weights by conjugation, Y^{-|m|} = (-1)^|m| [Y^{|m|}]*.

    Half-integer m = -(l + 1/2) uses the sign (-1)^l on the y_half family.
    """
    q = parse_rational(m)
    if q >= 0:
        raise DomainError(f"y_principal_negative needs m < 0, got m = {q}")
    if q.denominator == 1:
        n = int(-q)
        return (-1) ** n * y_seq(seq, n, lam, tau, phi, opts).conjugate()
    if q.denominator == 2:
        l = int(-q - parse_rational("1/2"))
        return (-1) ** l * y_half(seq, l, lam, tau, phi, opts).conjugate()
    raise DomainError(f"m must be an integer or half-integer, got {q}")


def y_principal(
    spec: PrincipalSpec, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """Evaluate any PrincipalSpec: raw families, integer and half-integer weights of either sign."""
    if spec.sequence in ("even-raw", "odd-raw"):
        parity: ParityName = "even" if spec.sequence == "even-raw" else "odd"
        return y_principal_raw(parity, spec.m, spec.lam, tau, phi, opts)
    seq = 1 if spec.sequence == "seq1" else 2
    if spec.m < 0:
        return y_principal_negative(seq, spec.m, spec.lam, tau, phi, opts)
    if spec.is_half_integer:
        return y_half(seq, int(spec.m - parse_rational("1/2")), spec.lam, tau, phi, opts)
    return y_seq(seq, spec.m, spec.lam, tau, phi, opts)


def principal_profile(
    parity: ParityName, m, lam: float, tau: float, opts: Optional[EvalOptions] = None
) -> complex:
    """Unnormalized raw tau-profile cosh^{-(1/2+i lambda)} [tanh] 2F1(.; tanh^2)."""
    opts = opts or EvalOptions()
    lam = _check_lambda(lam)
    return _raw_profile(parity, float(parse_rational(m)), lam, float(tau), opts)


def principal_envelope_amplitude(
    parity: ParityName, m, lam: float, tau0: float, opts: Optional[EvalOptions] = None
) -> float:
    """
    Oscillation amplitude of sqrt(cosh tau) f(tau) measured from a
    quarter-period pair tau0, tau0 + pi/(2 lambda); tends to 2|B| = 2|A1|.
    """
    lam = _check_lambda(lam)

    def g(tau: float) -> float:
        value = principal_profile(parity, m, lam, tau, opts)
        return (value * math.exp(0.5 * log_cosh(tau))).real

    return math.hypot(g(tau0), g(tau0 + math.pi / (2.0 * lam)))


def _supplementary_params(spec: SupplementarySpec) -> Tuple[float, float, float]:
    m, gamma = float(spec.m), spec.gamma
    if spec.parity == "even":
        return 0.5 * (m + 0.5 + gamma), 0.5 * (-m + 0.5 + gamma), 0.5
    return 0.5 * (m + 1.5 + gamma), 0.5 * (-m + 1.5 + gamma), 1.5


def y_supplementary(
    spec: SupplementarySpec, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """
    Unnormalized supplementary-series function (constant 1):

        even: e^{im phi} cosh^{-(1/2+gamma)} 2F1((m+1/2+gamma)/2, (-m+1/2+gamma)/2; 1/2; t^2)
        odd:  e^{im phi} t cosh^{-(1/2+gamma)} 2F1((m+3/2+gamma)/2, (-m+3/2+gamma)/2; 3/2; t^2)

    with t = tanh tau.
    """
    opts = opts or EvalOptions()
    a, b, c = _supplementary_params(spec)
    t = math.tanh(tau)
    value = gauss_2f1_tanh2(a, b, c, tau, opts, cosh_exponent=-(0.5 + spec.gamma))
    if spec.parity == "odd":
        value *= t
    return ensure_finite(cmath.exp(1j * spec.m * phi) * value, "supplementary-series function")


def supplementary_coefficients(spec: SupplementarySpec) -> Tuple[float, float]:
    """Real continuation coefficients (A1, A2) of the supplementary 2F1."""
    a1, a2 = continuation_coefficients(*_supplementary_params(spec))
    return a1.real, a2.real


def supplementary_envelope(spec: SupplementarySpec, tau: float) -> float:
    """
    Large-|tau| form cosh^{-1/2} [A1 cosh^{-gamma} + A2 cosh^{gamma}]
    (times sign(tau) for the odd family), at phi = 0.
    """
    a1, a2 = supplementary_coefficients(spec)
    lc = log_cosh(tau)
    value = math.exp(-0.5 * lc) * (a1 * math.exp(-spec.gamma * lc) + a2 * math.exp(spec.gamma * lc))
    if spec.parity == "odd" and tau < 0:
        value = -value
    return value

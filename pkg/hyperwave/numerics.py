"""
Complex special-function kernel.

Complex log-gamma, closed-form gamma magnitudes, the Gauss hypergeometric
function 2F1 for real z < 1 with the 1-z continuation and the Pfaff
transformation, its derivatives, and the sech-power integral ratio used by
the discrete-series normalisation.

All functions are pure; values returned are always finite (NaN or infinity
raises `NonFiniteError`).
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Tuple, Union

import numpy as np
from scipy import special

from .config import EvalOptions
from .exceptions import (
    ConvergenceError,
    DomainError,
    GammaPoleError,
    NonFiniteError,
    ParameterPoleError,
)

logger = logging.getLogger(__name__)

Number = Union[int, float, complex]

# Integer detection slack; parameters here are built from halves and quarters.
_INT_EPS = 1e-12
_SMALL_TERMS_REQUIRED = 3


def ensure_finite(value: Number, what: str) -> complex:
    """Return value as complex, raising NonFiniteError on NaN/inf."""
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteError(f"{what} is not finite: {value!r}")
    return value


def nonpositive_integer(w: Number) -> Optional[int]:
    """Return n >= 0 if w == -n (to rounding), else None."""
    w = complex(w)
    if abs(w.imag) > _INT_EPS:
        return None
    nearest = round(w.real)
    if nearest <= 0 and abs(w.real - nearest) <= _INT_EPS * max(1.0, abs(w.real)):
        return -int(nearest)
    return None


def is_integer(w: Number) -> bool:
    w = complex(w)
    if abs(w.imag) > _INT_EPS:
        return False
    return abs(w.real - round(w.real)) <= _INT_EPS * max(1.0, abs(w.real))


def log_gamma_complex(z: Number) -> complex:
    """
    Principal-branch log Gamma(z) for complex z.

    Raises:
        GammaPoleError: z is a non-positive integer.
    """
    if nonpositive_integer(z) is not None:
        raise GammaPoleError(f"Gamma has a pole at z = {complex(z).real:g}")
    return ensure_finite(special.loggamma(complex(z)), f"log Gamma({z})")


def gamma_complex(z: Number) -> complex:
    return cmath.exp(log_gamma_complex(z))


def gamma_magnitude_sq(
    kind: Literal["half-plus-ix", "ix", "general"],
    x: Optional[float] = None,
    z: Optional[Number] = None,
) -> float:
    """
    |Gamma(.)|^2 through the closed forms

        |Gamma(1/2 + ix)|^2 = pi / cosh(pi x)
        |Gamma(ix)|^2       = pi / (x sinh(pi x))

    or, for kind="general", through log_gamma_complex(z).
    """
    if kind == "general":
        if z is None:
            raise DomainError("kind='general' requires z")
        return math.exp(2.0 * log_gamma_complex(z).real)
    if x is None:
        raise DomainError(f"kind={kind!r} requires x")
    ax = abs(float(x))
    # exp(-pi|x|) forms avoid overflow of cosh/sinh for large |x|
    decay = math.exp(-math.pi * ax)
    if kind == "half-plus-ix":
        return 2.0 * math.pi * decay / (1.0 + decay * decay)
    if kind == "ix":
        if ax == 0.0:
            raise GammaPoleError("|Gamma(ix)|^2 has a pole at x = 0")
        return 2.0 * math.pi * decay / (ax * -math.expm1(-2.0 * math.pi * ax))
    raise DomainError(f"Unknown gamma magnitude kind: {kind!r}")


def gamma_ratio(numerator: Iterable[Number], denominator: Iterable[Number]) -> complex:
    """
    prod Gamma(numerator) / prod Gamma(denominator).

    A pole in the denominator makes the ratio exactly zero; a pole in the
    numerator raises GammaPoleError.
    """
    numerator = [complex(w) for w in numerator]
    denominator = [complex(w) for w in denominator]
    if any(nonpositive_integer(w) is not None for w in denominator):
        for w in numerator:
            log_gamma_complex(w)
        return 0j
    log_sum = sum(log_gamma_complex(w) for w in numerator) - sum(
        log_gamma_complex(w) for w in denominator
    )
    return ensure_finite(cmath.exp(log_sum), "gamma ratio")


def pochhammer(a: Number, n: int) -> complex:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise DomainError(f"Pochhammer order must be >= 0, got {n}")
    a = complex(a)
    result = 1 + 0j
    for j in range(n):
        result *= a + j
    return result


@dataclass(frozen=True)
class Hyp2F1Params:
    """
    Arguments of 2F1(a, b; c; z) with complex parameters and real z < 1.

    c may be a non-positive integer only when the series terminates before
    the pole, i.e. a or b is a non-positive integer not below c.

    `log_complement`, when given, is log(1 - z) computed without cancellation
    (for z = tanh^2 tau it is -2 log cosh tau); z itself may then have rounded
    to 1 and 1 - z underflowed to 0.
    """

    a: complex
    b: complex
    c: complex
    z: float
    log_complement: Optional[float] = None

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = ensure_finite(getattr(self, name), f"2F1 parameter {name}")
            object.__setattr__(self, name, value)
        z = float(self.z)
        if not math.isfinite(z):
            raise DomainError(f"2F1 argument must be finite, got {self.z!r}")
        if self.log_complement is not None:
            log_w = float(self.log_complement)
            if not math.isfinite(log_w):
                raise DomainError(f"2F1 requires finite log(1 - z), got {self.log_complement!r}")
            object.__setattr__(self, "log_complement", log_w)
        elif z >= 1.0:
            raise DomainError(f"2F1 requires real z < 1, got z = {z!r}")
        object.__setattr__(self, "z", z)
        c_pole = nonpositive_integer(self.c)
        if c_pole is not None:
            degree = self.terminating_degree()
            if degree is None or degree > c_pole:
                raise ParameterPoleError(
                    f"2F1 lower parameter c = {self.c.real:g} is a non-positive integer "
                    "and the series does not terminate before the pole"
                )

    def terminating_degree(self) -> Optional[int]:
        """Polynomial degree when a or b is a non-positive integer."""
        candidates = (nonpositive_integer(self.a), nonpositive_integer(self.b))
        degrees = [d for d in candidates if d is not None]
        return min(degrees) if degrees else None

    @property
    def log_one_minus_z(self) -> float:
        if self.log_complement is not None:
            return self.log_complement
        return math.log1p(-self.z)

    def shifted(self, n: int) -> "Hyp2F1Params":
        return Hyp2F1Params(self.a + n, self.b + n, self.c + n, self.z, self.log_complement)


def _power_series(
    a: complex, b: complex, c: complex, z: float, opts: EvalOptions, degree: Optional[int] = None
) -> Tuple[complex, int]:
    """
    Direct Gauss series with compensated (fsum) accumulation.

    Stops after `degree` terms for a terminating series, otherwise once
    three consecutive terms fall below series_tol relative to the partial sum.
    """
    term = 1 + 0j
    re_terms = [1.0]
    im_terms = [0.0]
    running = 1 + 0j
    if degree is not None:
        for n in range(degree):
            term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
            re_terms.append(term.real)
            im_terms.append(term.imag)
        return complex(math.fsum(re_terms), math.fsum(im_terms)), degree + 1

    small = 0
    for n in range(int(opts.max_terms)):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        re_terms.append(term.real)
        im_terms.append(term.imag)
        running += term
        if abs(term) <= opts.series_tol * abs(running):
            small += 1
            if small >= _SMALL_TERMS_REQUIRED:
                if n + 1 > 0.9 * opts.max_terms:
                    logger.warning(
                        "2F1 series needed %d of %d allowed terms", n + 1, opts.max_terms
                    )
                return complex(math.fsum(re_terms), math.fsum(im_terms)), n + 2
        else:
            small = 0
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) series did not converge within {opts.max_terms} terms"
    )


def continuation_coefficients(a: Number, b: Number, c: Number) -> Tuple[complex, complex]:
    """
    Coefficients of the z -> 1-z connection formula

        F(a,b;c;z) = A1 F(a,b;a+b-c+1;1-z)
                   + A2 (1-z)^(c-a-b) F(c-a,c-b;c-a-b+1;1-z)

    with A1 = G(c)G(c-a-b)/(G(c-a)G(c-b)), A2 = G(c)G(a+b-c)/(G(a)G(b)).

    Raises:
        ParameterPoleError: c-a-b is an integer.
    """
    a, b, c = complex(a), complex(b), complex(c)
    s = c - a - b
    if is_integer(s):
        raise ParameterPoleError(
            f"c-a-b = {s.real:g} is an integer; the 1-z continuation coefficients are singular"
        )
    a1 = gamma_ratio([c, s], [c - a, c - b])
    a2 = gamma_ratio([c, -s], [a, b])
    return a1, a2


def _continued(
    a: complex, b: complex, c: complex, log_w: float, opts: EvalOptions, log_scale: complex
) -> complex:
    """
    Connection formula with log(1 - z) supplied directly.

    exp(log_scale) is folded into each branch before exponentiation, so a
    decaying prefactor and the w^(c-a-b) growth cancel in log space.
    """
    s = c - a - b
    a1, a2 = continuation_coefficients(a, b, c)
    w = math.exp(log_w)
    value = 0j
    if a1 != 0:
        f1, n1 = _power_series(a, b, 1 - s, w, opts)
        value += a1 * cmath.exp(log_scale) * f1
        logger.debug("2F1 continuation: first branch used %d terms", n1)
    if a2 != 0:
        f2, n2 = _power_series(c - a, c - b, 1 + s, w, opts)
        value += a2 * cmath.exp(s * log_w + log_scale) * f2
        logger.debug("2F1 continuation: second branch used %d terms", n2)
    return value


def _route(p: Hyp2F1Params, opts: EvalOptions, log_scale: complex = 0j) -> complex:
    """exp(log_scale) * 2F1(p)."""
    a, b, c, z = p.a, p.b, p.c, p.z
    if z == 0.0:
        return ensure_finite(cmath.exp(log_scale), "2F1")

    degree = p.terminating_degree()
    if degree is not None:
        value, _ = _power_series(a, b, c, z, opts, degree=degree)
        return ensure_finite(cmath.exp(log_scale) * value, "2F1")

    if abs(z) <= opts.transform_threshold:
        value, nterms = _power_series(a, b, c, z, opts)
        logger.debug("2F1 direct series at z=%.6g used %d terms", z, nterms)
        return ensure_finite(cmath.exp(log_scale) * value, "2F1")

    log_w = p.log_one_minus_z
    if z < 0.0:
        logger.debug("2F1 Pfaff transformation at z=%.6g", z)
        inner = Hyp2F1Params(a, c - b, c, z / (z - 1.0), log_complement=-log_w)
        return _route(inner, opts, log_scale - a * log_w)

    if is_integer(c - a - b):
        try:
            value, nterms = _power_series(a, b, c, z, opts)
        except ConvergenceError as e:
            raise ParameterPoleError(
                f"c-a-b = {(c - a - b).real:g} is an integer, so the 1-z continuation is "
                f"singular, and the direct series at z={z:g} did not converge"
            ) from e
        logger.debug("2F1 degenerate c-a-b, direct series at z=%.6g used %d terms", z, nterms)
        return ensure_finite(cmath.exp(log_scale) * value, "2F1")

    return ensure_finite(_continued(a, b, c, log_w, opts, log_scale), "2F1")


def gauss_2f1(p: Hyp2F1Params, opts: Optional[EvalOptions] = None) -> complex:
    """
    Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.

    Routes:
      - terminating series (a or b a non-positive integer): finite sum for any z;
      - |z| <= transform_threshold: direct power series;
      - z > transform_threshold: 1-z continuation, or, when c-a-b is an
        integer, the direct series with compensated summation;
      - z < -transform_threshold: Pfaff transformation to z/(z-1).

    Raises:
        ConvergenceError: tail bound not met within max_terms.
        ParameterPoleError: c-a-b integer and the direct series did not converge.

    Example:
        >>> round(gauss_2f1(Hyp2F1Params(1, 1, 2, 0.5)).real, 10)
        1.3862943611
    """
    return _route(p, opts or EvalOptions())


def gauss_2f1_tanh2(
    a: Number,
    b: Number,
    c: Number,
    tau: float,
    opts: Optional[EvalOptions] = None,
    cosh_exponent: Number = 0.0,
) -> complex:
    """
    cosh(tau)^cosh_exponent * 2F1(a, b; c; tanh^2 tau).

    1 - z = sech^2 tau is carried as its logarithm, so the continuation stays
    accurate after tanh^2 tau has rounded to 1 and sech^2 tau has underflowed.
    The cosh power is applied inside the continuation branches.
    """
    tau = float(tau)
    t = math.tanh(tau)
    log_c = log_cosh(tau)
    p = Hyp2F1Params(a, b, c, t * t, log_complement=-2.0 * log_c)
    return _route(p, opts or EvalOptions(), complex(cosh_exponent) * log_c)


def gauss_2f1_deriv(p: Hyp2F1Params, n: int, opts: Optional[EvalOptions] = None) -> complex:
    """
    n-th z-derivative through the shift formula

        d^n/dz^n F(a,b;c;z) = (a)_n (b)_n / (c)_n  F(a+n, b+n; c+n; z).
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"Derivative order must be a non-negative integer, got {n!r}")
    if n == 0:
        return gauss_2f1(p, opts)
    numerator = pochhammer(p.a, n) * pochhammer(p.b, n)
    if numerator == 0:
        return 0j
    denominator = pochhammer(p.c, n)
    if denominator == 0:
        raise ParameterPoleError(f"(c)_{n} vanishes for c = {p.c.real:g}")
    return ensure_finite(numerator / denominator * gauss_2f1(p.shifted(n), opts), "2F1 derivative")


def generalized_double_factorial_ratio(k: float) -> float:
    """
    (2k-1)!!/(2k)!! continued through Gamma, i.e. (2/pi) * int_0^inf sech^(2k+1) x dx.

    Integer k uses the exact finite product; other k use
    Gamma(k+1/2) / (sqrt(pi) Gamma(k+1)).
    """
    k = float(k)
    if not k > -0.5:
        raise DomainError(f"sech-power integral diverges for k <= -1/2, got k = {k:g}")
    if k == int(k):
        return math.prod((2 * j - 1) / (2 * j) for j in range(1, int(k) + 1))
    return math.exp(special.gammaln(k + 0.5) - special.gammaln(k + 1.0)) / math.sqrt(math.pi)


def duplication_residual(z: Number) -> float:
    """
    Relative residual of Gamma(z) = 2^(z-1)/sqrt(pi) Gamma(z/2) Gamma((z+1)/2).
    """
    z = complex(z)
    lhs = log_gamma_complex(z)
    rhs = (
        (z - 1) * math.log(2.0)
        - 0.5 * math.log(math.pi)
        + log_gamma_complex(z / 2)
        + log_gamma_complex((z + 1) / 2)
    )
    return abs(cmath.exp(rhs - lhs) - 1.0)


def contiguous_derivative_residual(
    p: Hyp2F1Params, n: int, opts: Optional[EvalOptions] = None
) -> float:
    """
    Relative residual of

        d^n/dz^n [(1-z)^(a+n-1) F(a,b;c;z)]
            = (-1)^n (a)_n (c-b)_n / (c)_n (1-z)^(a-1) F(a+n, b; c+n; z)

    with the left side taken by central differences (n = 1 or 2).
    """
    opts = opts or EvalOptions()
    if n not in (1, 2):
        raise DomainError(f"Finite-difference check supports n = 1 or 2, got {n}")
    a, b, c = p.a, p.b, p.c

    def lhs_fn(z: float) -> complex:
        return cmath.exp((a + n - 1) * math.log1p(-z)) * gauss_2f1(Hyp2F1Params(a, b, c, z), opts)

    h = opts.fd_step if n == 1 else opts.fd_step_nested
    if n == 1:
        lhs = (lhs_fn(p.z + h) - lhs_fn(p.z - h)) / (2 * h)
    else:
        lhs = (lhs_fn(p.z + h) - 2 * lhs_fn(p.z) + lhs_fn(p.z - h)) / (h * h)
    coef = (-1) ** n * pochhammer(a, n) * pochhammer(c - b, n) / pochhammer(c, n)
    rhs = coef * cmath.exp((a - 1) * math.log1p(-p.z)) * gauss_2f1(
        Hyp2F1Params(a + n, b, c + n, p.z), opts
    )
    return abs(lhs - rhs) / max(abs(rhs), 1e-300)


def log_cosh(tau: float) -> float:
    """log cosh(tau) without overflow for large |tau|."""
    t = abs(float(tau))
    return t + math.log1p(math.exp(-2.0 * t)) - math.log(2.0)


def cosh_power(tau: float, p: Number) -> complex:
    """cosh(tau)^p for real or complex p, formed in log space."""
    return cmath.exp(complex(p) * log_cosh(tau))


def sample_points(
    rng: np.random.Generator, count: int, tau_max: float = 2.0
) -> np.ndarray:
    """Random (tau, phi) pairs, tau in [-tau_max, tau_max], phi in [0, 2 pi)."""
    tau = rng.uniform(-tau_max, tau_max, size=count)
    phi = rng.uniform(0.0, 2.0 * math.pi, size=count)
    return np.column_stack([tau, phi])

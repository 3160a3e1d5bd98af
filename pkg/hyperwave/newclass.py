"""
The non-normalizable family Y^k_k with m = +-k.

    Y^{+-k}_k(tau, phi) = e^{+-ik phi} g_k(tanh tau),
    g_k(x) = (1-x^2)^(-k/2) [alpha + beta * int (1-x^2)^(k-1/2) dx].

The antiderivative is taken in closed form, so both the x-form and the
tau-form share one implementation parametrised by x, sqrt(1-x^2) and arcsin x.
"""

import cmath
import math
from typing import Literal, Optional

from .config import EvalOptions
from .exceptions import DomainError, NonFiniteError
from .numerics import ensure_finite, log_cosh
from .specs import NewClassSpec

# Beyond this |tau| arcsin(tanh tau) is taken from the arctan form.
SATURATION_TAU = 20.0


def arcsin_tanh(tau: float) -> float:
    """
    arcsin(tanh tau), through sign(tau) (pi/2 - 2 arctan(e^-|tau|)) once tanh
    saturates; the decaying exponential keeps it finite for any tau.

    Below the saturation point the equivalent arctan(sinh tau) is used: asin
    loses digits as tanh tau approaches 1.
    """
    tau = float(tau)
    if abs(tau) > SATURATION_TAU:
        return math.copysign(math.pi / 2.0 - 2.0 * math.atan(math.exp(-abs(tau))), tau)
    return math.atan(math.sinh(tau))


def _double_factorial_odd(k: int) -> float:
    """(2k-1)!! with (-1)!! = 1."""
    return float(math.prod(range(2 * k - 1, 0, -2))) if k > 0 else 1.0


def _antiderivative_parts(k: int, x: float, root: float, arcsin_x: float, form: str) -> float:
    """int_0^x (1-t^2)^(k-1/2) dt, with root = sqrt(1-x^2)."""
    one_minus = root * root
    if k == 0:
        return arcsin_x
    if k == 1:
        return 0.5 * (x * root + arcsin_x)
    if form == "b":
        dfact = _double_factorial_odd(k)
        head = one_minus ** (k - 1)
        inner = math.fsum(
            2.0 ** r * math.factorial(r - 1) / _double_factorial_odd(r) * one_minus ** (r - 1)
            for r in range(1, k)
        )
        tail = dfact / (2.0 ** k * math.factorial(k - 1)) * inner
        lead = dfact / (2.0 ** k * math.factorial(k))
        return x * root / (2 * k) * (head + tail) + lead * arcsin_x
    if form == "a":
        # reduction I_j = x(1-x^2)^(j-1/2)/(2j) + (2j-1)/(2j) I_{j-1}, I_0 = arcsin x
        total = arcsin_x
        for j in range(1, k + 1):
            total = x * root ** (2 * j - 1) / (2 * j) + (2 * j - 1) / (2 * j) * total
        return total
    raise DomainError(f"form must be 'a' or 'b', got {form!r}")


def antiderivative(k: int, x: float, form: Literal["a", "b"] = "b") -> float:
    """
    Closed form of int_0^x (1-t^2)^(k-1/2) dt for integer k >= 0 and |x| < 1.

    form='b' is the compact bracket with a single arcsin term, form='a' the
    unrolled reduction formula; both agree for every k.
    """
    spec = NewClassSpec(k)
    x = float(x)
    if not abs(x) < 1.0:
        raise DomainError(f"new-class functions need |x| < 1, got x = {x!r}")
    return _antiderivative_parts(spec.k, x, math.sqrt((1.0 - x) * (1.0 + x)), math.asin(x), form)


def g_k(spec: NewClassSpec, x: float) -> float:
    """
    g_k(x) = (1-x^2)^(-k/2) [alpha + beta * int_0^x (1-t^2)^(k-1/2) dt].

    Example:
        >>> g_k(NewClassSpec(0, alpha=1.0, beta=0.0), 0.3)
        1.0
    """
    x = float(x)
    if not abs(x) < 1.0:
        raise DomainError(f"new-class functions need |x| < 1, got x = {x!r}")
    one_minus = (1.0 - x) * (1.0 + x)
    integral = 0.0
    if spec.beta:
        integral = _antiderivative_parts(spec.k, x, math.sqrt(one_minus), math.asin(x), "b")
    return one_minus ** (-spec.k / 2.0) * (spec.alpha + spec.beta * integral)


def profile(spec: NewClassSpec, tau: float) -> float:
    """f^k_k(tau) = g_k(tanh tau), evaluated with sech tau and arcsin(tanh tau) directly."""
    tau = float(tau)
    integral = 0.0
    if spec.beta:
        sech = math.exp(-log_cosh(tau))
        integral = _antiderivative_parts(spec.k, math.tanh(tau), sech, arcsin_tanh(tau), "b")
    try:
        growth = math.exp(spec.k * log_cosh(tau))
    except OverflowError as e:
        raise NonFiniteError(
            f"new-class profile cosh^{spec.k} overflows at tau = {tau:g}"
        ) from e
    return growth * (spec.alpha + spec.beta * integral)


def y_newclass(
    spec: NewClassSpec, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """e^{+-ik phi} f^k_k(tau), the sign taken from spec.sign."""
    value = cmath.exp(1j * spec.m * phi) * profile(spec, tau)
    return ensure_finite(value, "new-class function")


def y_newclass_tilde(
    k: int, tau: float, phi: float, alpha: float = 0.0, beta: float = 1.0
) -> complex:
    """The m = -k member e^{-ik phi} f^k_k(tau)."""
    return y_newclass(NewClassSpec(k, alpha, beta, sign=-1), tau, phi)


def ode_residual_newclass(
    spec: NewClassSpec, tau: float, opts: Optional[EvalOptions] = None
) -> float:
    """
    Central-difference residual of

        f'' + tanh(tau) f' - (k^2 tanh^2 tau + k) f = 0.
    """
    opts = opts or EvalOptions()
    h = opts.fd_step
    tau = float(tau)
    if tau + h == tau:
        raise DomainError(f"fd_step {h:g} underflows at tau = {tau:g}")
    f0 = profile(spec, tau)
    fp = profile(spec, tau + h)
    fm = profile(spec, tau - h)
    d1 = (fp - fm) / (2 * h)
    d2 = (fp - 2 * f0 + fm) / (h * h)
    t = math.tanh(tau)
    k = spec.k
    return abs(d2 + t * d1 - (k * k * t * t + k) * f0)

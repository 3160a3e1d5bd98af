"""
su(1,1) generators as differential operators on the hyperboloid.

    K+ = -e^{i phi} (d/dtau + i tanh tau d/dphi)
    K- =  e^{-i phi} (d/dtau - i tanh tau d/dphi)
    K3 = -i d/dphi
    C2 = d^2/dtau^2 + tanh tau d/dtau - sech^2 tau d^2/dphi^2

tau-derivatives are second-order central differences; phi-derivatives are
exact whenever the function declares its e^{im phi} weight. The inner
product integrates cosh tau F* G over the hyperboloid with scipy's
adaptive quadrature.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Optional

from scipy import integrate
from typing_extensions import Self

from .config import EvalOptions
from .exceptions import ConvergenceError, DomainError
from .numerics import ensure_finite, log_cosh

logger = logging.getLogger(__name__)

Callback = Callable[[float, float], complex]


@dataclass(frozen=True)
class SurfaceFunction:
    """
    A function on the hyperboloid.

    Args:
        evaluate: Callback (tau, phi) -> complex, free of internal mutable state.
        m: Declared weight when the function is e^{im phi} f(tau); enables exact
            phi-derivatives and the exact phi-integral.
        tau_max: Largest |tau| on which the callback is smooth.
        name: Label used in reports.

    Example:
        >>> f = SurfaceFunction(lambda tau, phi: cmath.exp(2j * phi), m=2)
        >>> abs(apply_k3(f, 0.0, 0.3) - 2 * f(0.0, 0.3)) < 1e-12
        True
    """

    evaluate: Callback
    m: Optional[float] = None
    tau_max: float = math.inf
    name: str = ""

    def __call__(self, tau: float, phi: float) -> complex:
        return complex(self.evaluate(tau, phi))

    def without_weight(self) -> Self:
        """Same callback with phi-derivatives taken numerically."""
        return replace(self, m=None)


@dataclass(frozen=True)
class VerifyReport:
    """
    Outcome of one relation check; passed is residual <= tolerance.
    """

    name: str
    expected: complex
    observed: complex
    residual: float
    tolerance: float
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    @classmethod
    def compare(
        cls,
        name: str,
        expected: complex,
        observed: complex,
        tolerance: float,
        scale: float = 0.0,
        params: Optional[Dict[str, Any]] = None,
    ) -> Self:
        """
        Build a report with residual |observed - expected| / max(|expected|, scale),
        or the absolute difference when scale is 0 and expected vanishes.
        """
        diff = abs(complex(observed) - complex(expected))
        denom = max(abs(complex(expected)), scale)
        residual = diff / denom if denom > 0 else diff
        return cls(
            name, complex(expected), complex(observed), residual, tolerance, dict(params or {})
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "expected": {"re": self.expected.real, "im": self.expected.imag},
            "observed": {"re": self.observed.real, "im": self.observed.imag},
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "params": {
                k: v if isinstance(v, (int, float, bool)) else str(v)
                for k, v in self.params.items()
            },
        }


def _step(h: float, tau: float) -> float:
    if not (h > 0 and math.isfinite(h)) or tau + h == tau:
        raise DomainError(f"finite-difference step {h!r} underflows at tau = {tau:g}")
    return h


def d_tau(f: SurfaceFunction, tau: float, phi: float, h: float) -> complex:
    h = _step(h, tau)
    return (f(tau + h, phi) - f(tau - h, phi)) / (2.0 * h)


def d2_tau(f: SurfaceFunction, tau: float, phi: float, h: float) -> complex:
    h = _step(h, tau)
    return (f(tau + h, phi) - 2.0 * f(tau, phi) + f(tau - h, phi)) / (h * h)


def d_phi(f: SurfaceFunction, tau: float, phi: float, h: float) -> complex:
    if f.m is not None:
        return 1j * f.m * f(tau, phi)
    h = _step(h, phi)
    return (f(tau, phi + h) - f(tau, phi - h)) / (2.0 * h)


def d2_phi(f: SurfaceFunction, tau: float, phi: float, h: float) -> complex:
    if f.m is not None:
        return -(f.m ** 2) * f(tau, phi)
    h = _step(h, phi)
    return (f(tau, phi + h) - 2.0 * f(tau, phi) + f(tau, phi - h)) / (h * h)


def apply_k3(
    f: SurfaceFunction, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """K3 f = -i df/dphi."""
    opts = opts or EvalOptions()
    return ensure_finite(-1j * d_phi(f, tau, phi, opts.fd_step), "K3 f")


def apply_kplus(
    f: SurfaceFunction, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """K+ f = -e^{i phi} (df/dtau + i tanh tau df/dphi)."""
    opts = opts or EvalOptions()
    value = -cmath.exp(1j * phi) * (
        d_tau(f, tau, phi, opts.fd_step) + 1j * math.tanh(tau) * d_phi(f, tau, phi, opts.fd_step)
    )
    return ensure_finite(value, "K+ f")


def apply_kminus(
    f: SurfaceFunction, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """K- f = e^{-i phi} (df/dtau - i tanh tau df/dphi)."""
    opts = opts or EvalOptions()
    value = cmath.exp(-1j * phi) * (
        d_tau(f, tau, phi, opts.fd_step) - 1j * math.tanh(tau) * d_phi(f, tau, phi, opts.fd_step)
    )
    return ensure_finite(value, "K- f")


def apply_casimir(
    f: SurfaceFunction, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """C2 f with the second tau-derivative at fd_step_nested."""
    opts = opts or EvalOptions()
    sech2 = math.exp(-2.0 * log_cosh(tau))
    value = (
        d2_tau(f, tau, phi, opts.fd_step_nested)
        + math.tanh(tau) * d_tau(f, tau, phi, opts.fd_step)
        - sech2 * d2_phi(f, tau, phi, opts.fd_step_nested)
    )
    return ensure_finite(value, "C2 f")


def lifted(
    op: Callable[..., complex], f: SurfaceFunction, opts: EvalOptions, shift: int = 0
) -> SurfaceFunction:
    """op applied to f, as a SurfaceFunction of weight m + shift."""
    m = None if f.m is None else f.m + shift
    return SurfaceFunction(
        lambda tau, phi: op(f, tau, phi, opts), m=m, tau_max=f.tau_max, name=f.name
    )


def commutator_residuals(
    f: SurfaceFunction, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> Dict[str, float]:
    """
    Nested-difference residuals of [K3, K+] f = K+ f and [K+, K-] f = -2 K3 f.

    phi-derivatives are taken numerically so the commutators are not trivial.
    """
    opts = opts or EvalOptions()
    nested = opts.with_overrides(fd_step=opts.fd_step_nested)
    g = f.without_weight()
    kp = lifted(apply_kplus, g, nested)
    km = lifted(apply_kminus, g, nested)
    k3 = lifted(apply_k3, g, nested)
    k3_kp = apply_k3(kp, tau, phi, nested) - apply_kplus(k3, tau, phi, nested)
    kp_km = apply_kplus(km, tau, phi, nested) - apply_kminus(kp, tau, phi, nested)
    return {
        "k3-kplus": abs(k3_kp - kp(tau, phi)),
        "kplus-kminus": abs(kp_km + 2.0 * k3(tau, phi)),
    }


def casimir_factorised(
    f: SurfaceFunction, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """(K3 (K3 + 1) - K- K+) f by nested differences."""
    opts = opts or EvalOptions()
    nested = opts.with_overrides(fd_step=opts.fd_step_nested)
    k3 = lifted(apply_k3, f, nested)
    kp = lifted(apply_kplus, f, nested, shift=1)
    return apply_k3(k3, tau, phi, nested) + k3(tau, phi) - apply_kminus(kp, tau, phi, nested)


def laplace_beltrami(
    p: Callable[[float, float, float], complex],
    a: float,
    tau: float,
    phi: float,
    opts: Optional[EvalOptions] = None,
    m: Optional[float] = None,
) -> complex:
    """
    Laplacian of a volume function p(a, tau, phi) on the region outside the light cone:

        Delta p = (1/a) d^2/da^2 (a p) - C2 p / a^2.
    """
    opts = opts or EvalOptions()
    if not a > 0:
        raise DomainError(f"volume functions need a > 0, got a = {a!r}")
    h = opts.fd_step_nested
    if a - h <= 0:
        raise DomainError(f"step {h:g} too large for a = {a:g}")
    radial = (
        (a + h) * p(a + h, tau, phi) - 2.0 * a * p(a, tau, phi) + (a - h) * p(a - h, tau, phi)
    ) / (h * h)
    shell = SurfaceFunction(lambda t, ph: p(a, t, ph), m=m)
    return ensure_finite(radial / a - apply_casimir(shell, tau, phi, opts) / (a * a), "Laplacian")


def _tau_integral(
    integrand: Callable[[float], complex], lo: float, hi: float, opts: EvalOptions
) -> complex:
    points = [t for t in (-4.0, 0.0, 4.0) if lo < t < hi]
    kwargs = dict(epsabs=opts.quad_tol, epsrel=opts.quad_tol, limit=400, points=points or None)
    re, re_err = integrate.quad(lambda t: integrand(t).real, lo, hi, **kwargs)
    im, im_err = integrate.quad(lambda t: integrand(t).imag, lo, hi, **kwargs)
    logger.debug("tau quadrature on [%g, %g]: error estimate %.2e", lo, hi, re_err + im_err)
    return complex(re, im)


def _phi_profile(
    f: SurfaceFunction, g: SurfaceFunction, opts: EvalOptions
) -> Optional[Callable[[float], complex]]:
    """tau-integrand after the phi-integral, or None when it vanishes exactly."""
    if f.m is not None and g.m is not None:
        if f.m != g.m:
            return None
        return lambda t: 2.0 * math.pi * math.cosh(t) * f(t, 0.0).conjugate() * g(t, 0.0)

    def integrand(t: float) -> complex:
        def product(ph: float) -> complex:
            return f(t, ph).conjugate() * g(t, ph)

        re, _ = integrate.quad(
            lambda ph: product(ph).real, 0.0, 2.0 * math.pi, epsabs=opts.quad_tol, limit=200
        )
        im, _ = integrate.quad(
            lambda ph: product(ph).imag, 0.0, 2.0 * math.pi, epsabs=opts.quad_tol, limit=200
        )
        return math.cosh(t) * complex(re, im)

    return integrand


def inner_product(
    f: SurfaceFunction, g: SurfaceFunction, opts: Optional[EvalOptions] = None
) -> complex:
    """
    <f, g> = int cosh tau dtau int dphi f* g over |tau| <= quad_cutoff.

    Raises:
        ConvergenceError: the integrand at the cutoff exceeds quad_tol, i.e.
            the truncated tail is not negligible.
    """
    opts = opts or EvalOptions()
    integrand = _phi_profile(f, g, opts)
    if integrand is None:
        return 0j
    cutoff = min(opts.quad_cutoff, f.tau_max, g.tau_max)
    tail = abs(integrand(cutoff)) + abs(integrand(-cutoff))
    logger.debug("inner product tail bound at |tau| = %g: %.2e", cutoff, tail)
    if tail > opts.quad_tol:
        raise ConvergenceError(
            f"inner product tail {tail:.3e} at |tau| = {cutoff:g} "
            f"exceeds quad_tol {opts.quad_tol:g}; "
            "the functions are not square integrable or the cutoff is too small"
        )
    return ensure_finite(_tau_integral(integrand, -cutoff, cutoff, opts), "inner product")


def norm_truncated(f: SurfaceFunction, T: float, opts: Optional[EvalOptions] = None) -> float:
    """<f, f> restricted to |tau| <= T (no tail check)."""
    opts = opts or EvalOptions()
    integrand = _phi_profile(f, f, opts)
    return _tau_integral(integrand, -float(T), float(T), opts).real

"""
Relation catalog and suite runner.

Every identity the library relies on is registered under a descriptive id.
`verify_relation` runs a single entry and returns a `VerifyReport`;
`VerificationSuite` runs a whole group and logs each failure.

Checks that sample points draw them from a seeded generator, so a suite run
is reproducible for a given (samples, seed) pair.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import EvalOptions
from .continuous import (
    asymptotic_amplitude,
    legendre_t,
    legendre_u,
    principal_envelope_amplitude,
    supplementary_envelope,
    y_half,
    y_principal_negative,
    y_principal_raw,
    y_seq,
    y_seq_dispatch,
    y_supplementary,
    z_factor,
    z_factor_gamma,
    z_product_identity_residual,
)
from .discrete import (
    RECURRENCE_IDS,
    hypergeometric_ode_residual,
    recurrence_terms,
    volume_function,
    y_dminus,
    y_dminus_hypergeometric,
    y_dplus,
    y_dplus_hypergeometric,
)
from .exceptions import ConfigurationError, DomainError, HyperwaveError, UnknownRelationError
from .newclass import arcsin_tanh, ode_residual_newclass, y_newclass
from .numerics import (
    Hyp2F1Params,
    contiguous_derivative_residual,
    duplication_residual,
    gamma_complex,
    gamma_magnitude_sq,
    gauss_2f1,
    gauss_2f1_deriv,
    sample_points,
)
from .operators import (
    SurfaceFunction,
    VerifyReport,
    apply_casimir,
    apply_k3,
    apply_kminus,
    apply_kplus,
    casimir_factorised,
    commutator_residuals,
    inner_product,
    laplace_beltrami,
    lifted,
    norm_truncated,
)
from .specs import (
    DiscreteSpec,
    NewClassSpec,
    PrincipalSpec,
    SeriesSpec,
    SupplementarySpec,
    casimir_eigenvalue,
    parse_rational,
    spec_from_dict,
)
from .tables import surface_function

DEFAULT_TOLERANCES: Dict[str, float] = {
    "eigen": 1e-4,
    "k3": 1e-8,
    "ladder": 1e-4,
    "annihilate": 1e-6,
    "route": 1e-9,
    "closed-form": 1e-10,
    "identity": 1e-12,
    "hypergeometric": 1e-9,
    "recurrence": 1e-10,
    "quad": 1e-7,
    "ode": 1e-5,
    "joining": 1e-4,
    "nested": 1e-3,
    "asymptotic": 1e-2,
    "supplementary": 2e-2,
    "divergence": 0.9,
    "fd-order": 0.05,
}

SUITES: Tuple[str, ...] = ("numerics", "discrete", "newclass", "continuous", "operators")
DEFAULT_SAMPLES = 20
DEFAULT_SEED = 1729

# Pointwise checks divide by max(|expected|, floor) so nodes of the function
# do not turn rounding noise into large relative residuals.
_FD_FLOOR = 1e-2
_ROUTE_FLOOR = 1e-3

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckContext:
    """Parameters, options and tolerance handed to one relation check."""

    relation_id: str
    params: Dict[str, Any]
    opts: EvalOptions
    tolerance: float

    def get(self, key: str, default: Any = None) -> Any:
        return self.params.get(key, default)

    def sample_count(self, default: int = DEFAULT_SAMPLES) -> int:
        count = int(self.get("samples", default))
        if count < 1:
            raise DomainError(f"samples must be >= 1, got {count}")
        return count

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(int(self.get("seed", DEFAULT_SEED)))

    def points(
        self, tau_max: float = 2.0, default_count: int = DEFAULT_SAMPLES
    ) -> List[Tuple[float, float]]:
        """Explicit `points`, a single `tau`/`phi`, or seeded random samples."""
        if "points" in self.params:
            return [(float(t), float(p)) for t, p in self.params["points"]]
        if "tau" in self.params:
            return [(float(self.params["tau"]), float(self.params.get("phi", 0.0)))]
        rows = sample_points(self.rng(), self.sample_count(default_count), tau_max)
        return [(float(t), float(p)) for t, p in rows]

    def specs(self, defaults: Sequence[Dict[str, Any]]) -> List[SeriesSpec]:
        """The spec named in params, or the default families."""
        if "spec" in self.params:
            return [spec_from_dict(self.params["spec"])]
        if "series" in self.params:
            return [spec_from_dict(self.params)]
        return [spec_from_dict(d) for d in defaults]

    def report_params(self, **where: Any) -> Dict[str, Any]:
        base = {k: v for k, v in self.params.items() if k != "points"}
        return {**base, **where}


CheckFn = Callable[[CheckContext], VerifyReport]
# (expected, observed, scale, where)
Sample = Tuple[complex, complex, float, Dict[str, Any]]


@dataclass(frozen=True)
class Relation:
    relation_id: str
    suite: str
    tolerance_key: str
    check: CheckFn
    summary: str = ""


CATALOG: Dict[str, Relation] = {}


def relation(
    relation_id: str, suite: str, tolerance_key: str, summary: str = ""
) -> Callable[[CheckFn], CheckFn]:
    """Register a check under relation_id."""

    def register(fn: CheckFn) -> CheckFn:
        text = summary or (fn.__doc__ or "").strip().split("\n")[0]
        CATALOG[relation_id] = Relation(relation_id, suite, tolerance_key, fn, text)
        return fn

    return register


def _worst(ctx: CheckContext, samples: Iterable[Sample]) -> VerifyReport:
    """Report for the sample with the largest residual."""
    worst: Optional[VerifyReport] = None
    for expected, observed, scale, where in samples:
        report = VerifyReport.compare(
            ctx.relation_id, expected, observed, ctx.tolerance, scale, ctx.report_params(**where)
        )
        if worst is None or report.residual > worst.residual:
            worst = report
    if worst is None:
        raise DomainError(f"{ctx.relation_id}: nothing to check")
    return worst


def _where(spec: Optional[SeriesSpec] = None, **values: Any) -> Dict[str, Any]:
    return {**({"spec": spec.to_dict()} if spec is not None else {}), **values}


# -- operators ---------------------------------------------------------------

_EIGEN_FAMILIES: List[Dict[str, Any]] = [
    {"series": "D+", "k": "0", "m": "1"},
    {"series": "D+", "k": "1", "m": "2"},
    {"series": "D+", "k": "1/2", "m": "5/2"},
    {"series": "D-", "k": "1", "m": "-3"},
    {"series": "principal", "lambda": 1.0, "m": "0", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.0, "m": "1", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.0, "m": "2", "sequence": "seq2"},
    {"series": "principal", "lambda": 1.0, "m": "1/2", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.0, "m": "7/2", "sequence": "seq2"},
    {"series": "principal", "lambda": 1.0, "m": "-2", "sequence": "seq1"},
    {"series": "supplementary", "gamma": 0.3, "m": 1, "parity": "even"},
    {"series": "supplementary", "gamma": 0.3, "m": 2, "parity": "odd"},
    {"series": "newclass", "k": 0},
    {"series": "newclass", "k": 2},
    {"series": "newclass", "k": 2, "sign": -1},
    {"series": "newclass", "k": 1, "alpha": 1.0},
]


@relation("eigen-C2", "operators", "eigen")
def check_eigen_casimir(ctx: CheckContext) -> VerifyReport:
    """C2 f = k(k+1) f for every family, by finite differences."""

    def samples() -> Iterable[Sample]:
        for spec in ctx.specs(_EIGEN_FAMILIES):
            f = surface_function(spec, ctx.opts)
            eigenvalue = casimir_eigenvalue(spec)
            for tau, phi in ctx.points():
                value = f(tau, phi)
                observed = apply_casimir(f, tau, phi, ctx.opts)
                floor = max(abs(value), _FD_FLOOR)
                yield eigenvalue * value, observed, floor, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("eigen-K3", "operators", "k3")
def check_eigen_k3(ctx: CheckContext) -> VerifyReport:
    """K3 f = m f with the phi-derivative taken numerically (Richardson-extrapolated)."""
    coarse = ctx.opts.with_overrides(fd_step=2e-3)
    fine = ctx.opts.with_overrides(fd_step=1e-3)

    def samples() -> Iterable[Sample]:
        for spec in ctx.specs(_EIGEN_FAMILIES):
            f = surface_function(spec, ctx.opts)
            g = f.without_weight()
            for tau, phi in ctx.points():
                value = f(tau, phi)
                observed = (4.0 * apply_k3(g, tau, phi, fine) - apply_k3(g, tau, phi, coarse)) / 3.0
                floor = max(abs(value), _FD_FLOOR)
                yield f.m * value, observed, floor, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


def _raised(spec: SeriesSpec) -> Tuple[SeriesSpec, float]:
    """(spec of weight m+1, coefficient of K+)."""
    if isinstance(spec, DiscreteSpec):
        k, m = float(spec.k), float(spec.m)
        return DiscreteSpec(spec.k, spec.m + 1, spec.series), math.sqrt((m - k) * (m + k + 1))
    if isinstance(spec, PrincipalSpec) and spec.sequence in ("seq1", "seq2") and spec.m >= 0:
        m = float(spec.m)
        return PrincipalSpec(spec.lam, spec.m + 1, spec.sequence), math.hypot(m + 0.5, spec.lam)
    raise DomainError(
        f"ladder relations need a D+/D- spec or a seq1/seq2 spec with m >= 0, got {spec!r}"
    )


def _lowered(spec: SeriesSpec) -> Tuple[SeriesSpec, float]:
    """(spec of weight m-1, coefficient of K-)."""
    if isinstance(spec, DiscreteSpec):
        k, m = float(spec.k), float(spec.m)
        return DiscreteSpec(spec.k, spec.m - 1, spec.series), math.sqrt((m + k) * (m - k - 1))
    if isinstance(spec, PrincipalSpec) and spec.sequence in ("seq1", "seq2") and spec.m >= 1:
        m = float(spec.m)
        return PrincipalSpec(spec.lam, spec.m - 1, spec.sequence), math.hypot(m - 0.5, spec.lam)
    raise DomainError(
        f"ladder relations need a D+/D- spec or a seq1/seq2 spec with m >= 1, got {spec!r}"
    )


_RAISE_FAMILIES: List[Dict[str, Any]] = [
    {"series": "D+", "k": "0", "m": "1"},
    {"series": "D+", "k": "1", "m": "3"},
    {"series": "D+", "k": "1/2", "m": "3/2"},
    {"series": "D-", "k": "1", "m": "-4"},
    {"series": "principal", "lambda": 1.5, "m": "0", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.5, "m": "1", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.5, "m": "0", "sequence": "seq2"},
    {"series": "principal", "lambda": 1.5, "m": "2", "sequence": "seq2"},
    {"series": "principal", "lambda": 1.5, "m": "1/2", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.5, "m": "3/2", "sequence": "seq2"},
]

_LOWER_FAMILIES: List[Dict[str, Any]] = [
    {"series": "D+", "k": "0", "m": "2"},
    {"series": "D+", "k": "1", "m": "4"},
    {"series": "D-", "k": "0", "m": "-1"},
    {"series": "principal", "lambda": 1.5, "m": "2", "sequence": "seq1"},
    {"series": "principal", "lambda": 1.5, "m": "1", "sequence": "seq2"},
    {"series": "principal", "lambda": 1.5, "m": "3/2", "sequence": "seq1"},
]


def _ladder(ctx: CheckContext, defaults: List[Dict[str, Any]], raising: bool) -> VerifyReport:
    op = apply_kplus if raising else apply_kminus
    step = _raised if raising else _lowered

    def samples() -> Iterable[Sample]:
        for spec in ctx.specs(defaults):
            target, coefficient = step(spec)
            f = surface_function(spec, ctx.opts)
            g = surface_function(target, ctx.opts)
            for tau, phi in ctx.points():
                expected = coefficient * g(tau, phi)
                yield expected, op(f, tau, phi, ctx.opts), _FD_FLOOR, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("ladder-plus", "operators", "ladder")
def check_ladder_plus(ctx: CheckContext) -> VerifyReport:
    """K+ Y^m = sqrt((m-k)(m+k+1)) Y^{m+1}, principal form sqrt((m+1/2)^2 + lambda^2)."""
    return _ladder(ctx, _RAISE_FAMILIES, raising=True)


@relation("ladder-minus", "operators", "ladder")
def check_ladder_minus(ctx: CheckContext) -> VerifyReport:
    """K- Y^m = sqrt((m+k)(m-k-1)) Y^{m-1}, principal form sqrt((m-1/2)^2 + lambda^2)."""
    return _ladder(ctx, _LOWER_FAMILIES, raising=False)


@relation("commutator", "operators", "nested")
def check_commutator(ctx: CheckContext) -> VerifyReport:
    """[K3, K+] = K+ and [K+, K-] = -2 K3 by nested differences."""
    functions = [
        SurfaceFunction(lambda t, p: cmath.exp(1j * p) / math.cosh(t), m=1, name="e^{i phi} sech"),
        surface_function(DiscreteSpec(1, 2), ctx.opts),
    ]

    def samples() -> Iterable[Sample]:
        for f in functions:
            for tau, phi in ctx.points(default_count=5):
                for key, residual in commutator_residuals(f, tau, phi, ctx.opts).items():
                    where = {"function": f.name, "commutator": key, "tau": tau, "phi": phi}
                    yield 0j, residual, 1.0, where

    return _worst(ctx, samples())


@relation("casimir-factorised", "operators", "nested")
def check_casimir_factorised(ctx: CheckContext) -> VerifyReport:
    """C2 = K3(K3 + 1) - K- K+ on smooth test functions."""
    functions = [
        SurfaceFunction(lambda t, p: cmath.exp(1j * p) / math.cosh(t), m=1, name="e^{i phi} sech"),
        surface_function(DiscreteSpec(1, 2), ctx.opts),
        surface_function(PrincipalSpec(1.0, 1, "seq1"), ctx.opts),
    ]

    def samples() -> Iterable[Sample]:
        for f in functions:
            for tau, phi in ctx.points(default_count=5):
                expected = apply_casimir(f, tau, phi, ctx.opts)
                observed = casimir_factorised(f, tau, phi, ctx.opts)
                yield expected, observed, _FD_FLOOR, {"function": f.name, "tau": tau, "phi": phi}

    return _worst(ctx, samples())


@relation("inner-symmetric", "operators", "quad")
def check_inner_symmetric(ctx: CheckContext) -> VerifyReport:
    """<f, g> = <g, f>* for square-integrable functions."""
    f = surface_function(DiscreteSpec(0, 2), ctx.opts)
    g = SurfaceFunction(
        lambda t, p: cmath.exp(2j * p) * (1.0 + 0.5j * math.tanh(t)) / math.cosh(t) ** 2,
        m=2,
        name="e^{2i phi} (1 + i tanh/2) sech^2",
    )
    forward = inner_product(f, g, ctx.opts)
    backward = inner_product(g, f, ctx.opts)
    return VerifyReport.compare(
        ctx.relation_id, backward.conjugate(), forward, ctx.tolerance, 1.0, ctx.report_params()
    )


@relation("fd-order", "operators", "fd-order")
def check_fd_order(ctx: CheckContext) -> VerifyReport:
    """Halving fd_step cuts the K+ error by about 4 (second-order differences)."""
    tau, phi = float(ctx.get("tau", 0.7)), float(ctx.get("phi", 0.4))
    h = float(ctx.get("fd_step", 1e-2))
    f = SurfaceFunction(lambda t, p: cmath.exp(1j * p) / math.cosh(t), m=1)
    exact = 2.0 * cmath.exp(2j * phi) * math.tanh(tau) / math.cosh(tau)
    err_h = abs(apply_kplus(f, tau, phi, ctx.opts.with_overrides(fd_step=h)) - exact)
    err_half = abs(apply_kplus(f, tau, phi, ctx.opts.with_overrides(fd_step=h / 2)) - exact)
    ratio = err_h / err_half
    return VerifyReport.compare(
        ctx.relation_id, 4.0, ratio, ctx.tolerance, params=ctx.report_params(fd_step=h)
    )


# -- discrete ----------------------------------------------------------------

_DISCRETE_WEIGHTS: List[Tuple[str, str]] = [
    ("0", "1"), ("0", "4"), ("1", "3"), ("1", "6"), ("1/2", "5/2"), ("2", "7"),
]


def _discrete_weights(ctx: CheckContext, defaults: Sequence[Tuple[str, str]] = _DISCRETE_WEIGHTS):
    if "k" in ctx.params and "m" in ctx.params:
        return [DiscreteSpec(ctx.params["k"], ctx.params["m"])]
    return [DiscreteSpec(k, m) for k, m in defaults]


def _extremal_ks(ctx: CheckContext) -> List[str]:
    if "k" in ctx.params:
        return [str(ctx.params["k"])]
    return ["0", "1/2", "1", "2"]


@relation("annihilate-lowest", "discrete", "annihilate")
def check_annihilate_lowest(ctx: CheckContext) -> VerifyReport:
    """K- annihilates the lowest weight Y^{k+1}_k."""

    def samples() -> Iterable[Sample]:
        for k in _extremal_ks(ctx):
            spec = DiscreteSpec(k, parse_rational(k) + 1)
            f = surface_function(spec, ctx.opts)
            for tau, phi in ctx.points():
                yield 0j, apply_kminus(f, tau, phi, ctx.opts), 1.0, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("annihilate-highest", "discrete", "annihilate")
def check_annihilate_highest(ctx: CheckContext) -> VerifyReport:
    """K+ annihilates the highest weight Y~^{-(k+1)}_k."""

    def samples() -> Iterable[Sample]:
        for k in _extremal_ks(ctx):
            spec = DiscreteSpec(k, -(parse_rational(k) + 1), "D-")
            f = surface_function(spec, ctx.opts)
            for tau, phi in ctx.points():
                yield 0j, apply_kplus(f, tau, phi, ctx.opts), 1.0, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("ode-radial", "discrete", "ode")
def check_ode_radial(ctx: CheckContext) -> VerifyReport:
    """f'' + tanh f' + (m^2 sech^2 - k(k+1)) f = 0 for the D+ profiles."""
    h = ctx.opts.fd_step_nested

    def samples() -> Iterable[Sample]:
        weights = [("0", "1"), ("0", "2"), ("1", "2"), ("1/2", "5/2"), ("2", "4")]
        for spec in _discrete_weights(ctx, weights):
            k, m = float(spec.k), float(spec.m)

            def f(t: float) -> float:
                return y_dplus(spec.k, spec.m, t, 0.0, ctx.opts).real

            for tau, _ in ctx.points():
                f0, fp, fm = f(tau), f(tau + h), f(tau - h)
                d1 = (fp - fm) / (2 * h)
                d2 = (fp - 2 * f0 + fm) / (h * h)
                lhs = d2 + math.tanh(tau) * d1 + (m * m / math.cosh(tau) ** 2 - k * (k + 1)) * f0
                yield 0j, lhs, 1.0, _where(spec, tau=tau)

    return _worst(ctx, samples())


@relation("conjugation-dminus", "discrete", "identity")
def check_conjugation(ctx: CheckContext) -> VerifyReport:
    """Y~^{-m}_k = (-1)^(m-k-1) [Y^m_k]*."""

    def samples() -> Iterable[Sample]:
        for spec in _discrete_weights(ctx):
            sign = -1.0 if spec.level % 2 else 1.0
            for tau, phi in ctx.points(tau_max=3.0):
                expected = sign * y_dplus(spec.k, spec.m, tau, phi, ctx.opts).conjugate()
                observed = y_dminus(spec.k, -spec.m, tau, phi, ctx.opts)
                yield expected, observed, _ROUTE_FLOOR, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("route-hypergeometric", "discrete", "route")
def check_route_hypergeometric(ctx: CheckContext) -> VerifyReport:
    """Finite-sum and terminating-2F1 routes agree for D+ and D-."""

    def samples() -> Iterable[Sample]:
        for spec in _discrete_weights(ctx):
            for tau, phi in ctx.points(tau_max=3.0):
                where = _where(spec, tau=tau, phi=phi)
                yield (
                    y_dplus(spec.k, spec.m, tau, phi, ctx.opts),
                    y_dplus_hypergeometric(spec.k, spec.m, tau, phi, ctx.opts),
                    _ROUTE_FLOOR,
                    where,
                )
                yield (
                    y_dminus(spec.k, -spec.m, tau, phi, ctx.opts),
                    y_dminus_hypergeometric(spec.k, -spec.m, tau, phi, ctx.opts),
                    _ROUTE_FLOOR,
                    {**where, "series": "D-"},
                )

    return _worst(ctx, samples())


@relation("hypergeometric-ode", "discrete", "hypergeometric")
def check_hypergeometric_ode(ctx: CheckContext) -> VerifyReport:
    """The 2F1 factor of each D+ function solves the hypergeometric equation."""
    rng = ctx.rng()

    def samples() -> Iterable[Sample]:
        for spec in _discrete_weights(ctx, [("0", "1"), ("0", "3"), ("1", "4"), ("1/2", "7/2")]):
            for z in rng.uniform(0.0, 0.95, size=ctx.sample_count(5)):
                residual = hypergeometric_ode_residual(spec.k, spec.m, float(z), ctx.opts)
                yield 0j, residual, 1.0, _where(spec, z=float(z))

    return _worst(ctx, samples())


@relation("laplace-volume", "discrete", "ode")
def check_laplace_volume(ctx: CheckContext) -> VerifyReport:
    """a^k Y^m_k is harmonic outside the light cone."""
    spec = DiscreteSpec(ctx.get("k", 1), ctx.get("m", 2))
    a = float(ctx.get("a", 1.3))

    def p(aa: float, t: float, ph: float) -> complex:
        return volume_function(spec.k, spec.m, aa, t, ph, ctx.opts)

    def samples() -> Iterable[Sample]:
        for tau, phi in ctx.points(default_count=5):
            observed = laplace_beltrami(p, a, tau, phi, ctx.opts, m=float(spec.m))
            yield 0j, observed, 1.0, _where(spec, a=a, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("orthonormal", "discrete", "quad")
def check_orthonormal(ctx: CheckContext) -> VerifyReport:
    """<Y^m_k, Y^m'_k'> = delta_mm' delta_kk' by quadrature."""
    ks = [str(k) for k in ctx.get("ks", ["0", "1/2", "1", "2"])]
    count = int(ctx.get("count", 2))
    specs = [DiscreteSpec(k, parse_rational(k) + 1 + j) for k in ks for j in range(count)]
    functions = [surface_function(s, ctx.opts) for s in specs]

    def samples() -> Iterable[Sample]:
        for i, f in enumerate(functions):
            for j in range(i, len(functions)):
                expected = 1.0 if i == j else 0.0
                observed = inner_product(f, functions[j], ctx.opts)
                where = {"left": specs[i].to_dict(), "right": specs[j].to_dict()}
                yield expected, observed, 1.0, where

    return _worst(ctx, samples())


def _recurrence_samples(ctx: CheckContext, identity: str) -> List[Tuple[Any, Any, float]]:
    if "k" in ctx.params and "m" in ctx.params:
        return [(ctx.params["k"], ctx.params["m"], float(ctx.get("x", 0.5)))]
    rng = ctx.rng()
    needs_k_step = identity.startswith("k-")
    out = []
    for _ in range(ctx.sample_count(50)):
        k = Fraction(int(rng.integers(0, 9)), 2)
        if needs_k_step and k == 0:
            k = parse_rational("1/2")
        m = k + 1 + int(rng.integers(0, 5))
        out.append((k, m, float(rng.uniform(-5.0, 5.0))))
    return out


def _check_recurrence(identity: str, ctx: CheckContext) -> VerifyReport:
    worst: Optional[VerifyReport] = None
    for k, m, x in _recurrence_samples(ctx, identity):
        terms = recurrence_terms(identity, k, m, x)
        report = VerifyReport(
            ctx.relation_id,
            complex(terms.rhs_value),
            complex(terms.lhs_value),
            terms.residual / terms.scale if terms.scale > 0 else terms.residual,
            ctx.tolerance,
            ctx.report_params(k=str(k), m=str(m), x=x),
        )
        if worst is None or report.residual > worst.residual:
            worst = report
    return worst


for _identity in RECURRENCE_IDS:
    relation(
        f"recurrence-{_identity}",
        "discrete",
        "recurrence",
        f"Legendre-analogue recurrence '{_identity}'",
    )(
        partial(_check_recurrence, _identity)
    )


# -- newclass ----------------------------------------------------------------


@relation("newclass-ode", "newclass", "ode")
def check_newclass_ode(ctx: CheckContext) -> VerifyReport:
    """f'' + tanh f' - (k^2 tanh^2 + k) f = 0 for both branches."""
    ks = [int(ctx.get("k"))] if "k" in ctx.params else [0, 1, 2, 3]
    taus = [float(ctx.get("tau"))] if "tau" in ctx.params else [-1.2, -0.3, 0.3, 1.2]

    def samples() -> Iterable[Sample]:
        for k in ks:
            for alpha, beta in ((1.0, 0.0), (0.0, 1.0)):
                spec = NewClassSpec(k, alpha, beta)
                for tau in taus:
                    yield 0j, ode_residual_newclass(spec, tau, ctx.opts), 1.0, _where(spec, tau=tau)

    return _worst(ctx, samples())


@relation("arcsin-tanh", "newclass", "identity")
def check_arcsin_tanh(ctx: CheckContext) -> VerifyReport:
    """arcsin(tanh tau) = 2 arctan(e^tau) - pi/2 on [-20, 20]."""

    def samples() -> Iterable[Sample]:
        for tau in np.linspace(-20.0, 20.0, 81):
            tau = float(tau)
            expected = 2.0 * math.atan(math.exp(tau)) - math.pi / 2.0
            yield expected, arcsin_tanh(tau), 1.0, {"tau": tau}
        for tau in np.linspace(-5.0, 5.0, 21):
            tau = float(tau)
            yield math.asin(math.tanh(tau)), arcsin_tanh(tau), 1.0, {"tau": tau, "form": "asin"}

    return _worst(ctx, samples())


@relation("joining-k0", "newclass", "joining")
def check_joining_k0(ctx: CheckContext) -> VerifyReport:
    """K-+ on the k = 0 arcsin function lands on the D-+ extremal weights."""
    f = surface_function(NewClassSpec(0, 0.0, 1.0), ctx.opts)
    lowest = surface_function(DiscreteSpec(0, 1), ctx.opts)
    highest = surface_function(DiscreteSpec(0, -1, "D-"), ctx.opts)
    worst: Optional[VerifyReport] = None
    for op, target, label in ((apply_kminus, highest, "K-"), (apply_kplus, lowest, "K+")):
        points = ctx.points(default_count=10)
        ratios = [op(f, tau, phi, ctx.opts) / target(tau, phi) for tau, phi in points]
        mean = sum(ratios) / len(ratios)
        for ratio, (tau, phi) in zip(ratios, points):
            report = VerifyReport.compare(
                ctx.relation_id,
                mean,
                ratio,
                ctx.tolerance,
                params=ctx.report_params(operator=label, tau=tau, phi=phi),
            )
            if worst is None or report.residual > worst.residual:
                worst = report
    return worst


@relation("newclass-mirror", "newclass", "identity")
def check_newclass_mirror(ctx: CheckContext) -> VerifyReport:
    """The m = -k member is e^{-2ik phi} times the m = +k member."""
    ks = [int(ctx.get("k"))] if "k" in ctx.params else [0, 1, 2, 3]

    def samples() -> Iterable[Sample]:
        for k in ks:
            plus = NewClassSpec(k)
            minus = NewClassSpec(k, sign=-1)
            for tau, phi in ctx.points():
                expected = cmath.exp(-2j * k * phi) * y_newclass(plus, tau, phi, ctx.opts)
                observed = y_newclass(minus, tau, phi, ctx.opts)
                yield expected, observed, _ROUTE_FLOOR, _where(minus, tau=tau, phi=phi)

    return _worst(ctx, samples())


def _divergence(ctx: CheckContext, f: SurfaceFunction, spec: SeriesSpec) -> VerifyReport:
    cutoffs = [float(t) for t in ctx.get("cutoffs", [5.0, 10.0, 20.0])]
    norms = [norm_truncated(f, t, ctx.opts) for t in cutoffs]
    ratios = [lo / hi if hi > 0 else math.inf for lo, hi in zip(norms, norms[1:])]
    params = ctx.report_params(spec=spec.to_dict(), cutoffs=str(cutoffs), norms=str(norms))
    return VerifyReport(
        ctx.relation_id, complex(norms[0]), complex(norms[-1]), max(ratios), ctx.tolerance, params
    )


@relation("newclass-divergence", "newclass", "divergence")
def check_newclass_divergence(ctx: CheckContext) -> VerifyReport:
    """
    Truncated norms of the new-class functions grow without bound.

    Without alpha/beta params both the constant (1, 0) and the arcsin (0, 1)
    branch are checked and the slower-growing one is reported.
    """
    k = int(ctx.get("k", 1))
    if "alpha" in ctx.params or "beta" in ctx.params:
        branches = [(float(ctx.get("alpha", 0.0)), float(ctx.get("beta", 1.0)))]
    else:
        branches = [(1.0, 0.0), (0.0, 1.0)]
    specs = [NewClassSpec(k, alpha, beta) for alpha, beta in branches]
    reports = [_divergence(ctx, surface_function(spec, ctx.opts), spec) for spec in specs]
    return max(reports, key=lambda report: report.residual)


# -- continuous --------------------------------------------------------------


def _lambdas(ctx: CheckContext, default: Sequence[float]) -> List[float]:
    return [float(ctx.get("lambda"))] if "lambda" in ctx.params else list(default)


@relation("principal-ladder", "continuous", "ladder")
def check_principal_ladder(ctx: CheckContext) -> VerifyReport:
    """Two nested K+ steps from m reproduce Y^{m+2} times both ladder coefficients."""
    nested = ctx.opts.with_overrides(fd_step=ctx.opts.fd_step_nested)
    starts = [("seq1", "0"), ("seq2", "0"), ("seq1", "1/2"), ("seq2", "1")]

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [1.0]):
            for sequence, m in starts:
                spec = PrincipalSpec(lam, m, sequence)
                once, c1 = _raised(spec)
                twice, c2 = _raised(once)
                inner = lifted(apply_kplus, surface_function(spec, ctx.opts), nested, shift=1)
                target = surface_function(twice, ctx.opts)
                for tau, phi in ctx.points(default_count=5):
                    expected = c1 * c2 * target(tau, phi)
                    observed = apply_kplus(inner, tau, phi, nested)
                    yield expected, observed, _FD_FLOOR, _where(spec, tau=tau, phi=phi)

    return _worst(ctx, samples())


@relation("principal-parity", "continuous", "route")
def check_principal_parity(ctx: CheckContext) -> VerifyReport:
    """Hat functions are even in tau, bar functions odd; Y1/Y2 follow their parity."""

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [0.5, 2.0]):
            for m in ("0", "1", "2", "1/2"):
                for parity in ("even", "odd"):
                    sign = 1.0 if parity == "even" else -1.0
                    for tau, phi in ctx.points(tau_max=3.0, default_count=5):
                        expected = sign * y_principal_raw(parity, m, lam, tau, phi, ctx.opts)
                        observed = y_principal_raw(parity, m, lam, -tau, phi, ctx.opts)
                        where = {"parity": parity, "m": m, "lambda": lam, "tau": tau}
                        yield expected, observed, _ROUTE_FLOOR, where
            for seq in (1, 2):
                for m in range(4):
                    sign = 1.0 if (m % 2 == 0) == (seq == 1) else -1.0
                    for tau, phi in ctx.points(tau_max=3.0, default_count=5):
                        expected = sign * y_seq(seq, m, lam, tau, phi, ctx.opts)
                        observed = y_seq(seq, m, lam, -tau, phi, ctx.opts)
                        where = {"seq": seq, "m": m, "lambda": lam, "tau": tau}
                        yield expected, observed, _ROUTE_FLOOR, where

    return _worst(ctx, samples())


@relation("principal-interleave", "continuous", "route")
def check_principal_interleave(ctx: CheckContext) -> VerifyReport:
    """Finite-sum Y1/Y2 equal the phased hat/bar functions they interleave."""

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [0.5, 1.5]):
            for seq in (1, 2):
                for m in range(5):
                    for tau, phi in ctx.points(tau_max=3.0, default_count=8):
                        yield (
                            y_seq_dispatch(seq, m, lam, tau, phi, ctx.opts),
                            y_seq(seq, m, lam, tau, phi, ctx.opts),
                            _ROUTE_FLOOR,
                            {"seq": seq, "m": m, "lambda": lam, "tau": tau, "phi": phi},
                        )

    return _worst(ctx, samples())


def _elementary_half(kind: str, lam: float, tau: float, phi: float) -> complex:
    wave = math.cos(lam * tau) if kind == "cos" else math.sin(lam * tau)
    return cmath.exp(0.5j * phi) * wave / (math.sqrt(2.0) * math.pi * math.sqrt(math.cosh(tau)))


def _half_integer(ctx: CheckContext, kind: str) -> VerifyReport:
    parity, seq = ("even", 1) if kind == "cos" else ("odd", 2)

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [0.5, 1.0, 3.0]):
            for tau, phi in ctx.points(tau_max=3.0):
                expected = _elementary_half(kind, lam, tau, phi)
                where = {"lambda": lam, "tau": tau, "phi": phi}
                raw = y_principal_raw(parity, "1/2", lam, tau, phi, ctx.opts)
                yield expected, raw, _ROUTE_FLOOR, {**where, "route": "2F1"}
                observed = y_half(seq, 0, lam, tau, phi, ctx.opts)
                yield expected, observed, _ROUTE_FLOOR, {**where, "route": "T/U"}

    return _worst(ctx, samples())


@relation("half-integer-cos", "continuous", "closed-form")
def check_half_integer_cos(ctx: CheckContext) -> VerifyReport:
    """m = 1/2 hat function equals cos(lambda tau) / (sqrt2 pi sqrt(cosh tau))."""
    return _half_integer(ctx, "cos")


@relation("half-integer-sin", "continuous", "closed-form")
def check_half_integer_sin(ctx: CheckContext) -> VerifyReport:
    """m = 1/2 bar function equals sin(lambda tau) / (sqrt2 pi sqrt(cosh tau))."""
    return _half_integer(ctx, "sin")


def _tu(ctx: CheckContext, kind: str) -> VerifyReport:
    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [0.5, 1.0, 3.0]):
            for tau, _ in ctx.points(tau_max=3.0):
                x, u = math.sinh(tau), math.cosh(tau)
                up, down = (u + x) ** (1j * lam), (u - x) ** (1j * lam)
                if kind == "cos":
                    expected = complex(math.cos(lam * tau))
                    power_form = 0.5 * (up + down)
                    rodrigues = legendre_t(0, lam, x, u, tau) * math.sqrt(u) / 2.0
                else:
                    expected = complex(math.sin(lam * tau))
                    power_form = (up - down) / 2j
                    rodrigues = legendre_u(0, lam, x, u, tau) * math.sqrt(u) / 2j
                where = {"lambda": lam, "tau": tau}
                yield expected, power_form, 1.0, {**where, "form": "powers"}
                yield expected, rodrigues, 1.0, {**where, "form": "rodrigues"}

    return _worst(ctx, samples())


@relation("tu-cos", "continuous", "identity")
def check_tu_cos(ctx: CheckContext) -> VerifyReport:
    """cos(lambda tau) = [(cosh+sinh)^{i lambda} + (cosh-sinh)^{i lambda}] / 2, and T^0."""
    return _tu(ctx, "cos")


@relation("tu-sin", "continuous", "identity")
def check_tu_sin(ctx: CheckContext) -> VerifyReport:
    """sin(lambda tau) = [(cosh+sinh)^{i lambda} - (cosh-sinh)^{i lambda}] / 2i, and U^0."""
    return _tu(ctx, "sin")


@relation("z-factor", "continuous", "identity")
def check_z_factor(ctx: CheckContext) -> VerifyReport:
    """Z_m by product equals both Gamma-ratio forms; product identity holds."""

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [0.5, 1.0, 3.0]):
            for m in range(7):
                z = z_factor(m, lam)
                for form in ("a", "b"):
                    observed = z_factor_gamma(m, lam, form)
                    yield z, observed, 0.0, {"m": m, "lambda": lam, "form": form}
                residual = z_product_identity_residual(m, lam)
                yield 0j, residual, 1.0, {"m": m, "lambda": lam, "form": "product"}

    return _worst(ctx, samples())


@relation("negative-m", "continuous", "route")
def check_negative_m(ctx: CheckContext) -> VerifyReport:
    """Y^{-m} by conjugation equals the raw family evaluated directly at -m."""

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [0.5, 1.5]):
            for seq in (1, 2):
                for m in (1, 2, 3):
                    parity = "even" if (m % 2 == 0) == (seq == 1) else "odd"
                    for tau, phi in ctx.points(tau_max=3.0, default_count=8):
                        yield (
                            y_principal_raw(parity, -m, lam, tau, phi, ctx.opts),
                            y_principal_negative(seq, -m, lam, tau, phi, ctx.opts),
                            _ROUTE_FLOOR,
                            {"seq": seq, "m": -m, "lambda": lam, "tau": tau, "phi": phi},
                        )

    return _worst(ctx, samples())


@relation("asymptotic-principal", "continuous", "asymptotic")
def check_asymptotic_principal(ctx: CheckContext) -> VerifyReport:
    """sqrt(cosh tau) f(tau) oscillates with amplitude 2|A1| at large tau."""
    tau0 = float(ctx.get("tau", 12.0))

    def samples() -> Iterable[Sample]:
        for lam in _lambdas(ctx, [1.0, 2.0]):
            for parity in ("even", "odd"):
                for m in (0, 1, 2):
                    expected = 2.0 * asymptotic_amplitude(parity, m, lam)
                    observed = principal_envelope_amplitude(parity, m, lam, tau0, ctx.opts)
                    where = {"parity": parity, "m": m, "lambda": lam, "tau": tau0}
                    yield expected, observed, 0.0, where

    return _worst(ctx, samples())


@relation("asymptotic-supplementary", "continuous", "supplementary")
def check_asymptotic_supplementary(ctx: CheckContext) -> VerifyReport:
    """Supplementary functions follow cosh^{-1/2}[A1 cosh^-gamma + A2 cosh^gamma] at large tau."""
    tau = float(ctx.get("tau", 8.0))
    gammas = [float(ctx.get("gamma"))] if "gamma" in ctx.params else [0.2, 0.3]

    def samples() -> Iterable[Sample]:
        for gamma in gammas:
            for m in (0, 1):
                for parity in ("even", "odd"):
                    spec = SupplementarySpec(gamma, m, parity)
                    observed = y_supplementary(spec, tau, 0.0, ctx.opts)
                    yield supplementary_envelope(spec, tau), observed, 0.0, _where(spec, tau=tau)

    return _worst(ctx, samples())


@relation("supplementary-divergence", "continuous", "divergence")
def check_supplementary_divergence(ctx: CheckContext) -> VerifyReport:
    """Truncated norms of supplementary functions grow without bound."""
    spec = SupplementarySpec(
        float(ctx.get("gamma", 0.3)), int(ctx.get("m", 0)), ctx.get("parity", "even")
    )
    return _divergence(ctx, surface_function(spec, ctx.opts), spec)


# -- numerics ----------------------------------------------------------------


def _complex_samples(
    ctx: CheckContext, re: Tuple[float, float], im: Tuple[float, float]
) -> List[complex]:
    if "z" in ctx.params:
        return [complex(ctx.params["z"])]
    rng = ctx.rng()
    count = ctx.sample_count()
    reals = rng.uniform(*re, size=count)
    imags = rng.uniform(*im, size=count)
    return [complex(a, b) for a, b in zip(reals, imags)]


@relation("gamma-recurrence", "numerics", "identity")
def check_gamma_recurrence(ctx: CheckContext) -> VerifyReport:
    """Gamma(z+1) = z Gamma(z) for complex z."""

    def samples() -> Iterable[Sample]:
        for z in _complex_samples(ctx, (-5.0, 10.0), (-5.0, 5.0)):
            yield z * gamma_complex(z), gamma_complex(z + 1), 0.0, {"z": str(z)}

    return _worst(ctx, samples())


def _gamma_closed_form(ctx: CheckContext, kind: str, shift: float) -> VerifyReport:
    rng = ctx.rng()

    def samples() -> Iterable[Sample]:
        for x in rng.uniform(0.1, 10.0, size=ctx.sample_count()):
            x = float(x)
            general = gamma_magnitude_sq("general", z=complex(shift, x))
            yield general, gamma_magnitude_sq(kind, x=x), 0.0, {"x": x}

    return _worst(ctx, samples())


@relation("gamma-half-plus-ix", "numerics", "identity")
def check_gamma_half_plus_ix(ctx: CheckContext) -> VerifyReport:
    """|Gamma(1/2 + ix)|^2 = pi / cosh(pi x)."""
    return _gamma_closed_form(ctx, "half-plus-ix", 0.5)


@relation("gamma-ix", "numerics", "identity")
def check_gamma_ix(ctx: CheckContext) -> VerifyReport:
    """|Gamma(ix)|^2 = pi / (x sinh(pi x))."""
    return _gamma_closed_form(ctx, "ix", 0.0)


@relation("duplication", "numerics", "identity")
def check_duplication(ctx: CheckContext) -> VerifyReport:
    """Gamma(z) = 2^(z-1)/sqrt(pi) Gamma(z/2) Gamma((z+1)/2)."""

    def samples() -> Iterable[Sample]:
        for z in _complex_samples(ctx, (0.5, 10.0), (-5.0, 5.0)):
            yield 0j, duplication_residual(z), 1.0, {"z": str(z)}

    return _worst(ctx, samples())


@relation("quadratic-2f1", "numerics", "hypergeometric")
def check_quadratic_2f1(ctx: CheckContext) -> VerifyReport:
    """2F1(a+1/2, a; 1/2; z) = [(1+sqrt z)^(-2a) + (1-sqrt z)^(-2a)] / 2."""
    alphas: List[complex] = [0.1, 0.3, 0.45] + [0.5 * (0.5 + 1j * lam) for lam in (0.5, 1.0, 3.0)]
    rng = ctx.rng()

    def samples() -> Iterable[Sample]:
        for alpha in alphas:
            for z in rng.uniform(0.0, 0.9, size=ctx.sample_count(5)):
                z = float(z)
                root = math.sqrt(z)
                expected = 0.5 * ((1 + root) ** (-2 * alpha) + (1 - root) ** (-2 * alpha))
                observed = gauss_2f1(Hyp2F1Params(alpha + 0.5, alpha, 0.5, z), ctx.opts)
                yield expected, observed, _ROUTE_FLOOR, {"alpha": str(alpha), "z": z}

    return _worst(ctx, samples())


def _principal_parameter_patterns() -> List[Tuple[complex, complex, float]]:
    out = []
    for lam in (0.5, 2.0):
        for m in range(4):
            out.append((0.5 * (m + 0.5 + 1j * lam), 0.5 * (-m + 0.5 + 1j * lam), 0.5))
            out.append((0.5 * (m + 1.5 + 1j * lam), 0.5 * (-m + 1.5 + 1j * lam), 1.5))
    return out


@relation("continuation-2f1", "numerics", "hypergeometric")
def check_continuation_2f1(ctx: CheckContext) -> VerifyReport:
    """The 1-z continuation matches the direct series for principal-series parameters."""
    direct = ctx.opts.with_overrides(transform_threshold=0.95)

    def samples() -> Iterable[Sample]:
        for a, b, c in _principal_parameter_patterns():
            for z in (0.6, 0.75, 0.9):
                p = Hyp2F1Params(a, b, c, z)
                yield gauss_2f1(p, direct), gauss_2f1(p, ctx.opts), _ROUTE_FLOOR, {
                    "a": str(a), "b": str(b), "c": c, "z": z,
                }

    return _worst(ctx, samples())


@relation("pfaff-2f1", "numerics", "hypergeometric")
def check_pfaff_2f1(ctx: CheckContext) -> VerifyReport:
    """2F1(a, b; c; z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) for z < 0."""
    patterns = [(1.0, 0.5, 1.5), (0.3, 0.7, 2.1)] + _principal_parameter_patterns()[:4]
    rng = ctx.rng()

    def samples() -> Iterable[Sample]:
        for a, b, c in patterns:
            for z in rng.uniform(-0.45, 0.0, size=ctx.sample_count(4)):
                z = float(z)
                direct = gauss_2f1(Hyp2F1Params(a, b, c, z), ctx.opts)
                transformed = cmath.exp(-a * math.log1p(-z)) * gauss_2f1(
                    Hyp2F1Params(a, c - b, c, z / (z - 1.0)), ctx.opts
                )
                where = {"a": str(a), "b": str(b), "c": str(c), "z": z}
                yield direct, transformed, _ROUTE_FLOOR, where

    return _worst(ctx, samples())


@relation("derivative-shift", "numerics", "hypergeometric")
def check_derivative_shift(ctx: CheckContext) -> VerifyReport:
    """d^n/dz^n 2F1 = (a)_n (b)_n / (c)_n 2F1(a+n, b+n; c+n), against 1/(1-z)."""

    def samples() -> Iterable[Sample]:
        for z in (0.1, 0.3, 0.7):
            p = Hyp2F1Params(1.0, 0.5, 0.5, z)
            for n in range(4):
                expected = math.factorial(n) / (1.0 - z) ** (n + 1)
                yield expected, gauss_2f1_deriv(p, n, ctx.opts), 0.0, {"z": z, "n": n}
        observed = gauss_2f1_deriv(Hyp2F1Params(1.0, 1.0, 2.0, 0.0), 1, ctx.opts)
        yield 0.5, observed, 0.0, {"z": 0.0, "n": 1}

    return _worst(ctx, samples())


@relation("contiguous-derivative", "numerics", "nested")
def check_contiguous_derivative(ctx: CheckContext) -> VerifyReport:
    """d^n/dz^n[(1-z)^(a+n-1) F] = (-1)^n (a)_n (c-b)_n/(c)_n (1-z)^(a-1) F(a+n, b; c+n)."""
    patterns = [(0.3, 0.7, 1.9, 0.2), (0.25 + 0.5j, 0.25 - 0.5j, 0.5, 0.3), (1.5, -0.5, 2.5, 0.4)]

    def samples() -> Iterable[Sample]:
        for a, b, c, z in patterns:
            p = Hyp2F1Params(a, b, c, z)
            for n in (1, 2):
                residual = contiguous_derivative_residual(p, n, ctx.opts)
                yield 0j, residual, 1.0, {"a": str(a), "b": str(b), "c": c, "z": z, "n": n}

    return _worst(ctx, samples())


# -- entry points ------------------------------------------------------------


def merged_tolerances(overrides: Optional[Dict[str, float]] = None) -> Dict[str, float]:
    """Defaults updated with overrides; unknown keys are a configuration error."""
    overrides = dict(overrides or {})
    unknown = set(overrides) - set(DEFAULT_TOLERANCES)
    if unknown:
        raise ConfigurationError(f"Unknown tolerance key(s): {', '.join(sorted(unknown))}")
    for key, value in overrides.items():
        if not (isinstance(value, (int, float)) and value > 0):
            raise ConfigurationError(f"Tolerance {key!r} must be > 0, got {value!r}")
    return {**DEFAULT_TOLERANCES, **overrides}


def verify_relation(
    relation_id: str,
    params: Optional[Dict[str, Any]] = None,
    opts: Optional[EvalOptions] = None,
    tolerances: Optional[Dict[str, float]] = None,
) -> VerifyReport:
    """
    Run one catalog relation.

    Args:
        relation_id: Catalog id, e.g. "eigen-C2" or "recurrence-raise".
        params: Relation-specific parameters (spec dicts, k/m/x, tau/phi,
            samples, seed); defaults cover the standard families.
        opts: Numerical options.
        tolerances: Overrides of DEFAULT_TOLERANCES.

    Raises:
        UnknownRelationError: relation_id is not in the catalog.

    Example:
        >>> verify_relation("recurrence-three-term", {"k": 0, "m": 1, "x": 0.5}).passed
        True
    """
    try:
        entry = CATALOG[relation_id]
    except KeyError:
        raise UnknownRelationError(
            f"Unknown relation {relation_id!r}; known: {', '.join(sorted(CATALOG))}"
        ) from None
    tolerance = merged_tolerances(tolerances)[entry.tolerance_key]
    ctx = CheckContext(relation_id, dict(params or {}), opts or EvalOptions(), tolerance)
    report = entry.check(ctx)
    logger.debug("%s: residual %.3e (tolerance %.1e)", relation_id, report.residual, tolerance)
    return report


def relation_ids(suite: str = "all") -> List[str]:
    """Catalog ids of a suite, in registration order."""
    if suite == "all":
        return list(CATALOG)
    if suite not in SUITES:
        raise ConfigurationError(f"Unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return [rid for rid, entry in CATALOG.items() if entry.suite == suite]


@dataclass
class VerifySuiteResult:
    """Reports of one suite run; exit code 0 exactly when every report passed."""

    suite: str
    reports: List[VerifyReport] = field(default_factory=list)

    @property
    def counts(self) -> Dict[str, int]:
        passed = sum(1 for r in self.reports if r.passed)
        return {"total": len(self.reports), "passed": passed, "failed": len(self.reports) - passed}

    @property
    def exit_code(self) -> int:
        return 0 if self.counts["failed"] == 0 else 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "counts": self.counts,
            "reports": [r.to_dict() for r in self.reports],
        }

    def summary(self) -> str:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.name:<28} "
            f"residual={r.residual:.3e}  tol={r.tolerance:.1e}"
            for r in self.reports
        ]
        counts = self.counts
        lines.append(f"{counts['passed']}/{counts['total']} relations passed")
        return "\n".join(lines)


class VerificationSuite:
    """
    Runs groups of catalog relations with shared options and tolerances.

    Args:
        opts: Numerical options for every check.
        tolerances: Overrides of DEFAULT_TOLERANCES (e.g. {"eigen": 1e-3}).
        samples: Sample count passed to sampling relations; None keeps each
            relation's default.
        seed: Seed for the sample generator.

    Example:
        >>> suite = VerificationSuite(tolerances={"eigen": 1e-3})
        >>> result = suite.run("numerics")
        >>> result.exit_code
        0
    """

    def __init__(
        self,
        opts: Optional[EvalOptions] = None,
        tolerances: Optional[Dict[str, float]] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
    ):
        self.opts = opts or EvalOptions()
        self.tolerances = merged_tolerances(tolerances)
        self.samples = samples
        self.seed = seed

        self.logger = logging.getLogger('hyperwave')
        if not self.logger.handlers and not logging.getLogger().handlers:
            handler = logging.StreamHandler()
            formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)
            if self.logger.level == logging.NOTSET:
                self.logger.setLevel(logging.INFO)

    def _params(self) -> Dict[str, Any]:
        params: Dict[str, Any] = {}
        if self.samples is not None:
            params["samples"] = self.samples
        if self.seed is not None:
            params["seed"] = self.seed
        return params

    def run_relation(
        self, relation_id: str, params: Optional[Dict[str, Any]] = None
    ) -> VerifyReport:
        """
        Run one relation; library errors become a failing report instead of
        aborting the suite. An unknown id still raises.
        """
        merged = {**self._params(), **(params or {})}
        try:
            report = verify_relation(relation_id, merged, self.opts, self.tolerances)
        except UnknownRelationError:
            raise
        except HyperwaveError as e:
            tolerance = self.tolerances[CATALOG[relation_id].tolerance_key]
            params = {**merged, "error": str(e)}
            report = VerifyReport(relation_id, 0j, 0j, math.inf, tolerance, params)
        if report.passed:
            self.logger.debug("PASS %s residual=%.3e", relation_id, report.residual)
        else:
            self.logger.error(
                "FAIL %s residual=%.3e tolerance=%.1e params=%s",
                relation_id, report.residual, report.tolerance, report.to_dict()["params"],
            )
        return report

    def run(self, suite: str = "all") -> VerifySuiteResult:
        ids = relation_ids(suite)
        result = VerifySuiteResult(suite)
        for relation_id in ids:
            result.reports.append(self.run_relation(relation_id))
        counts = result.counts
        self.logger.info(
            "suite %s: %d/%d relations passed", suite, counts["passed"], counts["total"]
        )
        return result

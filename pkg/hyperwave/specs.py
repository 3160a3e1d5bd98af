"""
Parameter records for every representation series.

Each record validates its admissible parameter range on construction and
raises `DomainError` with a message naming the violated constraint.
"""

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, Literal, Tuple, Union

from .exceptions import DomainError

DiscreteSeries = Literal["D+", "D-"]
PrincipalSequence = Literal["seq1", "seq2", "even-raw", "odd-raw"]
Parity = Literal["even", "odd"]


def parse_rational(value: Union[str, int, float, Fraction]) -> Fraction:
    """
    Parse '1/2', '-3/2', '2' or a number into an exact Fraction.

    Floats are snapped to the nearest fraction with denominator <= 1000.

    Example:
        >>> parse_rational('3/2')
        Fraction(3, 2)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"Expected a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"Expected a finite number, got {value!r}")
        return Fraction(value).limit_denominator(1000)
    try:
        return Fraction(str(value).strip()).limit_denominator(1000)
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"Cannot parse {value!r} as a rational number") from e


def _half_integer(value: Any, name: str) -> Fraction:
    q = parse_rational(value)
    if (2 * q).denominator != 1:
        raise DomainError(f"{name} must be an integer or half-integer, got {q}")
    return q


def _finite(value: Any, name: str) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError) as e:
        raise DomainError(f"{name} must be a real number, got {value!r}") from e
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return x


@dataclass(frozen=True)
class HyperPoint:
    """
    A point (tau, phi) of the unit one-sheet hyperboloid in biharmonic coordinates.

    Example:
        >>> HyperPoint(0.0, 0.0).cartesian()
        (1.0, 0.0, 0.0)
    """

    tau: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "tau", _finite(self.tau, "tau"))
        object.__setattr__(self, "phi", _finite(self.phi, "phi"))

    def cartesian(self, a: float = 1.0) -> Tuple[float, float, float]:
        """(a cosh tau cos phi, a cosh tau sin phi, a sinh tau)."""
        rho = a * math.cosh(self.tau)
        return (rho * math.cos(self.phi), rho * math.sin(self.phi), a * math.sinh(self.tau))


@dataclass(frozen=True)
class DiscreteSpec:
    """
    Discrete-series weight (k, m).

    k runs over -1/2, 0, 1/2, 1, ...; m - k is an integer with m >= k+1
    for D+ and m <= -(k+1) for D-.
    """

    k: Fraction
    m: Fraction
    series: DiscreteSeries = "D+"

    def __post_init__(self):
        k = _half_integer(self.k, "k")
        m = _half_integer(self.m, "m")
        if k < Fraction(-1, 2):
            raise DomainError(f"k must be one of -1/2, 0, 1/2, 1, ..., got k = {k}")
        if (m - k).denominator != 1:
            raise DomainError(f"m - k must be an integer, got m = {m}, k = {k}")
        if self.series == "D+":
            if m < k + 1:
                raise DomainError(f"D+ requires m >= k+1, got m = {m}, k = {k}")
        elif self.series == "D-":
            if m > -(k + 1):
                raise DomainError(f"D- requires m <= -(k+1), got m = {m}, k = {k}")
        else:
            raise DomainError(f"series must be 'D+' or 'D-', got {self.series!r}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", m)

    @property
    def level(self) -> int:
        """Number of raising (or lowering) steps from the extremal weight."""
        return int(abs(self.m) - self.k - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {"series": self.series, "k": str(self.k), "m": str(self.m)}


@dataclass(frozen=True)
class NewClassSpec:
    """
    Non-normalizable family with m = +-k for integer k >= 0.

    Defaults (alpha, beta) = (0, 1) select the arcsin branch.
    """

    k: int
    alpha: float = 0.0
    beta: float = 1.0
    sign: int = 1

    def __post_init__(self):
        k = parse_rational(self.k)
        if k.denominator != 1 or k < 0:
            raise DomainError(f"new-class functions need an integer k >= 0, got k = {k}")
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "alpha", _finite(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _finite(self.beta, "beta"))

    @property
    def m(self) -> int:
        return self.sign * self.k

    def to_dict(self) -> Dict[str, Any]:
        return {"series": "newclass", **asdict(self)}


@dataclass(frozen=True)
class PrincipalSpec:
    """
    Principal-series weight m with k = -1/2 + i lambda, lambda > 0.

    seq1/seq2 and the raw even/odd families accept integer or half-integer m.
    """

    lam: float
    m: Fraction
    sequence: PrincipalSequence = "seq1"

    def __post_init__(self):
        lam = _finite(self.lam, "lambda")
        if not lam > 0:
            raise DomainError(f"principal series requires lambda > 0, got lambda = {lam:g}")
        if self.sequence not in ("seq1", "seq2", "even-raw", "odd-raw"):
            raise DomainError(f"Unknown principal sequence {self.sequence!r}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "m", _half_integer(self.m, "m"))

    @property
    def is_half_integer(self) -> bool:
        return self.m.denominator == 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "series": "principal",
            "lambda": self.lam,
            "m": str(self.m),
            "sequence": self.sequence,
        }


@dataclass(frozen=True)
class SupplementarySpec:
    """Supplementary-series weight, k = gamma - 1/2 with 0 < gamma < 1/2."""

    gamma: float
    m: int
    parity: Parity = "even"

    def __post_init__(self):
        gamma = _finite(self.gamma, "gamma")
        if not 0.0 < gamma < 0.5:
            raise DomainError(
                "supplementary series requires 0 < gamma < 1/2 (-1/2 < k < 0), "
                f"got gamma = {gamma:g}"
            )
        m = parse_rational(self.m)
        if m.denominator != 1:
            raise DomainError(f"supplementary series needs integer m, got m = {m}")
        if self.parity not in ("even", "odd"):
            raise DomainError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "m", int(m))

    def to_dict(self) -> Dict[str, Any]:
        return {"series": "supplementary", **asdict(self)}


SeriesSpec = Union[DiscreteSpec, NewClassSpec, PrincipalSpec, SupplementarySpec]

_SERIES_ALIASES = {"dplus": "D+", "d+": "D+", "dminus": "D-", "d-": "D-"}


def spec_from_dict(data: Dict[str, Any]) -> SeriesSpec:
    """
    Inverse of `to_dict`; also accepts the command-line series names
    (dplus, dminus, newclass, principal, supplementary).

    Example:
        >>> spec_from_dict({"series": "dplus", "k": "1/2", "m": "3/2"})
        DiscreteSpec(k=Fraction(1, 2), m=Fraction(3, 2), series='D+')
    """
    series = str(data.get("series", "")).strip()
    series = _SERIES_ALIASES.get(series.lower(), series)
    try:
        if series in ("D+", "D-"):
            return DiscreteSpec(data["k"], data["m"], series)
        if series == "newclass":
            return NewClassSpec(
                data["k"], data.get("alpha", 0.0), data.get("beta", 1.0), int(data.get("sign", 1))
            )
        if series == "principal":
            lam = data["lambda"] if "lambda" in data else data["lam"]
            return PrincipalSpec(lam, data["m"], data.get("sequence", "seq1"))
        if series == "supplementary":
            return SupplementarySpec(data["gamma"], data["m"], data.get("parity", "even"))
    except KeyError as e:
        raise DomainError(f"{series} spec is missing parameter {e.args[0]!r}") from e
    raise DomainError(f"Unknown series {data.get('series')!r}")


def casimir_eigenvalue(spec: SeriesSpec) -> complex:
    """k(k+1) for the representation the spec belongs to."""
    if isinstance(spec, (DiscreteSpec, NewClassSpec)):
        k = float(spec.k)
        return complex(k * (k + 1))
    if isinstance(spec, PrincipalSpec):
        return complex(-(0.25 + spec.lam * spec.lam))
    if isinstance(spec, SupplementarySpec):
        return complex(spec.gamma * spec.gamma - 0.25)
    raise DomainError(f"Unsupported series spec: {spec!r}")

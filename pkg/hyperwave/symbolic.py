"""
Exact term algebra for Rodrigues-type derivatives.

An expansion is a finite sum of terms

    coef * x**j * u**e * w**nu,   u = sqrt(1+x^2),  w = u + x,

a family closed under d/dx:

    d/dx [x^j u^e w^nu] = j x^(j-1) u^e w^nu + e x^(j+1) u^(e-2) w^nu + nu x^j u^(e-1) w^nu.

Repeated differentiation therefore stays exact up to rounding of the
coefficients.
"""

import cmath
import math
from collections import defaultdict
from typing import Dict, Iterable, Optional, Tuple

from typing_extensions import Self

from .numerics import log_cosh

# (x power, u power, w exponent)
TermKey = Tuple[int, float, complex]


class PowerExpansion:
    """
    Sum of x^j u^e w^nu terms with complex coefficients.

    Example:
        >>> f = PowerExpansion.monomial(u_pow=-1.0)
        >>> f.derivative().evaluate(0.0)
        0j
    """

    def __init__(self, terms: Optional[Dict[TermKey, complex]] = None):
        self.terms: Dict[TermKey, complex] = {
            k: complex(v) for k, v in (terms or {}).items() if v != 0
        }

    @classmethod
    def monomial(
        cls, coef: complex = 1.0, x_pow: int = 0, u_pow: float = 0.0, nu: complex = 0j
    ) -> Self:
        return cls({(int(x_pow), float(u_pow), complex(nu)): complex(coef)})

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[TermKey, complex]]) -> Self:
        acc: Dict[TermKey, complex] = defaultdict(complex)
        for (j, e, nu), coef in items:
            acc[(int(j), float(e), complex(nu))] += coef
        return cls(acc)

    def __add__(self, other: "PowerExpansion") -> "PowerExpansion":
        return PowerExpansion.from_terms(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "PowerExpansion") -> "PowerExpansion":
        return self + other.scaled(-1.0)

    def __len__(self) -> int:
        return len(self.terms)

    def scaled(self, factor: complex) -> "PowerExpansion":
        return PowerExpansion({k: v * factor for k, v in self.terms.items()})

    def times_u(self, power: float) -> "PowerExpansion":
        return PowerExpansion({(j, e + power, nu): c for (j, e, nu), c in self.terms.items()})

    def derivative(self, order: int = 1) -> "PowerExpansion":
        result = self
        for _ in range(order):
            items = []
            for (j, e, nu), c in result.terms.items():
                if j:
                    items.append(((j - 1, e, nu), c * j))
                if e:
                    items.append(((j + 1, e - 2.0, nu), c * e))
                if nu:
                    items.append(((j, e - 1.0, nu), c * nu))
            result = PowerExpansion.from_terms(items)
        return result

    def evaluate(
        self, x: float, u: Optional[float] = None, log_w: Optional[float] = None
    ) -> complex:
        """
        Evaluate at x. With x = sinh(tau), pass u = cosh(tau) and
        log_w = tau to avoid cancellation in sqrt(1+x^2) - x for x < 0.
        """
        if u is None:
            u = math.hypot(1.0, x)
        if log_w is None:
            log_w = math.asinh(x)
        log_u = math.log(u)
        re_parts = []
        im_parts = []
        for (j, e, nu), c in self.terms.items():
            value = c * (x ** j) * cmath.exp(e * log_u + nu * log_w)
            re_parts.append(value.real)
            im_parts.append(value.imag)
        return complex(math.fsum(re_parts), math.fsum(im_parts))

    def evaluate_tau(self, tau: float) -> complex:
        """
        Evaluate at x = sinh(tau) with each term assembled in log space, so
        x^j u^e stays finite when sinh and cosh alone would overflow.
        """
        tau = float(tau)
        log_u = log_cosh(tau)
        sign = -1.0 if tau < 0.0 else 1.0
        log_x = log_u + math.log(abs(math.tanh(tau))) if tau != 0.0 else -math.inf
        re_parts = []
        im_parts = []
        for (j, e, nu), c in self.terms.items():
            if j and tau == 0.0:
                continue
            log_mag = e * log_u + nu * tau + (j * log_x if j else 0.0)
            value = c * sign ** j * cmath.exp(log_mag)
            re_parts.append(value.real)
            im_parts.append(value.imag)
        return complex(math.fsum(re_parts), math.fsum(im_parts))

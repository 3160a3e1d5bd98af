"""
Hyperwave: pseudospherical functions on the one-sheet hyperboloid.

This package evaluates the simultaneous eigenfunctions of the su(1,1)
Casimir and K3 for every representation series of SO(2,1): the discrete
series D+/D-, the principal and supplementary series, and the
non-normalizable m = +-k family. A relation catalog verifies the ladder,
eigenvalue, recurrence and special-function identities numerically.
"""
__version__ = "0.1.0"

from .config import Config, EvalOptions
from .continuous import y_half, y_principal, y_principal_raw, y_seq, y_supplementary
from .discrete import assoc_p, lowest_weight_norm, y_dminus, y_dplus
from .exceptions import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
    GammaPoleError,
    HyperwaveError,
    NonFiniteError,
    ParameterPoleError,
    UnknownRelationError,
)
from .newclass import y_newclass
from .numerics import Hyp2F1Params, gauss_2f1
from .operators import (
    SurfaceFunction,
    VerifyReport,
    apply_casimir,
    apply_k3,
    apply_kminus,
    apply_kplus,
    inner_product,
)
from .specs import DiscreteSpec, HyperPoint, NewClassSpec, PrincipalSpec, SupplementarySpec
from .tables import EvalRequest, evaluate_spec
from .verify import VerificationSuite, VerifySuiteResult, verify_relation

__all__ = [
    "Config",
    "EvalOptions",
    "ConfigurationError",
    "ConvergenceError",
    "DomainError",
    "GammaPoleError",
    "HyperwaveError",
    "NonFiniteError",
    "ParameterPoleError",
    "UnknownRelationError",
    "DiscreteSpec",
    "HyperPoint",
    "NewClassSpec",
    "PrincipalSpec",
    "SupplementarySpec",
    "Hyp2F1Params",
    "gauss_2f1",
    "assoc_p",
    "lowest_weight_norm",
    "y_dplus",
    "y_dminus",
    "y_newclass",
    "y_principal",
    "y_principal_raw",
    "y_seq",
    "y_half",
    "y_supplementary",
    "SurfaceFunction",
    "VerifyReport",
    "apply_k3",
    "apply_kplus",
    "apply_kminus",
    "apply_casimir",
    "inner_product",
    "EvalRequest",
    "evaluate_spec",
    "VerificationSuite",
    "VerifySuiteResult",
    "verify_relation",
]

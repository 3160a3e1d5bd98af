"""
Configuration management for hyperwave.

This module provides the `EvalOptions` numerical policy used by every
evaluation routine, and the `Config` class for persistent storage of default
options and verification tolerances. Configuration is saved as JSON in the
user's home directory by default.
"""

import os
import json
import math
from dataclasses import dataclass, fields, replace, asdict
from typing import Dict, Any, Optional

from typing_extensions import Self

from .exceptions import ConfigurationError

DEFAULT_CONFIG_PATH = os.path.expanduser("~/.config/hyperwave/defaults.json")
MAX_TERMS_ENV = "HYPERWAVE_MAX_TERMS"


@dataclass(frozen=True)
class EvalOptions:
    """
    Numerical policy shared by the evaluation kernels.

    Args:
        series_tol: Relative size below which a series term counts as negligible.
        transform_threshold: Argument above which 2F1 switches to the 1-z continuation.
        fd_step: Step for first-order central differences.
        fd_step_nested: Step for second-order and nested differences.
        quad_tol: Absolute/relative tolerance for the tau quadrature.
        quad_cutoff: Half-width of the truncated tau interval.
        max_terms: Cap on the number of series terms.

    Example:
        >>> opts = EvalOptions().with_overrides(fd_step=1e-5)
        >>> opts.fd_step
        1e-05
    """

    series_tol: float = 1e-16
    transform_threshold: float = 0.5
    fd_step: float = 1e-4
    fd_step_nested: float = 1e-3
    quad_tol: float = 1e-10
    quad_cutoff: float = 40.0
    max_terms: int = 10_000

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigurationError(f"{f.name} must be a number, got {value!r}")
            if not math.isfinite(value) or value <= 0:
                raise ConfigurationError(f"{f.name} must be finite and > 0, got {value!r}")
        if not 0.0 < self.transform_threshold < 1.0:
            raise ConfigurationError(
                f"transform_threshold must lie in (0, 1), got {self.transform_threshold!r}"
            )
        if int(self.max_terms) != self.max_terms:
            raise ConfigurationError(f"max_terms must be an integer, got {self.max_terms!r}")

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None, **overrides) -> Self:
        """Build options, taking max_terms from HYPERWAVE_MAX_TERMS when set."""
        environ = os.environ if environ is None else environ
        raw = environ.get(MAX_TERMS_ENV)
        if raw is not None and "max_terms" not in overrides:
            try:
                overrides["max_terms"] = int(raw)
            except ValueError as e:
                raise ConfigurationError(
                    f"{MAX_TERMS_ENV} must be a positive integer, got {raw!r}"
                ) from e
        return cls(**overrides)

    def with_overrides(self, **overrides) -> Self:
        """Return a validated copy with the given fields replaced."""
        unknown = set(overrides) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigurationError(f"Unknown option(s): {', '.join(sorted(unknown))}")
        return replace(self, **overrides)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class Config:
    """
    Configuration management for hyperwave.

    This class handles saving and loading of default settings for:
    - Evaluation options (tolerances, step sizes, quadrature cutoff)
    - Verification tolerance overrides used by the relation catalog

    Args:
        config_path: Path to the config file. Defaults to ~/.config/hyperwave/defaults.json

    Example:
        >>> config = Config()
        >>> config.save_eval_defaults(fd_step=1e-5, quad_cutoff=30.0)
        >>> opts = config.eval_options()
        >>> config.save_tolerances({"eigen": 1e-3})
        >>> config.get_tolerances()
        {'eigen': 0.001}
    """

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize the configuration manager.

        Args:
            config_path: Optional path to the config file. If not provided,
                       defaults to ~/.config/hyperwave/defaults.json
        """
        self.config_path = config_path or DEFAULT_CONFIG_PATH
        self.settings = self.load()

    def load(self) -> Dict[str, Any]:
        """Load settings from config file."""
        if not os.path.exists(self.config_path):
            return {}

        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (json.JSONDecodeError, OSError):
            return {}
        return data if isinstance(data, dict) else {}

    def save(self) -> None:
        """Save current settings to config file."""
        directory = os.path.dirname(self.config_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self.config_path, 'w', encoding='utf-8') as f:
            json.dump(self.settings, f, indent=2, sort_keys=True)

    def save_eval_defaults(self, **options: float) -> None:
        """Save evaluation option defaults (validated before writing)."""
        merged = {**(self.get_eval_defaults() or {}), **options}
        EvalOptions(**merged)
        self.settings['eval_defaults'] = merged
        self.save()

    def get_eval_defaults(self) -> Optional[Dict[str, Any]]:
        """Get saved evaluation option defaults."""
        return self.settings.get('eval_defaults')

    def eval_options(self, environ: Optional[Dict[str, str]] = None, **overrides) -> EvalOptions:
        """
        Build EvalOptions with priority: overrides > config file > environment > defaults.
        """
        saved = dict(self.get_eval_defaults() or {})
        saved.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return EvalOptions.from_env(environ, **saved)
        except TypeError as e:
            raise ConfigurationError(f"Invalid eval_defaults in {self.config_path}: {e}") from e

    def save_tolerances(self, tolerances: Dict[str, float]) -> None:
        """Save verification tolerance overrides."""
        for name, value in tolerances.items():
            if not isinstance(value, (int, float)) or not value > 0:
                raise ConfigurationError(f"Tolerance {name!r} must be > 0, got {value!r}")
        self.settings['tolerances'] = {**(self.get_tolerances() or {}), **tolerances}
        self.save()

    def get_tolerances(self) -> Optional[Dict[str, float]]:
        """Get saved verification tolerance overrides."""
        return self.settings.get('tolerances')

"""
Grid evaluation and table output.

CSV schema: header `tau,phi,re,im,abs` (plus a leading `index` column for
long-format tables). JSON schema: {"metadata": {...}, "rows": [{tau, phi, re, im}, ...]}.
Row order is tau-major and output carries no timestamps, so identical
requests give byte-identical files.
"""

import csv
import json
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Literal, Optional, Sequence, TextIO, Tuple

import numpy as np

from . import __version__
from .config import EvalOptions
from .continuous import y_principal, y_supplementary
from .discrete import y_dminus, y_dplus
from .exceptions import DomainError
from .newclass import y_newclass
from .operators import SurfaceFunction
from .specs import DiscreteSpec, NewClassSpec, PrincipalSpec, SeriesSpec, SupplementarySpec

logger = logging.getLogger(__name__)

CSV_FIELDS = ["tau", "phi", "re", "im", "abs"]
OutputFormat = Literal["csv", "json"]


def evaluate_spec(
    spec: SeriesSpec, tau: float, phi: float, opts: Optional[EvalOptions] = None
) -> complex:
    """Evaluate any series spec at (tau, phi)."""
    if isinstance(spec, DiscreteSpec):
        if spec.series == "D+":
            return y_dplus(spec.k, spec.m, tau, phi, opts)
        return y_dminus(spec.k, spec.m, tau, phi, opts)
    if isinstance(spec, NewClassSpec):
        return y_newclass(spec, tau, phi, opts)
    if isinstance(spec, PrincipalSpec):
        return y_principal(spec, tau, phi, opts)
    if isinstance(spec, SupplementarySpec):
        return y_supplementary(spec, tau, phi, opts)
    raise DomainError(f"Unsupported series spec: {spec!r}")


def surface_function(spec: SeriesSpec, opts: Optional[EvalOptions] = None) -> SurfaceFunction:
    """Wrap a spec as a SurfaceFunction with its declared weight."""
    opts = opts or EvalOptions()
    return SurfaceFunction(
        lambda tau, phi: evaluate_spec(spec, tau, phi, opts),
        m=float(spec.m),
        name=json.dumps(spec.to_dict(), sort_keys=True),
    )


def linspace_values(start: float, stop: float, count: int) -> List[float]:
    """count evenly spaced values in [start, stop] (count >= 1)."""
    if int(count) != count or count < 1:
        raise DomainError(f"grid count must be >= 1, got {count!r}")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise DomainError(f"grid range must be finite, got [{start!r}, {stop!r}]")
    return [float(v) for v in np.linspace(start, stop, int(count))]


@dataclass(frozen=True)
class EvalRequest:
    """A spec plus the tau and phi values of a tau-major grid."""

    spec: SeriesSpec
    taus: Tuple[float, ...]
    phis: Tuple[float, ...] = (0.0,)
    fmt: OutputFormat = "csv"

    def __post_init__(self):
        if not self.taus or not self.phis:
            raise DomainError("grid needs at least one tau and one phi value")
        for value in (*self.taus, *self.phis):
            if not math.isfinite(value):
                raise DomainError(f"grid values must be finite, got {value!r}")
        if self.fmt not in ("csv", "json"):
            raise DomainError(f"format must be 'csv' or 'json', got {self.fmt!r}")

    def points(self) -> List[Tuple[float, float]]:
        return [(tau, phi) for tau in self.taus for phi in self.phis]


def evaluate_rows(
    spec: SeriesSpec,
    points: Sequence[Tuple[float, float]],
    opts: Optional[EvalOptions] = None,
    workers: int = 1,
) -> List[Dict[str, float]]:
    """
    Evaluate spec at each point, preserving order.

    With workers > 1 the points are spread over a thread pool; the result
    order is still the input order.
    """
    opts = opts or EvalOptions()

    def row(point: Tuple[float, float]) -> Dict[str, float]:
        tau, phi = point
        value = evaluate_spec(spec, tau, phi, opts)
        return {"tau": tau, "phi": phi, "re": value.real, "im": value.imag, "abs": abs(value)}

    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, points))
    else:
        rows = [row(p) for p in points]
    logger.debug("evaluated %d grid points", len(rows))
    return rows


def write_csv(
    rows: Iterable[Dict[str, Any]],
    stream: TextIO,
    leading_fields: Sequence[str] = (),
    with_version: bool = False,
) -> None:
    if with_version:
        stream.write(f"# hyperwave {__version__}\n")
    writer = csv.DictWriter(stream, fieldnames=[*leading_fields, *CSV_FIELDS], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row[k] for k in (*leading_fields, *CSV_FIELDS)})


def write_json(
    rows: Iterable[Dict[str, Any]],
    metadata: Dict[str, Any],
    stream: TextIO,
    with_version: bool = False,
) -> None:
    meta = dict(metadata)
    if with_version:
        meta["version"] = __version__
    payload = {
        "metadata": meta,
        "rows": [{k: v for k, v in row.items() if k != "abs"} for row in rows],
    }
    json.dump(payload, stream, indent=2, sort_keys=True)
    stream.write("\n")


def read_json(stream: TextIO) -> Tuple[Dict[str, Any], List[Dict[str, Any]]]:
    payload = json.load(stream)
    return payload["metadata"], payload["rows"]


def write_rows(
    rows: List[Dict[str, Any]],
    metadata: Dict[str, Any],
    stream: TextIO,
    fmt: OutputFormat,
    leading_fields: Sequence[str] = (),
    with_version: bool = False,
) -> None:
    if fmt == "json":
        write_json(rows, metadata, stream, with_version)
    else:
        write_csv(rows, stream, leading_fields, with_version)


def write_table(
    rows: List[Dict[str, Any]],
    metadata: Dict[str, Any],
    path: str,
    fmt: OutputFormat,
    leading_fields: Sequence[str] = (),
    with_version: bool = False,
) -> None:
    """Write rows to path; I/O errors are re-raised with the path attached."""
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            write_rows(rows, metadata, f, fmt, leading_fields, with_version)
    except OSError as e:
        raise OSError(f"Cannot write table to {path}: {e.strerror or e}") from e
    logger.info("wrote %d rows to %s", len(rows), path)


def split_path(path: str, index: str) -> str:
    """table.csv -> table_<index>.csv"""
    root, ext = os.path.splitext(path)
    safe = index.replace("/", "_").replace("-", "m")
    return f"{root}_{safe}{ext}"


def metadata_for(spec: SeriesSpec, opts: EvalOptions) -> Dict[str, Any]:
    return {"spec": spec.to_dict(), "options": opts.to_dict()}

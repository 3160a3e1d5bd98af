# flake8: noqa pylint: disable=W,C,R

import io
import json

import numpy as np
import pytest

from hyperwave import __version__
from hyperwave.config import EvalOptions
from hyperwave.exceptions import DomainError
from hyperwave.specs import DiscreteSpec, NewClassSpec, PrincipalSpec, SupplementarySpec
from hyperwave.tables import (
    CSV_FIELDS,
    EvalRequest,
    evaluate_rows,
    evaluate_spec,
    linspace_values,
    metadata_for,
    read_json,
    split_path,
    surface_function,
    write_csv,
    write_json,
    write_table,
)
from tests.config import INV_SQRT2_PI


@pytest.fixture
def opts():
    return EvalOptions()


@pytest.fixture
def rows(opts):
    spec = DiscreteSpec(0, 1)
    return evaluate_rows(spec, [(0.0, 0.0), (0.5, 1.0)], opts)


class TestEvaluation:
    """Spec dispatch and grid evaluation"""

    @pytest.mark.parametrize("spec, expected", [
        (DiscreteSpec(0, 1), INV_SQRT2_PI),
        (DiscreteSpec(0, -1, "D-"), INV_SQRT2_PI),
        (NewClassSpec(0, alpha=1.0, beta=0.0), 1.0),
        (PrincipalSpec(1.0, "1/2"), INV_SQRT2_PI),
        (SupplementarySpec(0.3, 0), 1.0),
    ])
    def test_dispatch_at_waist(self, opts, spec, expected):
        assert evaluate_spec(spec, 0.0, 0.0, opts) == pytest.approx(expected, rel=1e-12)

    def test_unsupported_spec(self):
        with pytest.raises(DomainError):
            evaluate_spec("dplus", 0.0, 0.0)

    def test_surface_function_declares_weight(self, opts):
        f = surface_function(PrincipalSpec(1.0, "-3/2"), opts)
        assert f.m == -1.5
        assert json.loads(f.name)["series"] == "principal"

    def test_linspace(self):
        assert linspace_values(-1.0, 1.0, 5) == [-1.0, -0.5, 0.0, 0.5, 1.0]
        assert linspace_values(2.0, 3.0, 1) == [2.0]

    def test_linspace_grid(self):
        grid = linspace_values(-3.0, 3.0, 121)
        np.testing.assert_allclose(np.diff(grid), 0.05, rtol=1e-12)
        assert grid[60] == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("count", [0, -3, 2.5])
    def test_linspace_bad_count(self, count):
        with pytest.raises(DomainError):
            linspace_values(0.0, 1.0, count)

    def test_request_is_tau_major(self):
        request = EvalRequest(DiscreteSpec(0, 1), (0.0, 1.0), (0.1, 0.2))
        assert request.points() == [(0.0, 0.1), (0.0, 0.2), (1.0, 0.1), (1.0, 0.2)]

    @pytest.mark.parametrize("kwargs", [
        {"taus": ()},
        {"taus": (float("nan"),)},
        {"taus": (0.0,), "fmt": "xml"},
    ])
    def test_request_validation(self, kwargs):
        with pytest.raises(DomainError):
            EvalRequest(DiscreteSpec(0, 1), **kwargs)

    def test_workers_preserve_order(self, opts):
        spec = PrincipalSpec(1.5, 2, "seq2")
        points = EvalRequest(spec, tuple(linspace_values(-2.0, 2.0, 9)), (0.0, 1.0)).points()
        assert evaluate_rows(spec, points, opts, workers=4) == evaluate_rows(spec, points, opts)

    def test_row_fields(self, rows):
        assert set(rows[0]) == set(CSV_FIELDS)
        assert rows[0]["re"] == pytest.approx(INV_SQRT2_PI)
        assert rows[0]["abs"] == pytest.approx(INV_SQRT2_PI)


class TestOutput:
    """CSV and JSON writers"""

    def test_csv_header(self, rows):
        stream = io.StringIO()
        write_csv(rows, stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "tau,phi,re,im,abs"
        assert len(lines) == 3

    def test_csv_version_line(self, rows):
        stream = io.StringIO()
        write_csv(rows, stream, with_version=True)
        assert stream.getvalue().splitlines()[0] == f"# hyperwave {__version__}"

    def test_csv_leading_index(self, rows):
        stream = io.StringIO()
        write_csv([{"index": "1", **r} for r in rows], stream, leading_fields=("index",))
        assert stream.getvalue().splitlines()[0] == "index,tau,phi,re,im,abs"

    def test_json_round_trip(self, opts, rows):
        stream = io.StringIO()
        metadata = metadata_for(DiscreteSpec(0, 1), opts)
        write_json(rows, metadata, stream)
        stream.seek(0)
        meta, back = read_json(stream)
        assert meta == json.loads(json.dumps(metadata))
        assert meta["spec"] == {"series": "D+", "k": "0", "m": "1"}
        assert [set(r) for r in back] == [{"tau", "phi", "re", "im"}] * 2
        assert back[1]["re"] == rows[1]["re"]

    def test_output_is_deterministic(self, opts, rows):
        first, second = io.StringIO(), io.StringIO()
        metadata = metadata_for(DiscreteSpec(0, 1), opts)
        write_json(rows, metadata, first)
        write_json(rows, metadata, second)
        assert first.getvalue() == second.getvalue()

    def test_split_path(self):
        assert split_path("out/t.csv", "-3/2") == "out/t_m3_2.csv"
        assert split_path("table.json", "4") == "table_4.json"

    def test_write_table_creates_directories(self, tmp_path, rows, opts):
        path = tmp_path / "nested" / "dir" / "t.csv"
        write_table(rows, metadata_for(DiscreteSpec(0, 1), opts), str(path), "csv")
        assert path.read_text(encoding="utf-8").startswith("tau,phi,re,im,abs")

    def test_write_table_reports_path(self, tmp_path, rows, opts):
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        target = blocker / "t.csv"
        with pytest.raises(OSError, match="Cannot write table"):
            write_table(rows, metadata_for(DiscreteSpec(0, 1), opts), str(target), "csv")

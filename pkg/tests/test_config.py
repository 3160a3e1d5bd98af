# flake8: noqa pylint: disable=W,C,R

import json

import pytest

from hyperwave.config import MAX_TERMS_ENV, Config, EvalOptions
from hyperwave.exceptions import ConfigurationError


@pytest.fixture
def config_path(tmp_path):
    return str(tmp_path / "hyperwave" / "defaults.json")


@pytest.fixture
def config(config_path):
    return Config(config_path)


class TestEvalOptions:
    """Numerical policy validation"""

    def test_defaults(self):
        opts = EvalOptions()
        assert opts.fd_step == 1e-4
        assert opts.fd_step_nested == 1e-3
        assert opts.max_terms == 10_000

    @pytest.mark.parametrize("kwargs", [
        {"fd_step": 0.0},
        {"quad_tol": -1e-8},
        {"series_tol": float("nan")},
        {"transform_threshold": 1.0},
        {"max_terms": 10.5},
        {"quad_cutoff": "40"},
        {"max_terms": True},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigurationError):
            EvalOptions(**kwargs)

    def test_with_overrides(self):
        opts = EvalOptions().with_overrides(fd_step=1e-5)
        assert opts.fd_step == 1e-5
        assert opts.quad_tol == EvalOptions().quad_tol

    def test_with_unknown_override(self):
        with pytest.raises(ConfigurationError, match="Unknown option"):
            EvalOptions().with_overrides(step=1e-5)

    def test_from_env(self):
        assert EvalOptions.from_env({MAX_TERMS_ENV: "500"}).max_terms == 500

    def test_from_env_explicit_wins(self):
        assert EvalOptions.from_env({MAX_TERMS_ENV: "500"}, max_terms=20).max_terms == 20

    def test_from_env_bad_value(self):
        with pytest.raises(ConfigurationError, match=MAX_TERMS_ENV):
            EvalOptions.from_env({MAX_TERMS_ENV: "lots"})

    def test_to_dict(self):
        assert EvalOptions().to_dict()["quad_cutoff"] == 40.0


class TestConfig:
    """Persistent defaults"""

    def test_missing_file(self, config):
        assert config.settings == {}
        assert config.get_tolerances() is None
        assert config.get_eval_defaults() is None

    def test_corrupt_file(self, tmp_path):
        path = tmp_path / "defaults.json"
        path.write_text("{not json", encoding="utf-8")
        assert Config(str(path)).settings == {}

    def test_non_dict_file(self, tmp_path):
        path = tmp_path / "defaults.json"
        path.write_text("[1, 2]", encoding="utf-8")
        assert Config(str(path)).settings == {}

    def test_save_creates_directory(self, config, config_path):
        config.save_eval_defaults(fd_step=1e-5)
        with open(config_path, encoding="utf-8") as f:
            assert json.load(f) == {"eval_defaults": {"fd_step": 1e-5}}

    def test_save_eval_defaults_validates(self, config):
        with pytest.raises(ConfigurationError):
            config.save_eval_defaults(fd_step=-1.0)
        assert config.get_eval_defaults() is None

    def test_save_and_reload_tolerances(self, config, config_path):
        config.save_tolerances({"eigen": 1e-3})
        config.save_tolerances({"quad": 1e-6})
        assert Config(config_path).get_tolerances() == {"eigen": 1e-3, "quad": 1e-6}

    @pytest.mark.parametrize("value", [0.0, -1.0, "1e-3"])
    def test_invalid_tolerance(self, config, value):
        with pytest.raises(ConfigurationError):
            config.save_tolerances({"eigen": value})

    def test_priority(self, config, config_path):
        # overrides > config file > environment > defaults
        env = {MAX_TERMS_ENV: "300"}
        assert config.eval_options(env).max_terms == 300

        config.save_eval_defaults(max_terms=200, quad_cutoff=30.0)
        reloaded = Config(config_path)
        assert reloaded.eval_options(env).max_terms == 200
        assert reloaded.eval_options(env, max_terms=100).max_terms == 100
        assert reloaded.eval_options(env, max_terms=None).max_terms == 200
        assert reloaded.eval_options(env).quad_cutoff == 30.0

    def test_unknown_saved_option(self, tmp_path):
        path = tmp_path / "defaults.json"
        path.write_text(json.dumps({"eval_defaults": {"step": 1e-5}}), encoding="utf-8")
        with pytest.raises(ConfigurationError, match="Invalid eval_defaults"):
            Config(str(path)).eval_options({})

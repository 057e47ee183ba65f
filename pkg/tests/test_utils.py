"""Tests for configuration, logging setup and input guards."""

import json
import logging

import pytest

from steiner_chains.utils import (
    ConfigManager,
    DomainError,
    Infeasible,
    InfeasibleReason,
    InputError,
    SteinerConfig,
    ValidationError,
    ensure_chain_length,
    ensure_non_empty_sequence,
    ensure_positive,
    ensure_quadruple,
    get_merged_config,
    setup_logging,
)


class TestConfig:
    def test_save_and_load(self, tmp_path):
        manager = ConfigManager(tmp_path / "nested" / "config.json")
        assert manager.save_config(SteinerConfig(sweep_points=51, number_digits=8))
        loaded = manager.load_config()
        assert loaded.sweep_points == 51
        assert loaded.number_digits == 8
        assert loaded.geometry_tol == SteinerConfig().geometry_tol

    def test_missing_file_gives_defaults(self, tmp_path):
        assert ConfigManager(tmp_path / "absent.json").load_config() == SteinerConfig()

    def test_unreadable_file_gives_defaults(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json", encoding="utf-8")
        assert ConfigManager(path).load_config() == SteinerConfig()

    def test_unknown_keys_are_reported(self, tmp_path, caplog):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"svg_precision": 3, "colour": "red"}), encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            config = ConfigManager(path).load_config()
        assert config.svg_precision == 3
        assert "Unknown config key: colour" in caplog.text

    def test_cli_arguments_override_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"sweep_workers": 2, "feasibility_tol": 1e-4}), encoding="utf-8")
        config = get_merged_config({"sweep_workers": 8, "feasibility_tol": None}, path)
        assert config.sweep_workers == 8
        assert config.feasibility_tol == 1e-4

    def test_without_file(self):
        assert get_merged_config({}) == SteinerConfig()


class TestLogging:
    def test_level_from_argument(self):
        setup_logging("debug")
        root = logging.getLogger()
        assert root.level == logging.DEBUG
        assert len(root.handlers) == 1

    def test_level_from_environment(self, monkeypatch):
        monkeypatch.setenv("STEINER_CHAINS_LOG_LEVEL", "ERROR")
        setup_logging()
        assert logging.getLogger().level == logging.ERROR

    def test_json_lines(self):
        setup_logging("INFO", use_json=True)
        handler = logging.getLogger().handlers[0]
        record = logging.LogRecord("steiner_chains", logging.INFO, __file__, 1, 'radius "%s"', ("2.4",), None)
        doc = json.loads(handler.format(record))
        assert doc["msg"] == 'radius "2.4"'
        assert doc["lvl"] == "INFO"

    def test_reinitialising_does_not_duplicate(self):
        setup_logging("INFO")
        setup_logging("INFO")
        assert len(logging.getLogger().handlers) == 1


class TestGuards:
    def test_positive(self):
        ensure_positive("radii", [1.0, 2.0])
        for bad in (0.0, -1.0, float("inf"), float("nan")):
            with pytest.raises(InputError):
                ensure_positive("radii", [1.0, bad])

    def test_chain_length(self):
        ensure_chain_length(3)
        for bad in (2, 4.0, True):
            with pytest.raises(InputError):
                ensure_chain_length(bad)

    def test_quadruple(self):
        ensure_quadruple("radii", (1.0, 2.0, 3.0, 4.0))
        with pytest.raises(InputError):
            ensure_quadruple("radii", (1.0, 2.0, 3.0))

    def test_non_empty(self):
        with pytest.raises(InputError):
            ensure_non_empty_sequence("bends", [])

    def test_error_hierarchy(self):
        assert issubclass(DomainError, ValidationError)
        assert issubclass(InputError, ValueError)

    def test_infeasible_reason(self):
        error = Infeasible(InfeasibleReason.SIGN_PATTERN, "a and A both positive")
        assert error.reason is InfeasibleReason.SIGN_PATTERN
        assert str(error) == "SignPattern: a and A both positive"

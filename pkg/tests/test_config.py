"""Configuration loading and validation."""
import pytest

from eulerstrip import DEFAULT_CONFIG, Config, load_config


def test_defaults():
    cfg = load_config(None)
    assert cfg is DEFAULT_CONFIG
    assert cfg.delta == 1e-3
    assert cfg.cutoff_c == 1.0
    assert cfg.seed == 0


def test_partial_override(tmp_path):
    f = tmp_path / "cfg.toml"
    f.write_text("delta = 0.01\nseed = 5\n")
    cfg = load_config(f)
    assert cfg.delta == 0.01
    assert cfg.seed == 5
    assert cfg.zero_tol == DEFAULT_CONFIG.zero_tol  # untouched default


def test_unknown_key_rejected(tmp_path):
    f = tmp_path / "cfg.toml"
    f.write_text("delta = 0.01\ntypo_key = 3\n")
    with pytest.raises(ValueError, match="typo_key"):
        load_config(f)


def test_invalid_values_rejected(tmp_path):
    f = tmp_path / "cfg.toml"
    f.write_text("delta = -1.0\n")
    with pytest.raises(ValueError):
        load_config(f)
    f.write_text("ensemble_std_low = 0.9\nensemble_std_high = 0.5\n")
    with pytest.raises(ValueError):
        load_config(f)


def test_config_is_frozen():
    with pytest.raises(Exception):
        DEFAULT_CONFIG.delta = 2.0


def test_validate_returns_self():
    cfg = Config()
    assert cfg.validate() is cfg

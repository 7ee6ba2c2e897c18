"""Unit tests for configuration loader."""
import os

import pytest
import yaml

from knotgroups.config.loader import Config


def test_config_loading(sample_config):
    """Test basic configuration loading."""
    config = Config(sample_config)
    assert config.log_level == "WARNING"
    assert config.truncate == 4
    assert config.degree_cap == 12
    assert config.max_class == 5
    assert config.max_rank == 3
    assert config.default_r == 1
    assert config.include_relation_one is True
    assert config.relation_one is None
    assert config.seed == 7
    assert config.iterations == 4


def test_config_defaults_without_file(temp_dir, monkeypatch):
    """Missing default file falls back to built-in values."""
    monkeypatch.setenv("KNOTGROUPS_CONFIG", os.path.join(temp_dir, "absent.yaml"))
    config = Config()
    assert config.truncate == 6
    assert config.iterations == 100
    assert config.log_level == "WARNING"


def test_config_env_path(sample_config, monkeypatch):
    monkeypatch.setenv("KNOTGROUPS_CONFIG", sample_config)
    assert Config().seed == 7


def test_config_explicit_missing_file(temp_dir):
    """An explicit path must exist."""
    with pytest.raises(OSError):
        Config(os.path.join(temp_dir, "absent.yaml"))


def _write(temp_dir, content):
    path = os.path.join(temp_dir, "bad.yaml")
    with open(path, 'w') as f:
        f.write(content)
    return path


def test_config_invalid_log_level(temp_dir):
    path = _write(temp_dir, "logging:\n  level: LOUD\n")
    with pytest.raises(ValueError, match="logging.level"):
        Config(path)


def test_config_class_out_of_range(temp_dir):
    path = _write(temp_dir, "nilpotent:\n  maxClass: 7\n")
    with pytest.raises(ValueError, match="maxClass"):
        Config(path)


def test_config_non_positive_truncate(temp_dir):
    path = _write(temp_dir, "algebra:\n  truncate: 0\n")
    with pytest.raises(ValueError, match="algebra.truncate"):
        Config(path)


def test_config_root_must_be_mapping(temp_dir):
    path = _write(temp_dir, "- 1\n- 2\n")
    with pytest.raises(ValueError, match="mapping"):
        Config(path)


def test_save_config(sample_config, temp_dir):
    """Saved configuration reloads to the same values."""
    config = Config(sample_config)
    config.truncate = 5
    target = os.path.join(temp_dir, "saved.yaml")
    config.save_config(target)

    with open(target) as f:
        raw = yaml.safe_load(f)
    assert raw['algebra']['truncate'] == 5

    reloaded = Config(target)
    assert reloaded.truncate == 5
    assert reloaded.seed == config.seed

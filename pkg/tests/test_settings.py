import json

import pytest

from hessberg.settings import DEFAULT_CONFIG, Settings, default_config_path


def test_defaults_without_file(isolated_config):
    s = Settings()
    assert s.config_path == str(isolated_config)
    assert s.seed == DEFAULT_CONFIG["seed"]
    assert s.jobs == 1
    assert s.ceilings == {"A": 6, "B": 4, "C": 4, "D": 5}
    assert s.output == "table"
    assert not isolated_config.exists()


def test_env_overrides_path(monkeypatch, tmp_path):
    monkeypatch.setenv("HESSBERG_CONFIG", str(tmp_path / "x.json"))
    assert default_config_path() == str(tmp_path / "x.json")
    monkeypatch.delenv("HESSBERG_CONFIG")
    assert default_config_path().endswith("config.json")


def test_setters_persist(isolated_config):
    s = Settings()
    s.seed = 7
    s.nf_samples = 10
    reloaded = Settings(str(isolated_config))
    assert reloaded.seed == 7
    assert reloaded.nf_samples == 10


def test_missing_keys_are_backfilled(isolated_config):
    isolated_config.write_text(json.dumps({"seed": 3, "ceilings": {"A": 8}}))
    s = Settings()
    assert s.seed == 3
    assert s.perm_samples == DEFAULT_CONFIG["perm_samples"]
    assert s.ceilings == {"A": 8, "B": 4, "C": 4, "D": 5}


def test_corrupt_file_falls_back(isolated_config):
    isolated_config.write_text("{not json")
    assert Settings().seed == DEFAULT_CONFIG["seed"]


def test_output_is_validated():
    s = Settings()
    s.output = "json"
    assert s.output == "json"
    with pytest.raises(ValueError):
        s.output = "yaml"


def test_jobs_floor():
    s = Settings()
    s.jobs = 0
    assert s.jobs == 1

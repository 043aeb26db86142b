import json

import pytest


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point settings at a throwaway file so tests never touch ~/.hessberg."""
    path = tmp_path / "config.json"
    monkeypatch.setenv("HESSBERG_CONFIG", str(path))
    monkeypatch.delenv("HESSBERG_JOBS", raising=False)
    return path


@pytest.fixture
def quick_config(isolated_config):
    isolated_config.write_text(json.dumps({"nf_samples": 25, "perm_samples": 5, "coeff_samples": 2}))
    return isolated_config

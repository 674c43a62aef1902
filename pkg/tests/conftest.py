import pytest
from hypothesis import settings

import config

settings.register_profile("workbench", deadline=None, max_examples=60)
settings.load_profile("workbench")


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path, monkeypatch):
    """Keep caches, stored reports and PDFs out of the project tree"""
    monkeypatch.setattr(config, "CACHE_DIR", tmp_path / "cache")
    monkeypatch.setattr(config, "STORE_DIR", tmp_path / "cache" / "reports")
    monkeypatch.setattr(config, "OUTPUT_DIR", tmp_path / "output")
    monkeypatch.setattr(config, "FORCE_REFRESH", False)
    return tmp_path

"""
共通フィクスチャ
"""

import pytest

from hspectra.containers import reset_application


@pytest.fixture(autouse=True)
def fresh_application(monkeypatch):
    """テストごとにアプリケーションと環境変数をリセット"""
    for key in (
        "HSPECTRA_CONFIG_PATH",
        "HSPECTRA_THREADS",
        "HSPECTRA_CAP_VISITED",
        "HSPECTRA_DEBUG",
        "HSPECTRA_LOG_LEVEL",
    ):
        monkeypatch.delenv(key, raising=False)
    reset_application()
    yield
    reset_application()

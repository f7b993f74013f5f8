"""
依存性注入コンテナ

dependency-injectorを使用して、設定・出力ライター・実験サービスを組み立てます。
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dependency_injector import containers, providers

from .config import LabConfig
from .service.experiment_service import ExperimentService
from .service.output_writer import OutputWriter

logger = logging.getLogger(__name__)


def init_logging(lab_config: LabConfig):
    """ログ設定リソース（終了時に追加したハンドラーを外す）"""
    handlers = lab_config.setup_logging()
    yield handlers
    root = logging.getLogger()
    for handler in handlers:
        root.removeHandler(handler)
        handler.close()


class LabContainer(containers.DeclarativeContainer):
    """実験ラボの依存性注入コンテナ"""

    # 設定プロバイダー（LabConfig.to_dict() を注入）
    config = providers.Configuration()

    # LabConfig本体
    lab_config = providers.Object(LabConfig())

    # ログ設定プロバイダー
    logging_provider = providers.Resource(init_logging, lab_config)

    # 出力ライタープロバイダー
    output_writer = providers.Singleton(OutputWriter)

    # 実験サービスプロバイダー
    experiment_service = providers.Singleton(
        ExperimentService,
        config=lab_config,
        writer=output_writer,
    )


class LabApplication:
    """
    実験ラボアプリケーションクラス

    設定の読み込み・環境変数の反映・検証を行い、
    コンテナからサービスを取り出します。
    """

    def __init__(self, config_path: Optional[Path] = None):
        self.container = LabContainer()
        env_config_path = os.environ.get("HSPECTRA_CONFIG_PATH")
        if config_path is None and env_config_path:
            config_path = Path(env_config_path)
        self.config_path = config_path
        self.lab_config: Optional[LabConfig] = None
        self._initialized = False

    def initialize(self, overrides: Optional[dict] = None) -> None:
        """アプリケーションを初期化"""
        if self._initialized:
            return

        lab_config = LabConfig.load_from_file(self.config_path)
        lab_config.apply_environment_overrides()
        for key, value in (overrides or {}).items():
            section, name = key.split(".", 1)
            setattr(getattr(lab_config, section), name, value)
        lab_config.validate()

        self.lab_config = lab_config
        self.container.lab_config.override(providers.Object(lab_config))
        self.container.config.from_dict(lab_config.to_dict())
        self.container.init_resources()

        self._initialized = True
        logger.debug(f"設定を読み込みました: {self.config_path or 'デフォルト'}")

    def get_experiment_service(self) -> ExperimentService:
        """実験サービスインスタンスを取得"""
        self.initialize()
        return self.container.experiment_service()

    def get_config_value(self, key: str, default=None):
        """
        設定値を取得

        Args:
            key: 設定キー（ドット記法対応、例: "search.shard_size"）
            default: デフォルト値
        """
        try:
            value = self.container.config
            for part in key.split("."):
                value = getattr(value, part)
            result = value()
            return default if result is None else result
        except Exception:
            return default

    def shutdown(self) -> None:
        """リソースを解放"""
        if self._initialized:
            self.container.shutdown_resources()
            self.container.lab_config.reset_override()
            self._initialized = False

    def is_initialized(self) -> bool:
        """初期化済みかどうかを確認"""
        return self._initialized


# グローバルアプリケーションインスタンス
_app_instance: Optional[LabApplication] = None


def get_application(config_path: Optional[Path] = None) -> LabApplication:
    """
    アプリケーションインスタンスを取得（シングルトン）

    Args:
        config_path: 設定ファイルパス

    Returns:
        LabApplication: アプリケーションインスタンス
    """
    global _app_instance

    if _app_instance is None:
        _app_instance = LabApplication(config_path)

    return _app_instance


def reset_application() -> None:
    """アプリケーションインスタンスをリセット（テスト用）"""
    global _app_instance
    if _app_instance is not None:
        _app_instance.shutdown()
    _app_instance = None

"""
設定管理モジュール

実験ラボの設定を管理し、TOML設定ファイルの読み込みと
環境変数の処理を行います。
"""

import logging
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from .domain.models import MAX_SYMBOLS
from .observability.logger import StructuredFormatter
from .utils import get_env_bool, get_env_int

DEFAULT_CONFIG_PATH = Path(__file__).parent / "hspectra.toml"


@dataclass
class MachineConfig:
    """機械実行の設定"""

    cap_visited: int = 1 << 22  # サイクル検出の訪問記録上限
    max_symbols: int = MAX_SYMBOLS  # 機械クラスの記号数上限


@dataclass
class SearchConfig:
    """K_t探索・センサスの設定"""

    budget_c2: int = 256
    budget_c0: int = 64
    max_class_size: int = 1 << 21
    max_total_steps: int = 1 << 31
    shard_size: int = 4096


@dataclass
class SpectraConfig:
    """スペクトル解析の設定"""

    tolerance: float = 1e-12
    band_exponent: float = -2.0
    band_width: float = 0.05
    fourier_steps: int = 4096


@dataclass
class RuntimeConfig:
    """並列実行の設定"""

    threads: int = 1


@dataclass
class LoggingConfig:
    """ログ設定"""

    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file_path: Optional[str] = None
    max_file_size: int = 10 * 1024 * 1024  # 10MB
    backup_count: int = 5
    structured: bool = False


@dataclass
class LabConfig:
    """実験ラボ全体設定"""

    debug: bool = False
    machine: MachineConfig = field(default_factory=MachineConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    spectra: SpectraConfig = field(default_factory=SpectraConfig)
    runtime: RuntimeConfig = field(default_factory=RuntimeConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def load_from_file(cls, config_path: Optional[Path] = None) -> "LabConfig":
        """
        設定ファイルから設定を読み込む

        Args:
            config_path: 設定ファイルのパス（Noneの場合は同梱の hspectra.toml）

        Returns:
            LabConfig: 読み込まれた設定
        """
        if config_path is None:
            config_path = DEFAULT_CONFIG_PATH
        config_path = Path(config_path)

        if not config_path.exists():
            logging.warning(f"設定ファイルが見つかりません: {config_path}")
            return cls()

        try:
            with open(config_path, "rb") as f:
                config_data = tomllib.load(f)

            return cls._from_dict(config_data)

        except Exception as e:
            logging.error(f"設定ファイルの読み込みに失敗しました: {e}")
            return cls()

    @classmethod
    def _from_dict(cls, data: Dict[str, Any]) -> "LabConfig":
        """辞書から設定オブジェクトを作成"""
        config = cls()
        for section in ("machine", "search", "spectra", "runtime", "logging"):
            if section in data:
                current = getattr(config, section)
                values = {
                    item.name: data[section].get(item.name, getattr(current, item.name))
                    for item in fields(current)
                }
                setattr(config, section, type(current)(**values))

        config.debug = data.get("debug", config.debug)
        return config

    def apply_environment_overrides(self) -> None:
        """環境変数による設定の上書き"""
        self.runtime.threads = max(1, get_env_int("HSPECTRA_THREADS", self.runtime.threads))
        self.machine.cap_visited = get_env_int("HSPECTRA_CAP_VISITED", self.machine.cap_visited)
        self.debug = get_env_bool("HSPECTRA_DEBUG", self.debug)

        if os.getenv("HSPECTRA_LOG_LEVEL"):
            self.logging.level = os.getenv("HSPECTRA_LOG_LEVEL").upper()

    def validate(self) -> None:
        """設定値の検証"""
        errors: List[str] = []

        if self.machine.cap_visited <= 0:
            errors.append("machine.cap_visitedは正の値である必要があります")
        if not 2 <= self.machine.max_symbols <= MAX_SYMBOLS:
            errors.append(f"machine.max_symbolsは2以上{MAX_SYMBOLS}以下である必要があります")

        if self.search.budget_c2 < 0:
            errors.append("search.budget_c2は0以上である必要があります")
        if self.search.budget_c0 < 1:
            errors.append("search.budget_c0は1以上である必要があります")
        if self.search.max_class_size <= 0:
            errors.append("search.max_class_sizeは正の値である必要があります")
        if self.search.max_total_steps <= 0:
            errors.append("search.max_total_stepsは正の値である必要があります")
        if self.search.shard_size <= 0:
            errors.append("search.shard_sizeは正の値である必要があります")

        if not 0.0 < self.spectra.tolerance <= 1e-6:
            errors.append("spectra.toleranceは(0, 1e-6]の範囲である必要があります")
        if self.spectra.band_width <= 0:
            errors.append("spectra.band_widthは正の値である必要があります")
        if self.spectra.fourier_steps < 3:
            errors.append("spectra.fourier_stepsは3以上である必要があります")

        if self.runtime.threads < 1:
            errors.append("runtime.threadsは1以上である必要があります")

        if self.logging.level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"サポートされていないログレベル: {self.logging.level}")

        if errors:
            raise ValueError(f"設定エラー: {', '.join(errors)}")

    def to_dict(self) -> Dict[str, Any]:
        """全設定の辞書"""
        return asdict(self)

    def echo_dict(self) -> Dict[str, Any]:
        """
        出力ヘッダに埋め込む設定エコー

        結果に影響しないログ設定と並列度は含めません。
        """
        data = self.to_dict()
        for key in ("logging", "debug", "runtime"):
            data.pop(key)
        return data

    def setup_logging(self) -> "List[logging.Handler]":
        """ログ設定を適用し、追加したハンドラーを返す"""
        log_level = getattr(logging, self.logging.level.upper(), logging.WARNING)

        if self.logging.structured:
            formatter: logging.Formatter = StructuredFormatter()
        else:
            formatter = logging.Formatter(self.logging.format)

        handlers: List[logging.Handler] = []

        # コンソールハンドラー（標準エラー）
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        handlers.append(console_handler)

        # ファイルハンドラー（設定されている場合）
        if self.logging.file_path:
            from logging.handlers import RotatingFileHandler

            file_handler = RotatingFileHandler(
                self.logging.file_path,
                maxBytes=self.logging.max_file_size,
                backupCount=self.logging.backup_count,
            )
            file_handler.setFormatter(formatter)
            handlers.append(file_handler)

        logging.basicConfig(level=log_level, handlers=handlers, force=True)

        if self.debug:
            logging.getLogger().setLevel(logging.DEBUG)

        return handlers

"""
構造化ログ出力クラス

実験の進行状況（実行結果・スイープ点・探索進捗・性能値）を
JSON形式の構造化ログとして記録します。
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional


class StructuredLogger:
    """
    構造化ログ出力クラス

    キーワード引数を structured_data として LogRecord に付与します。
    ハンドラーを持たない場合はルートロガーへ伝播します。
    """

    def __init__(
        self,
        name: str,
        level: Optional[int] = None,
        enable_console: bool = False,
        enable_file: bool = False,
        file_path: Optional[str] = None,
    ):
        self.name = name
        self.logger = logging.getLogger(name)
        if level is not None:
            self.logger.setLevel(level)

        if enable_console or (enable_file and file_path):
            self.logger.handlers.clear()
            self.logger.propagate = False

        # データ出力と混ざらないよう標準エラーへ
        if enable_console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(StructuredFormatter())
            self.logger.addHandler(console_handler)

        if enable_file and file_path:
            try:
                file_handler = logging.FileHandler(file_path, encoding="utf-8")
                file_handler.setFormatter(StructuredFormatter())
                self.logger.addHandler(file_handler)
            except OSError as e:
                self.logger.error(f"ファイルハンドラーの作成に失敗しました: {e}")

    def isEnabledFor(self, level: int) -> bool:
        return self.logger.isEnabledFor(level)

    def debug(self, message: str, **kwargs) -> None:
        """デバッグレベルログ"""
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs) -> None:
        """情報レベルログ"""
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs) -> None:
        """警告レベルログ"""
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, error: Optional[Exception] = None, **kwargs) -> None:
        """エラーレベルログ"""
        if error:
            kwargs["error_type"] = type(error).__name__
            kwargs["error_message"] = str(error)
        self._log(logging.ERROR, message, **kwargs)

    def _log(self, level: int, message: str, **kwargs) -> None:
        if not self.logger.isEnabledFor(level):
            return
        extra = {
            "structured_data": kwargs,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        self.logger.log(level, message, extra=extra)

    def log_run_outcome(self, outcome: str, steps: int, budget: int, **kwargs) -> None:
        """機械1台の実行結果ログ"""
        self.debug(
            f"Run finished: {outcome}", outcome=outcome, steps=steps, budget=budget, **kwargs
        )

    def log_sweep_point(
        self, truncation: int, length: int, halted: bool, gap: float, **kwargs
    ) -> None:
        """打ち切りスイープの1点"""
        self.info(
            f"Sweep point: N={truncation}",
            truncation=truncation,
            length=length,
            halted=halted,
            gap=gap,
            **kwargs,
        )

    def log_search_progress(
        self, searched: int, total: int, found: Optional[int] = None, **kwargs
    ) -> None:
        """網羅探索の進捗"""
        self.info(
            f"Search progress: {searched}/{total}",
            searched=searched,
            total=total,
            found=found,
            **kwargs,
        )

    def log_performance_metric(
        self, metric_name: str, value: float, unit: str = "", **kwargs
    ) -> None:
        """パフォーマンスメトリクスログ"""
        self.info(
            f"Performance metric: {metric_name}",
            metric_name=metric_name,
            value=value,
            unit=unit,
            **kwargs,
        )


class StructuredFormatter(logging.Formatter):
    """
    構造化ログフォーマッター

    ログレコードをJSON形式（1行1レコード）で出力します。
    """

    def format(self, record: logging.LogRecord) -> str:
        """ログレコードをJSON形式でフォーマット"""
        log_data: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        log_data["process"] = {
            "pid": record.process,
            "thread": record.thread,
        }

        if hasattr(record, "structured_data"):
            log_data.update(record.structured_data)

        if record.exc_info:
            log_data["exception"] = {
                "type": record.exc_info[0].__name__ if record.exc_info[0] else None,
                "message": str(record.exc_info[1]) if record.exc_info[1] else None,
                "traceback": self.formatException(record.exc_info),
            }

        try:
            return json.dumps(log_data, ensure_ascii=False, separators=(",", ":"))
        except (TypeError, ValueError) as e:
            # JSON化に失敗した場合はフォールバック
            fallback_data = {
                "timestamp": log_data["timestamp"],
                "level": log_data["level"],
                "logger": log_data["logger"],
                "message": log_data["message"],
                "json_error": str(e),
            }
            return json.dumps(fallback_data, ensure_ascii=False, separators=(",", ":"))


class LoggerFactory:
    """
    ロガーファクトリー

    統一された設定でStructuredLoggerインスタンスを作成します。
    """

    _default_config: Dict[str, Any] = {
        "level": None,
        "enable_console": False,
        "enable_file": False,
        "file_path": None,
    }

    @classmethod
    def create_logger(cls, name: str, **kwargs) -> StructuredLogger:
        """構造化ロガーを作成"""
        config = cls._default_config.copy()
        config.update(kwargs)
        return StructuredLogger(name, **config)

    @classmethod
    def create_search_logger(cls) -> StructuredLogger:
        """K_t探索・センサス専用ロガーを作成"""
        return cls.create_logger("hspectra.search")

    @classmethod
    def create_spectra_logger(cls) -> StructuredLogger:
        """スペクトル解析専用ロガーを作成"""
        return cls.create_logger("hspectra.spectra")

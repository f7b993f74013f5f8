"""
出力ライター

実験結果をCSV・JSONとして書き出します。
CSVの先頭2行はコメント（生成時刻と設定エコー）で、データ行には時刻を含めません。
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import pandas as pd

from ..utils import atomic_write_text

logger = logging.getLogger(__name__)


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class OutputWriter:
    """CSV・JSON出力（一時ファイル経由のアトミック書き込み）"""

    def __init__(self, clock: Optional[Callable[[], str]] = None):
        self._clock = clock or _utc_now

    @staticmethod
    def config_line(config: Dict[str, Any]) -> str:
        return json.dumps(config, sort_keys=True, separators=(",", ":"), ensure_ascii=False)

    def render_csv(self, frame: pd.DataFrame, config: Dict[str, Any]) -> str:
        header = f"# generated_at={self._clock()}\n# config={self.config_line(config)}\n"
        return header + frame.to_csv(index=False, lineterminator="\n")

    @staticmethod
    def render_json(payload: Dict[str, Any]) -> str:
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def write_csv(self, path: Path, frame: pd.DataFrame, config: Dict[str, Any]) -> Path:
        """設定エコー付きCSVを書き出す"""
        path = Path(path)
        atomic_write_text(path, self.render_csv(frame, config))
        logger.info(f"CSVを書き出しました: {path} ({len(frame)} 行)")
        return path

    def write_json(self, path: Path, payload: Dict[str, Any]) -> Path:
        """キー順を固定したJSONを書き出す"""
        path = Path(path)
        atomic_write_text(path, self.render_json(payload))
        logger.info(f"JSONを書き出しました: {path}")
        return path


def strip_comment_lines(text: str) -> str:
    """コメント行（# で始まる行）を除いたデータ部分"""
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("#"))

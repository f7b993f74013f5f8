"""
ユーティリティモジュール

hspectra全体で使用される共通機能を提供します。
"""

import logging
import os
import tempfile
import time
from pathlib import Path
from typing import List, Optional

logger = logging.getLogger(__name__)


def ensure_directory(path: Path) -> None:
    """
    ディレクトリが存在しない場合は作成

    Args:
        path: ディレクトリパス
    """
    try:
        path.mkdir(parents=True, exist_ok=True)
    except Exception as e:
        logger.error(f"ディレクトリの作成に失敗しました: {path} - {e}")
        raise


def atomic_write_text(file_path: Path, content: str, encoding: str = "utf-8") -> None:
    """
    ファイルをアトミックに書き込み

    同じディレクトリの一時ファイルに書き込んでから置き換えるため、
    読み手が書きかけの内容を見ることはありません。

    Args:
        file_path: ファイルパス
        content: 書き込み内容
        encoding: エンコーディング
    """
    file_path = Path(file_path)
    ensure_directory(file_path.parent)

    fd, temp_name = tempfile.mkstemp(
        dir=file_path.parent, prefix=f".{file_path.name}.", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding=encoding, newline="") as f:
            f.write(content)
        os.replace(temp_name, file_path)
    except Exception as e:
        logger.error(f"ファイルの書き込みに失敗しました: {file_path} - {e}")
        Path(temp_name).unlink(missing_ok=True)
        raise


def parse_int_list(text: str) -> List[int]:
    """
    "64,128,256" 形式の文字列を整数リストに変換

    Raises:
        ValueError: 整数として解釈できない要素がある場合
    """
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            values.append(int(part))
        except ValueError:
            raise ValueError(f"整数として解釈できません: {part!r}")
    if not values:
        raise ValueError("整数を1つ以上指定してください")
    return values


class DebugTimer:
    """デバッグ用のタイマークラス"""

    def __init__(self, name: str):
        self.name = name
        self.start_time: Optional[float] = None
        self.elapsed: float = 0.0

    def __enter__(self):
        self.start_time = time.perf_counter()
        logger.debug(f"[{self.name}] 開始")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.start_time is not None:
            self.elapsed = time.perf_counter() - self.start_time
            logger.debug(f"[{self.name}] 完了 ({self.elapsed:.3f}秒)")


def get_env_bool(key: str, default: bool = False) -> bool:
    """
    環境変数をbool値として取得

    Args:
        key: 環境変数名
        default: デフォルト値

    Returns:
        bool: 環境変数の値
    """
    value = os.getenv(key)
    if value is None:
        return default

    return value.lower() in ("true", "1", "yes", "on")


def get_env_int(key: str, default: int = 0) -> int:
    """
    環境変数をint値として取得（解釈できなければ警告してデフォルト）

    Args:
        key: 環境変数名
        default: デフォルト値

    Returns:
        int: 環境変数の値
    """
    value = os.getenv(key)
    if value is None:
        return default

    try:
        return int(value)
    except ValueError:
        logger.warning(f"環境変数 {key} が整数ではありません: {value!r}")
        return default

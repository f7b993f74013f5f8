"""
観測性モジュール

構造化ログ出力を提供します。
"""

from .logger import LoggerFactory, StructuredFormatter, StructuredLogger

__all__ = ["LoggerFactory", "StructuredFormatter", "StructuredLogger"]

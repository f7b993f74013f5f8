"""
Service層

CLIの各サブコマンドに対応する実験の実行と出力を提供します。
"""

from .experiment_service import ExperimentConfig, ExperimentService
from .output_writer import OutputWriter, strip_comment_lines

__all__ = ["ExperimentConfig", "ExperimentService", "OutputWriter", "strip_comment_lines"]

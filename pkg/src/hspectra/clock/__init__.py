"""
Clock層

計算の実行履歴からクロック鎖とそのハミルトニアンを構築します。
"""

from .chain import build_chain
from .hamiltonian import hamiltonian, hamiltonian_frame, uniform_chain

__all__ = ["build_chain", "hamiltonian", "hamiltonian_frame", "uniform_chain"]

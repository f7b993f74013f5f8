"""
hspectra - 停止問題とスペクトルギャップの卓上実験ラボ

小さなチューリング機械を実行し、その計算履歴をクロック鎖の
三重対角ハミルトニアンに写してスペクトルギャップを調べます。
あわせて時間制限付きコルモゴロフ複雑度 K_t の網羅探索と
停止センサスを提供します。

構成:
- Domain層: 機械・スペクトル・K_t のドメインモデル
- Machine層: シミュレータ、ゲーデル番号、サイクル検出
- Clock層: クロック鎖とハミルトニアン
- Spectra層: 固有値、LDOS、ギャップ分類
- AIC層: K_t 探索とセンサス
- Service層: 実験の実行と出力
"""

__version__ = "0.1.0"
__author__ = "hspectra developers"

from .aic import halting_census, kt_budget_curve, kt_search, literal_writer
from .clock import build_chain, hamiltonian
from .domain import KtQuery, MachineClass, TuringMachine
from .machine import decode, encode, enumerate_machines, run, step
from .spectra import gap_below_epsilon, gap_sweep, spectrum_report

__all__ = [
    "KtQuery",
    "MachineClass",
    "TuringMachine",
    "build_chain",
    "decode",
    "encode",
    "enumerate_machines",
    "gap_below_epsilon",
    "gap_sweep",
    "hamiltonian",
    "halting_census",
    "kt_budget_curve",
    "kt_search",
    "literal_writer",
    "run",
    "spectrum_report",
    "step",
]

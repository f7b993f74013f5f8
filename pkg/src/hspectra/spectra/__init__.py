"""
Spectra層

クロック鎖の固有値計算、ギャップ解析、フーリエ双対性、
停止性を考慮したギャップ分類を提供します。
"""

from .classify import fit_exponent, gap_below_epsilon, gap_sweep
from .dynamics import recover_spectrum, return_amplitude_series
from .solver import (
    analytic_gap,
    analytic_uniform_spectrum,
    chain_gap,
    eigenvalues,
    ground_gap,
    ldos,
    spectrum_report,
)

__all__ = [
    "analytic_gap",
    "analytic_uniform_spectrum",
    "chain_gap",
    "eigenvalues",
    "fit_exponent",
    "gap_below_epsilon",
    "gap_sweep",
    "ground_gap",
    "ldos",
    "recover_spectrum",
    "return_amplitude_series",
    "spectrum_report",
]

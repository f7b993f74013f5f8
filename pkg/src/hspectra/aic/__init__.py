"""
AIC層

時間制限付きアルゴリズム情報量（K_t）の網羅探索と停止センサスを提供します。
"""

from .census import census_curve, halting_census
from .search import SearchLimits, default_budget_curve, kt_budget_curve, kt_search
from .writer import literal_upper_bound, literal_writer

__all__ = [
    "SearchLimits",
    "census_curve",
    "default_budget_curve",
    "halting_census",
    "kt_budget_curve",
    "kt_search",
    "literal_upper_bound",
    "literal_writer",
]

"""
Domain層

チューリング機械・クロック鎖・スペクトル・K_t のドメインモデルを定義します。
"""

from .errors import HSpectraError
from .information import BudgetRule, CensusReport, KtCertificate, KtHit, KtQuery
from .models import (
    STOP,
    Configuration,
    CycleCertificate,
    MachineClass,
    Move,
    OutcomeKind,
    RunRecord,
    Transition,
    TuringMachine,
    format_symbols,
    parse_symbols,
)
from .spectral import (
    ClockChain,
    EpsilonAnswer,
    EpsilonVerdict,
    GapClassification,
    SpectrumReport,
    TridiagonalHamiltonian,
    VerdictKind,
)

__all__ = [
    "STOP",
    "BudgetRule",
    "CensusReport",
    "ClockChain",
    "Configuration",
    "CycleCertificate",
    "EpsilonAnswer",
    "EpsilonVerdict",
    "GapClassification",
    "HSpectraError",
    "KtCertificate",
    "KtHit",
    "KtQuery",
    "MachineClass",
    "Move",
    "OutcomeKind",
    "RunRecord",
    "SpectrumReport",
    "Transition",
    "TridiagonalHamiltonian",
    "TuringMachine",
    "VerdictKind",
    "format_symbols",
    "parse_symbols",
]

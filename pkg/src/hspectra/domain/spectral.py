"""
スペクトル関連のドメインモデル

クロック鎖、三重対角ハミルトニアン、スペクトル報告、
ギャップ分類結果を定義します。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from .models import CycleCertificate, MachineClass, RunRecord, SymbolString, format_symbols


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class ClockChain:
    """
    クロック鎖

    実行履歴（クロック状態）の数 length と停止フラグを保持します。
    halted=False の場合、鎖は打ち切り長 truncation まで満たされます。
    """

    length: int
    halted: bool
    truncation: int
    source_code: int
    source_class: MachineClass
    source_input: SymbolString
    record: RunRecord

    @property
    def halt_steps(self) -> Optional[int]:
        return self.record.steps if self.halted else None

    @property
    def certificate(self) -> Optional[CycleCertificate]:
        return self.record.certificate

    def to_dict(self) -> Dict[str, Any]:
        return {
            "length": self.length,
            "halted": self.halted,
            "truncation": self.truncation,
            "code": self.source_code,
            "class": str(self.source_class),
            "input": format_symbols(self.source_input),
        }


@dataclass(frozen=True, eq=False)
class TridiagonalHamiltonian:
    """実対称三重対角ハミルトニアン（ホッピング振幅1の単位系）"""

    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self) -> None:
        diagonal = _frozen(self.diagonal)
        off_diagonal = _frozen(self.off_diagonal)
        if diagonal.ndim != 1 or diagonal.size < 1:
            raise ValueError("対角成分は長さ1以上の1次元配列である必要があります")
        if off_diagonal.shape != (diagonal.size - 1,):
            raise ValueError(
                f"非対角成分の長さは {diagonal.size - 1} である必要があります: {off_diagonal.size}"
            )
        object.__setattr__(self, "diagonal", diagonal)
        object.__setattr__(self, "off_diagonal", off_diagonal)

    @property
    def dimension(self) -> int:
        return int(self.diagonal.size)

    def to_dense(self) -> np.ndarray:
        """検証用の密行列"""
        matrix = np.diag(self.diagonal)
        if self.dimension > 1:
            matrix += np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)
        return matrix

    def trace(self) -> float:
        return float(self.diagonal.sum())

    def frobenius_squared(self) -> float:
        return float(np.sum(self.diagonal**2) + 2.0 * np.sum(self.off_diagonal**2))


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """固有値・基底ギャップ・準位間隔・LDOS重み"""

    eigenvalues: np.ndarray
    ldos_weights: np.ndarray
    site: int = 0
    level_spacings: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        eigenvalues = _frozen(self.eigenvalues)
        object.__setattr__(self, "eigenvalues", eigenvalues)
        object.__setattr__(self, "ldos_weights", _frozen(self.ldos_weights))
        object.__setattr__(self, "level_spacings", _frozen(np.diff(eigenvalues)))

    @property
    def dimension(self) -> int:
        return int(self.eigenvalues.size)

    @property
    def ground_gap(self) -> Optional[float]:
        if self.dimension < 2:
            return None
        return float(self.eigenvalues[1] - self.eigenvalues[0])


class VerdictKind(str, Enum):
    """ギャップ分類"""

    GAPPED = "GAPPED"
    GAPLESS_TREND = "GAPLESS_TREND"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SweepPoint:
    """打ち切りスイープの1点"""

    truncation: int
    length: int
    halted: bool
    gap: float
    exponent_so_far: Optional[float] = None

    def to_row(self) -> Dict[str, Any]:
        return {
            "truncation": self.truncation,
            "length": self.length,
            "halted": self.halted,
            "gap": self.gap,
            "exponent_so_far": self.exponent_so_far,
        }


@dataclass(frozen=True)
class GapClassification:
    """停止性を考慮したギャップ分類の結果"""

    verdict: VerdictKind
    sweep: Tuple[SweepPoint, ...]
    halt_steps: Optional[int] = None
    gap: Optional[float] = None
    exponent: Optional[float] = None
    certificate: Optional[CycleCertificate] = None
    within_band: Optional[bool] = None
    budget: Optional[int] = None

    def summary_line(self) -> str:
        """CLI向けの1行要約"""
        if self.verdict is VerdictKind.GAPPED:
            return f"GAPPED T={self.halt_steps} gap={self.gap:.12g}"
        if self.verdict is VerdictKind.GAPLESS_TREND:
            certificate = "cycle" if self.certificate is not None else "none"
            return f"GAPLESS_TREND exponent≈{self.exponent:.4f} certificate={certificate}"
        return "UNKNOWN"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "halt_steps": self.halt_steps,
            "gap": self.gap,
            "exponent": self.exponent,
            "within_band": self.within_band,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "budget": self.budget,
            "sweep": [point.to_row() for point in self.sweep],
        }


class EpsilonAnswer(str, Enum):
    """ギャップ < ε 判定の三分法"""

    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class EpsilonVerdict:
    """gap_below_epsilon の結果"""

    answer: EpsilonAnswer
    epsilon: float
    budget_truncation: int
    witness: Optional[int] = None
    halt_steps: Optional[int] = None
    gap: Optional[float] = None
    certificate: Optional[CycleCertificate] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "answer": self.answer.value,
            "epsilon": self.epsilon,
            "budget_truncation": self.budget_truncation,
            "witness": self.witness,
            "halt_steps": self.halt_steps,
            "gap": self.gap,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }

"""
アルゴリズム情報量関連のドメインモデル

時間制限付き最短プログラム探索（K_t）と停止センサスの
問い合わせ・結果オブジェクトを定義します。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .errors import ResourceCapExceededError
from .models import MachineClass, OutcomeKind, SymbolString, format_symbols


@dataclass(frozen=True)
class BudgetRule:
    """ステップ予算 t(n) = c2·(n+1)² + c0"""

    c2: int = 256
    c0: int = 64

    def __post_init__(self) -> None:
        if self.c2 < 0:
            raise ValueError(f"c2 は0以上である必要があります: {self.c2}")
        if self.c0 < 1:
            raise ValueError(f"c0 は1以上である必要があります: {self.c0}")

    def budget(self, length: int, max_steps: Optional[int] = None) -> int:
        value = self.c2 * (length + 1) ** 2 + self.c0
        if max_steps is not None and value > max_steps:
            raise ResourceCapExceededError(
                f"予算 t({length}) = {value} がステップ上限 {max_steps} を超えています"
            )
        return value

    def scaled(self, factor: int) -> "BudgetRule":
        """予算全体を factor 倍した規則"""
        return BudgetRule(self.c2 * factor, self.c0 * factor)


@dataclass(frozen=True)
class KtQuery:
    """K_t 探索の問い合わせ"""

    target: SymbolString
    machine_class: MachineClass
    budget_rule: BudgetRule = field(default_factory=BudgetRule)

    @property
    def budget(self) -> int:
        return self.budget_rule.budget(len(self.target))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": format_symbols(self.target),
            "class": str(self.machine_class),
            "c2": self.budget_rule.c2,
            "c0": self.budget_rule.c0,
            "budget": self.budget,
        }


@dataclass(frozen=True, order=True)
class KtHit:
    """探索で見つかった最短コード"""

    code: int
    code_bit_length: int
    halt_steps: int


@dataclass(frozen=True)
class KtCertificate:
    """
    K_t 証明書

    found がある場合、それより小さいコードで目標を予算内に出力する機械は存在しません。
    exhaustive_up_to はクラス内で全コードを調べ終えた最大のビット長です。
    """

    target: SymbolString
    machine_class: MachineClass
    budget: int
    found: Optional[KtHit]
    exhaustive_up_to: int
    machines_searched: int = 0
    total_steps: int = 0
    complete: bool = True

    @property
    def target_echo(self) -> str:
        return format_symbols(self.target)

    @property
    def code_bit_length(self) -> Optional[int]:
        return None if self.found is None else self.found.code_bit_length

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": self.target_echo,
            "class": str(self.machine_class),
            "budget": self.budget,
            "found": None
            if self.found is None
            else {
                "code": self.found.code,
                "code_bits": self.found.code_bit_length,
                "halt_steps": self.found.halt_steps,
            },
            "exhaustive_up_to": self.exhaustive_up_to,
            "machines_searched": self.machines_searched,
            "total_steps": self.total_steps,
            "complete": self.complete,
        }


@dataclass(frozen=True)
class CurvePoint:
    """
    K_t 予算曲線の1点

    complete=False の点は探索が上限で打ち切られたため、found=None でも
    「予算内に目標を出す機械がない」ことを意味しません。
    """

    budget: int
    found: Optional[KtHit]
    exhaustive_up_to: int = 0
    complete: bool = True

    @property
    def code_bit_length(self) -> Optional[int]:
        return None if self.found is None else self.found.code_bit_length

    def to_row(self) -> Dict[str, Any]:
        return {
            "budget": self.budget,
            "found": self.found is not None,
            "code_bits": self.code_bit_length,
            "halt_steps": None if self.found is None else self.found.halt_steps,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.to_row(),
            "exhaustive_up_to": self.exhaustive_up_to,
            "complete": self.complete,
        }


@dataclass(frozen=True)
class CensusRow:
    """センサスの機械1台分"""

    code: int
    outcome: OutcomeKind
    steps: int

    def to_row(self) -> Dict[str, Any]:
        return {"code": self.code, "outcome": self.outcome.value, "steps": self.steps}


@dataclass(frozen=True)
class CensusReport:
    """停止センサスの集計"""

    machine_class: MachineClass
    budget: int
    halted: int
    cycle_certified: int
    budget_exhausted: int
    halting_times: Tuple[Tuple[int, int], ...] = ()
    rows: Tuple[CensusRow, ...] = ()

    @property
    def total(self) -> int:
        return self.halted + self.cycle_certified + self.budget_exhausted

    @property
    def fraction_halted(self) -> float:
        return self.halted / self.total if self.total else 0.0

    @property
    def counts(self) -> Dict[str, int]:
        return {
            OutcomeKind.HALTED.value: self.halted,
            OutcomeKind.CYCLE_CERTIFIED.value: self.cycle_certified,
            OutcomeKind.BUDGET_EXHAUSTED.value: self.budget_exhausted,
        }

    def outcome_of(self, code: int) -> Optional[OutcomeKind]:
        for row in self.rows:
            if row.code == code:
                return row.outcome
        return None

    def to_dict(self) -> Dict[str, Any]:
        histogram: List[Dict[str, int]] = [
            {"steps": steps, "machines": count} for steps, count in self.halting_times
        ]
        return {
            "class": str(self.machine_class),
            "budget": self.budget,
            "counts": self.counts,
            "total": self.total,
            "fraction_halted": self.fraction_halted,
            "halting_times": histogram,
        }

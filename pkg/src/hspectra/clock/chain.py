"""
クロック鎖の構築

機械の実行履歴をクロック状態の列とみなし、その長さと停止フラグを
ClockChain にまとめます。
"""

import logging
from typing import Sequence, Union

from ..domain.models import MachineClass, OutcomeKind, RunRecord, TuringMachine, parse_symbols
from ..domain.spectral import ClockChain
from ..machine.codec import encode
from ..machine.cycle import DEFAULT_CAP_VISITED
from ..machine.simulator import run

logger = logging.getLogger(__name__)


def build_chain(
    machine: TuringMachine,
    symbols: Union[str, Sequence[int], None] = (),
    truncation: int = 1,
    *,
    cap_visited: int = DEFAULT_CAP_VISITED,
) -> ClockChain:
    """
    打ち切り長 truncation のクロック鎖を構築

    機械を予算 truncation - 1 ステップで実行し、停止すれば長さ T + 1、
    停止しなければ truncation 個のクロック状態で鎖を満たします。
    """
    if truncation < 1:
        raise ValueError(f"打ち切り長は1以上である必要があります: {truncation}")
    initial = parse_symbols(symbols)
    machine.check_input(initial)

    if truncation == 1:
        record = RunRecord(OutcomeKind.BUDGET_EXHAUSTED, budget=0, steps=0, trace_length=1)
    else:
        record = run(machine, initial, truncation - 1, cap_visited=cap_visited)

    length = record.steps + 1 if record.halted else truncation
    logger.debug(
        f"クロック鎖を構築しました: N={truncation} L={length} outcome={record.outcome.value}"
    )
    return ClockChain(
        length=length,
        halted=record.halted,
        truncation=truncation,
        source_code=encode(machine).code,
        source_class=MachineClass(machine.num_states, machine.num_symbols),
        source_input=initial,
        record=record,
    )

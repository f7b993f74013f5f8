"""
シミュレータ

チューリング機械の1ステップ遷移と、予算付き実行を提供します。
"""

import logging
from typing import Iterator, Optional, Sequence, Union

from ..domain.errors import StoppedConfigurationError
from ..domain.models import (
    STOP,
    Configuration,
    OutcomeKind,
    RunRecord,
    TuringMachine,
    parse_symbols,
)
from .cycle import DEFAULT_CAP_VISITED, CycleDetector
from .tape import Tape

logger = logging.getLogger(__name__)

SymbolsLike = Union[str, Sequence[int], None]


def step(machine: TuringMachine, config: Configuration) -> Configuration:
    """
    様相を1ステップ進める

    入力の様相は変更せず、新しい様相を返します。

    Raises:
        StoppedConfigurationError: STOP状態の様相が渡された場合
    """
    if config.is_stopped:
        raise StoppedConfigurationError(
            f"ステップ {config.step_count} の様相はすでに停止しています"
        )
    transition = machine.transition(config.head_state, config.read(config.head_position))
    tape = dict(config.tape)
    tape[config.head_position] = transition.write
    return Configuration(
        head_state=transition.next_state,
        head_position=config.head_position + transition.move.delta,
        tape=tape,
        step_count=config.step_count + 1,
    )


def trace(
    machine: TuringMachine, symbols: SymbolsLike = (), budget: int = 1
) -> Iterator[Configuration]:
    """
    初期様相から最大 budget ステップ分の様相を順に生成

    停止した場合は STOP 状態の様相を最後に生成して終了します。
    """
    _check_budget(budget)
    initial = parse_symbols(symbols)
    machine.check_input(initial)

    config = Configuration.initial(initial)
    yield config
    while config.step_count < budget and not config.is_stopped:
        config = step(machine, config)
        yield config


def run(
    machine: TuringMachine,
    symbols: SymbolsLike = (),
    budget: int = 1,
    *,
    cap_visited: int = DEFAULT_CAP_VISITED,
    detect_cycles: bool = True,
) -> RunRecord:
    """
    予算付きで機械を実行

    STOP到達・サイクル証明・予算切れのいずれかで終了します。

    Args:
        machine: 実行する機械
        symbols: 入力記号列（マス0から書き込む）
        budget: 適用するステップ数の上限（1以上）
        cap_visited: サイクル検出の訪問記録上限
        detect_cycles: Falseならサイクル検出を行わない

    Returns:
        RunRecord: 実行記録
    """
    _check_budget(budget)
    initial = parse_symbols(symbols)
    machine.check_input(initial)

    num_symbols = machine.num_symbols
    table = [
        (transition.write, transition.move.delta, transition.next_state)
        for transition in machine.transitions
    ]
    tape = Tape(initial)
    detector: Optional[CycleDetector] = CycleDetector(cap_visited) if detect_cycles else None
    if detector is not None:
        detector.observe(0, 0, 0, tape)

    state, position, steps = 0, 0, 0
    while steps < budget:
        write, delta, state = table[state * num_symbols + tape.read(position)]
        tape.write(position, write)
        position += delta
        steps += 1

        if state == STOP:
            return RunRecord(
                outcome=OutcomeKind.HALTED,
                budget=budget,
                steps=steps,
                trace_length=steps + 1,
                output=tape.output(),
            )
        if detector is not None and not detector.disabled:
            certificate = detector.observe(steps, state, position, tape)
            if certificate is not None:
                return RunRecord(
                    outcome=OutcomeKind.CYCLE_CERTIFIED,
                    budget=budget,
                    steps=steps,
                    trace_length=steps + 1,
                    certificate=certificate,
                )

    disabled = detector is not None and detector.disabled
    if disabled:
        logger.debug(f"サイクル検出が無効化された状態で予算 {budget} を使い切りました")
    return RunRecord(
        outcome=OutcomeKind.BUDGET_EXHAUSTED,
        budget=budget,
        steps=steps,
        trace_length=steps + 1,
        cycle_detection_disabled=disabled,
    )


def _check_budget(budget: int) -> None:
    if budget < 1:
        raise ValueError(f"予算は1以上である必要があります: {budget}")

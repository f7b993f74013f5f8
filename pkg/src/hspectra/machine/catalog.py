"""
参照機械カタログ

テスト・CLI・ドキュメントで名前により参照する小さな機械の一覧です。
"""

from typing import Callable, Dict, List

from ..domain.errors import InvalidMachineError
from ..domain.models import STOP, Move, Transition, TuringMachine

L, R = Move.LEFT, Move.RIGHT


def _machine(num_states: int, num_symbols: int, *entries: Transition) -> TuringMachine:
    return TuringMachine(num_states, num_symbols, tuple(entries))


def champion_2x2() -> TuringMachine:
    """2状態2記号のビジービーバー王者（6ステップで停止、1を4個残す）"""
    return _machine(
        2,
        2,
        Transition(1, R, 1),
        Transition(1, L, 1),
        Transition(1, L, 0),
        Transition(1, R, STOP),
    )


def immediate_halt() -> TuringMachine:
    """最初の遷移で停止"""
    return _machine(1, 2, Transition(1, R, STOP), Transition(1, R, STOP))


def right_drifter() -> TuringMachine:
    """空白のまま右へ進み続ける"""
    return _machine(1, 2, Transition(0, R, 0), Transition(0, R, 0))


def right_writer() -> TuringMachine:
    """1を書きながら右へ進み続ける"""
    return _machine(1, 2, Transition(1, R, 0), Transition(1, R, 0))


def left_writer() -> TuringMachine:
    """1を書きながら左へ進み続ける"""
    return _machine(1, 2, Transition(1, L, 0), Transition(1, L, 0))


def bouncer() -> TuringMachine:
    """空白上を左右に往復する周期2の振動子"""
    return _machine(
        2,
        2,
        Transition(0, R, 1),
        Transition(0, R, 1),
        Transition(0, L, 0),
        Transition(0, L, 0),
    )


def toggler() -> TuringMachine:
    """同じマスに1を書いては消す周期4の振動子"""
    return _machine(
        2,
        2,
        Transition(1, R, 1),
        Transition(0, R, 1),
        Transition(0, L, 0),
        Transition(0, L, 0),
    )


def sweeper() -> TuringMachine:
    """1の区間を左右に往復しながら広げ続ける（サイクル証明されない非停止機械）"""
    return _machine(
        2,
        2,
        Transition(1, L, 1),
        Transition(1, R, 0),
        Transition(1, R, 0),
        Transition(1, L, 1),
    )


CATALOG: Dict[str, Callable[[], TuringMachine]] = {
    "champion-2x2": champion_2x2,
    "immediate-halt": immediate_halt,
    "right-drifter": right_drifter,
    "right-writer": right_writer,
    "left-writer": left_writer,
    "bouncer": bouncer,
    "toggler": toggler,
    "sweeper": sweeper,
}


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def get_machine(name: str) -> TuringMachine:
    """名前から参照機械を取得"""
    try:
        return CATALOG[name]()
    except KeyError:
        raise InvalidMachineError(
            f"未知の参照機械です: {name!r}（候補: {', '.join(catalog_names())}）"
        )

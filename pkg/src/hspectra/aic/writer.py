"""
直書き機械による上界

目標の記号列を1マスずつ書いて停止する機械を構成し、
K_t の構成的な上界を与えます。
"""

from typing import Tuple

from ..domain.errors import ResourceCapExceededError, TargetNotRepresentableError
from ..domain.models import (
    MAX_SYMBOLS,
    STOP,
    Move,
    SymbolString,
    Transition,
    TuringMachine,
    parse_symbols,
)
from ..machine.codec import encode

DEFAULT_MAX_STATES = 4096
DEFAULT_MAX_SYMBOLS = MAX_SYMBOLS


def literal_writer(
    target: SymbolString,
    max_states: int = DEFAULT_MAX_STATES,
    max_symbols: int = DEFAULT_MAX_SYMBOLS,
) -> TuringMachine:
    """
    状態 i がどの記号を読んでも target[i] を書いて右へ進む機械

    最後の状態は STOP へ遷移するので |target| ステップで停止します。
    空の目標には空白を書いて停止する1状態機械を返します。

    Raises:
        TargetNotRepresentableError: 先頭・末尾が空白の目標（出力規約で切り落とされる）
        ResourceCapExceededError: 状態数・記号数が上限を超える場合
    """
    target = parse_symbols(target)
    if not target:
        blank = Transition(0, Move.LEFT, STOP)
        return TuringMachine(1, 2, (blank, blank))
    if target[0] == 0 or target[-1] == 0:
        raise TargetNotRepresentableError(
            "先頭または末尾が空白の記号列は出力として表現できません"
        )

    num_states = len(target)
    num_symbols = max(2, max(target) + 1)
    if num_states > max_states:
        raise ResourceCapExceededError(f"状態数 {num_states} が上限 {max_states} を超えています")
    if num_symbols > max_symbols:
        raise ResourceCapExceededError(f"記号数 {num_symbols} が上限 {max_symbols} を超えています")

    transitions = []
    for state, symbol in enumerate(target):
        next_state = state + 1 if state + 1 < num_states else STOP
        transitions.extend([Transition(symbol, Move.RIGHT, next_state)] * num_symbols)
    return TuringMachine(num_states, num_symbols, tuple(transitions))


def literal_upper_bound(target: SymbolString, **caps) -> Tuple[TuringMachine, int]:
    """直書き機械とそのコードのビット長"""
    machine = literal_writer(target, **caps)
    return machine, encode(machine).bit_length

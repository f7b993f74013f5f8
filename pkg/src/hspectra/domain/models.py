"""
ドメインモデル

チューリング機械の遷移表、様相（Configuration）、実行記録などの
ドメインオブジェクトを定義します。
すべて値オブジェクトとして扱い、生成後は変更しません。
"""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import InvalidInputError, InvalidMachineError

# 停止状態（状態数には含めない）
STOP: int = -1

# 記号列の文字表現（記号0が空白）
SYMBOL_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

# 記号数の上限（各記号が1文字で表現できる範囲）
MAX_SYMBOLS: int = len(SYMBOL_ALPHABET)

SymbolString = Tuple[int, ...]


def parse_symbols(value: Union[str, Sequence[int], None]) -> SymbolString:
    """
    記号列を整数タプルに変換

    Args:
        value: "1011" のような文字列、または整数の列

    Returns:
        SymbolString: 記号のタプル
    """
    if value is None:
        return ()
    if isinstance(value, str):
        symbols = []
        for char in value.strip().lower():
            index = SYMBOL_ALPHABET.find(char)
            if index < 0:
                raise InvalidInputError(f"記号として解釈できない文字です: {char!r}")
            symbols.append(index)
        return tuple(symbols)
    return tuple(int(symbol) for symbol in value)


def format_symbols(symbols: Iterable[int]) -> str:
    """記号列を文字列表現に変換"""
    return "".join(SYMBOL_ALPHABET[symbol] for symbol in symbols)


class Move(IntEnum):
    """ヘッドの移動方向（コード上の値と一致）"""

    LEFT = 0
    RIGHT = 1

    @property
    def delta(self) -> int:
        return -1 if self is Move.LEFT else 1

    def to_string(self) -> str:
        return "L" if self is Move.LEFT else "R"

    @staticmethod
    def from_string(text: str) -> "Move":
        if text == "L":
            return Move.LEFT
        if text == "R":
            return Move.RIGHT
        raise ValueError(f"移動方向は L か R です: {text!r}")


def state_name(state: int) -> str:
    """状態の表示名（A, B, ... / 停止は H）"""
    if state == STOP:
        return "H"
    if state < 26:
        return chr(ord("A") + state)
    return f"q{state}"


@dataclass(frozen=True)
class Transition:
    """遷移表の1エントリ (write, move, next_state)"""

    write: int
    move: Move
    next_state: int

    def to_string(self) -> str:
        return f"{SYMBOL_ALPHABET[self.write]}{self.move.to_string()}{state_name(self.next_state)}"


@dataclass(frozen=True, order=True)
class MachineClass:
    """機械クラス (状態数, 記号数)"""

    num_states: int
    num_symbols: int

    def __post_init__(self) -> None:
        if self.num_states < 1:
            raise InvalidMachineError(f"状態数は1以上である必要があります: {self.num_states}")
        if self.num_symbols < 2:
            raise InvalidMachineError(f"記号数は2以上である必要があります: {self.num_symbols}")
        if self.num_symbols > MAX_SYMBOLS:
            raise InvalidMachineError(
                f"記号数は{MAX_SYMBOLS}以下である必要があります: {self.num_symbols}"
            )

    def check_symbol_cap(self, limit: int) -> None:
        """設定された記号数上限を超えていないか検査"""
        if self.num_symbols > limit:
            raise InvalidMachineError(
                f"記号数 {self.num_symbols} が上限 machine.max_symbols={limit} を超えています"
            )

    @property
    def entry_count(self) -> int:
        return self.num_states * self.num_symbols

    def __str__(self) -> str:
        return f"{self.num_states},{self.num_symbols}"

    @classmethod
    def parse(cls, text: str) -> "MachineClass":
        """'s,k' 形式の文字列から生成"""
        try:
            states, symbols = (int(part) for part in text.split(","))
        except ValueError:
            raise InvalidMachineError(f"クラスは 's,k' 形式で指定してください: {text!r}")
        return cls(states, symbols)


@dataclass(frozen=True)
class TuringMachine:
    """
    決定性チューリング機械

    遷移表は (state, symbol) の行優先順に並んだ全域写像です。
    """

    num_states: int
    num_symbols: int
    transitions: Tuple[Transition, ...]

    def __post_init__(self) -> None:
        machine_class = MachineClass(self.num_states, self.num_symbols)
        if len(self.transitions) != machine_class.entry_count:
            raise InvalidMachineError(
                f"遷移表は {machine_class.entry_count} エントリ必要ですが "
                f"{len(self.transitions)} エントリです"
            )
        for index, transition in enumerate(self.transitions):
            state, symbol = divmod(index, self.num_symbols)
            if not 0 <= transition.write < self.num_symbols:
                raise InvalidMachineError(
                    f"({state}, {symbol}) の書き込み記号が範囲外です: {transition.write}"
                )
            if transition.next_state != STOP and not 0 <= transition.next_state < self.num_states:
                raise InvalidMachineError(
                    f"({state}, {symbol}) の遷移先状態が範囲外です: {transition.next_state}"
                )

    @classmethod
    def from_table(
        cls,
        num_states: int,
        num_symbols: int,
        table: Mapping[Tuple[int, int], Transition],
    ) -> "TuringMachine":
        """(state, symbol) -> Transition の辞書から生成（欠落があればエラー）"""
        transitions = []
        for state in range(num_states):
            for symbol in range(num_symbols):
                if (state, symbol) not in table:
                    raise InvalidMachineError(f"遷移 ({state}, {symbol}) が定義されていません")
                transitions.append(table[(state, symbol)])
        return cls(num_states, num_symbols, tuple(transitions))

    @property
    def machine_class(self) -> MachineClass:
        return MachineClass(self.num_states, self.num_symbols)

    def transition(self, state: int, symbol: int) -> Transition:
        return self.transitions[state * self.num_symbols + symbol]

    def to_table_string(self) -> str:
        """'1RB1LB_1LA1RH' 形式の表記"""
        rows = []
        for state in range(self.num_states):
            row = self.transitions[state * self.num_symbols : (state + 1) * self.num_symbols]
            rows.append("".join(transition.to_string() for transition in row))
        return "_".join(rows)

    def check_input(self, symbols: SymbolString) -> None:
        """入力記号がアルファベット内かを検証"""
        for position, symbol in enumerate(symbols):
            if not 0 <= symbol < self.num_symbols:
                raise InvalidInputError(
                    f"入力の位置 {position} の記号 {symbol} は記号数 {self.num_symbols} の範囲外です"
                )


@dataclass(frozen=True)
class Configuration:
    """
    機械の様相

    テープは空白を含まない疎な辞書（正準形）として保持します。
    """

    head_state: int
    head_position: int
    tape: Mapping[int, int] = field(default_factory=dict, hash=False)
    step_count: int = 0

    def __post_init__(self) -> None:
        canonical = {position: symbol for position, symbol in self.tape.items() if symbol != 0}
        object.__setattr__(self, "tape", canonical)

    @classmethod
    def initial(cls, symbols: SymbolString = ()) -> "Configuration":
        """入力をマス0から書き込み、ヘッドをマス0・状態q0に置いた初期様相"""
        return cls(0, 0, {position: symbol for position, symbol in enumerate(symbols)}, 0)

    @property
    def is_stopped(self) -> bool:
        return self.head_state == STOP

    def read(self, position: int) -> int:
        return self.tape.get(position, 0)

    def normalized(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """ヘッド位置を0に平行移動した比較用キー"""
        shift = self.head_position
        return (
            self.head_state,
            tuple(sorted((position - shift, symbol) for position, symbol in self.tape.items())),
        )

    def output(self) -> SymbolString:
        """最左から最右の非空白マスまでの記号列"""
        if not self.tape:
            return ()
        low, high = min(self.tape), max(self.tape)
        return tuple(self.tape.get(position, 0) for position in range(low, high + 1))


class OutcomeKind(str, Enum):
    """実行結果の種別"""

    HALTED = "halted"
    CYCLE_CERTIFIED = "cycle_certified"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class CycleCertificate:
    """
    非停止証明（正規化様相の反復）

    offset は1周期あたりのヘッドの移動量（その場の周期なら0）。
    """

    entry_step: int
    period: int
    offset: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {"entry_step": self.entry_step, "period": self.period, "offset": self.offset}


@dataclass(frozen=True)
class RunRecord:
    """予算付き実行の記録"""

    outcome: OutcomeKind
    budget: int
    steps: int
    trace_length: int
    output: Optional[SymbolString] = None
    certificate: Optional[CycleCertificate] = None
    cycle_detection_disabled: bool = False

    @property
    def halted(self) -> bool:
        return self.outcome is OutcomeKind.HALTED

    @property
    def certified(self) -> bool:
        return self.outcome is OutcomeKind.CYCLE_CERTIFIED

    @property
    def output_string(self) -> Optional[str]:
        return None if self.output is None else format_symbols(self.output)

    def to_dict(self) -> Dict[str, Any]:
        """JSON出力用の辞書"""
        data: Dict[str, Any] = {
            "outcome": self.outcome.value,
            "budget": self.budget,
            "trace_length": self.trace_length,
            "cycle_detection_disabled": self.cycle_detection_disabled,
        }
        if self.outcome is OutcomeKind.HALTED:
            data["steps"] = self.steps
            data["output"] = self.output_string
        elif self.outcome is OutcomeKind.CYCLE_CERTIFIED and self.certificate is not None:
            data.update(self.certificate.to_dict())
        return data

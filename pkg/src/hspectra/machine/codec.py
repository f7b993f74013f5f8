"""
ゲーデル番号付け

機械クラス (s, k) 内の遷移表を固定幅のビット列に詰めた整数コードとの
相互変換と、コード昇順の列挙を提供します。ビット配置は CODES.md を参照。
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from ..domain.errors import ClassTooLargeError, InvalidCodeError
from ..domain.models import STOP, MachineClass, Move, Transition, TuringMachine

logger = logging.getLogger(__name__)

# 列挙時にクラス要素数が収まるべき整数範囲
INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True)
class CodeLayout:
    """1エントリ分のビット幅"""

    write_bits: int
    move_bits: int
    next_bits: int

    @classmethod
    def for_class(cls, machine_class: MachineClass) -> "CodeLayout":
        return _layout(machine_class.num_states, machine_class.num_symbols)

    @property
    def width(self) -> int:
        return self.write_bits + self.move_bits + self.next_bits

    def pack(self, write: int, move: int, next_field: int) -> int:
        return write | (move << self.write_bits) | (next_field << (self.write_bits + 1))

    def unpack(self, value: int) -> Tuple[int, int, int]:
        write = value & ((1 << self.write_bits) - 1)
        move = (value >> self.write_bits) & 1
        next_field = value >> (self.write_bits + 1)
        return write, move, next_field


@lru_cache(maxsize=None)
def _layout(num_states: int, num_symbols: int) -> CodeLayout:
    return CodeLayout(
        write_bits=max(1, (num_symbols - 1).bit_length()),
        move_bits=1,
        next_bits=max(1, num_states.bit_length()),
    )


@dataclass(frozen=True, order=True)
class MachineCode:
    """クラス内のゲーデル番号"""

    code: int
    machine_class: MachineClass

    @property
    def bit_length(self) -> int:
        """最小の2進表記の長さ（コード0は1ビット）"""
        return code_bit_length(self.code)


def code_bit_length(code: int) -> int:
    return max(1, code.bit_length())


def encode(machine: TuringMachine) -> MachineCode:
    """機械をコードに変換"""
    layout = CodeLayout.for_class(machine.machine_class)
    code = 0
    for entry, transition in enumerate(machine.transitions):
        next_field = machine.num_states if transition.next_state == STOP else transition.next_state
        value = layout.pack(transition.write, int(transition.move), next_field)
        code |= value << (entry * layout.width)
    return MachineCode(code, machine.machine_class)


def decode(code: int, machine_class: MachineClass) -> TuringMachine:
    """
    コードを機械に変換

    Raises:
        InvalidCodeError: コードがクラス内で有効でない場合（問題のエントリを含む）
    """
    if isinstance(code, MachineCode):
        code = code.code
    num_states, num_symbols = machine_class.num_states, machine_class.num_symbols
    layout = CodeLayout.for_class(machine_class)
    total_bits = layout.width * machine_class.entry_count
    if code < 0 or code >> total_bits:
        raise InvalidCodeError(
            f"コード {code} はクラス {machine_class} の {total_bits} ビットに収まりません",
            field="width",
        )

    mask = (1 << layout.width) - 1
    transitions: List[Transition] = []
    for entry in range(machine_class.entry_count):
        state, symbol = divmod(entry, num_symbols)
        write, move, next_field = layout.unpack((code >> (entry * layout.width)) & mask)
        if write >= num_symbols:
            raise InvalidCodeError(
                f"エントリ ({state}, {symbol}) の書き込み記号 {write} が記号数 {num_symbols} 以上です",
                state=state,
                symbol=symbol,
                field="write",
            )
        if next_field > num_states:
            raise InvalidCodeError(
                f"エントリ ({state}, {symbol}) の遷移先 {next_field} が状態数 {num_states} を超えています",
                state=state,
                symbol=symbol,
                field="next_state",
            )
        next_state = STOP if next_field == num_states else next_field
        transitions.append(Transition(write, Move(move), next_state))
    return TuringMachine(num_states, num_symbols, tuple(transitions))


def class_count_formula(machine_class: MachineClass) -> str:
    s, k = machine_class.num_states, machine_class.num_symbols
    return f"(k·2·(s+1))^(s·k) = ({k}·2·{s + 1})^({s}·{k})"


def class_count(machine_class: MachineClass) -> int:
    """クラス内の有効な機械の総数 (k·2·(s+1))^(s·k)"""
    s, k = machine_class.num_states, machine_class.num_symbols
    return (k * 2 * (s + 1)) ** (s * k)


def check_class_size(machine_class: MachineClass, limit: int = INT64_MAX) -> int:
    """
    クラス要素数を計算し、上限を超えていればエラー

    Returns:
        int: クラス要素数
    """
    count = class_count(machine_class)
    if count > limit:
        raise ClassTooLargeError(
            f"クラス {machine_class} の要素数 {count} が上限 {limit} を超えています "
            f"({class_count_formula(machine_class)})",
            count=count,
            formula=class_count_formula(machine_class),
        )
    return count


@lru_cache(maxsize=None)
def _entry_values(num_states: int, num_symbols: int) -> Tuple[int, ...]:
    """1エントリが取りうる有効な値（昇順）"""
    layout = _layout(num_states, num_symbols)
    return tuple(
        sorted(
            layout.pack(write, move, next_field)
            for write in range(num_symbols)
            for move in (0, 1)
            for next_field in range(num_states + 1)
        )
    )


@lru_cache(maxsize=None)
def _entry_transitions(num_states: int, num_symbols: int) -> Dict[int, Transition]:
    layout = _layout(num_states, num_symbols)
    result = {}
    for value in _entry_values(num_states, num_symbols):
        write, move, next_field = layout.unpack(value)
        next_state = STOP if next_field == num_states else next_field
        result[value] = Transition(write, Move(move), next_state)
    return result


def code_from_rank(rank: int, machine_class: MachineClass) -> int:
    """
    列挙順位からコードを計算

    順位は有効エントリ値の添字を桁とする混合基数表現で、
    最後のエントリが最上位桁です。
    """
    count = class_count(machine_class)
    if not 0 <= rank < count:
        raise IndexError(f"順位 {rank} はクラス {machine_class} の範囲 [0, {count}) 外です")
    values = _entry_values(machine_class.num_states, machine_class.num_symbols)
    width = CodeLayout.for_class(machine_class).width
    code = 0
    for entry in range(machine_class.entry_count):
        rank, digit = divmod(rank, len(values))
        code |= values[digit] << (entry * width)
    return code


def rank_of_code(code: int, machine_class: MachineClass) -> int:
    """コードの列挙順位（code_from_rank の逆）"""
    decode(code, machine_class)
    values = _entry_values(machine_class.num_states, machine_class.num_symbols)
    index = {value: position for position, value in enumerate(values)}
    width = CodeLayout.for_class(machine_class).width
    mask = (1 << width) - 1
    rank = 0
    for entry in reversed(range(machine_class.entry_count)):
        rank = rank * len(values) + index[(code >> (entry * width)) & mask]
    return rank


def iter_class(
    machine_class: MachineClass, start: int = 0, stop: Optional[int] = None
) -> Iterator[Tuple[int, TuringMachine]]:
    """
    順位 [start, stop) の (コード, 機械) を昇順に生成

    コードの数値順と順位の順序は一致します。
    """
    count = check_class_size(machine_class)
    stop = count if stop is None else min(stop, count)
    if start >= stop:
        return
    s, k = machine_class.num_states, machine_class.num_symbols
    values = _entry_values(s, k)
    transitions = _entry_transitions(s, k)
    width = CodeLayout.for_class(machine_class).width
    shifts = [entry * width for entry in reversed(range(machine_class.entry_count))]

    # product は先頭要素が最上位桁なので、最後のエントリから並べる
    combos = itertools.product(values, repeat=machine_class.entry_count)
    for digits in itertools.islice(combos, start, stop):
        code = 0
        for value, shift in zip(digits, shifts):
            code |= value << shift
        table = tuple(transitions[value] for value in reversed(digits))
        yield code, TuringMachine(s, k, table)


def enumerate_machines(
    machine_class: MachineClass, start: int = 0, stop: Optional[int] = None
) -> Iterator[TuringMachine]:
    """
    クラスの全機械をコード昇順に生成

    要素数を先に計算し、整数範囲を超える場合は ClassTooLargeError を送出します。
    生成器は呼び出しごとに先頭からやり直せます。
    """
    count = check_class_size(machine_class)
    logger.debug(f"クラス {machine_class} を列挙します: {count} 台")
    return (machine for _, machine in iter_class(machine_class, start, stop))

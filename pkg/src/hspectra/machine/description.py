"""
機械記述ファイル

テキスト形式:

    # コメント
    states=2 symbols=2
    0 0 -> 1 R 1
    0 1 -> 1 L 1
    1 0 -> 1 L 0
    1 1 -> 1 R STOP

エラーは行番号付きの MachineFileError として報告します。
"""

import re
from pathlib import Path
from typing import Dict, Tuple, Union

from ..domain.errors import InvalidMachineError, MachineFileError
from ..domain.models import MAX_SYMBOLS, STOP, Move, Transition, TuringMachine

_HEADER = re.compile(r"^states\s*=\s*(\d+)\s+symbols\s*=\s*(\d+)$")
_ENTRY = re.compile(r"^(\d+)\s+(\d+)\s*->\s*(\d+)\s+([LR])\s+(\d+|STOP)$")


def parse_machine_text(text: str) -> TuringMachine:
    """記述テキストを解析して機械を生成"""
    header = None
    table: Dict[Tuple[int, int], Transition] = {}
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if header is None:
            match = _HEADER.match(line)
            if not match:
                raise MachineFileError(
                    f"ヘッダ 'states=<s> symbols=<k>' が必要です: {line!r}", line_number
                )
            header = (int(match.group(1)), int(match.group(2)))
            if header[0] < 1 or not 2 <= header[1] <= MAX_SYMBOLS:
                raise MachineFileError(
                    f"状態数は1以上、記号数は2以上{MAX_SYMBOLS}以下である必要があります: {line!r}",
                    line_number,
                )
            continue

        match = _ENTRY.match(line)
        if not match:
            raise MachineFileError(
                f"遷移行 '<state> <symbol> -> <write> <L|R> <next|STOP>' として解釈できません: {line!r}",
                line_number,
            )
        num_states, num_symbols = header
        state, symbol, write = (int(match.group(index)) for index in (1, 2, 3))
        next_text = match.group(5)
        next_state = STOP if next_text == "STOP" else int(next_text)

        if state >= num_states:
            raise MachineFileError(f"状態 {state} が状態数 {num_states} の範囲外です", line_number)
        if symbol >= num_symbols or write >= num_symbols:
            raise MachineFileError(
                f"記号が記号数 {num_symbols} の範囲外です: {line!r}", line_number
            )
        if next_state != STOP and next_state >= num_states:
            raise MachineFileError(
                f"遷移先状態 {next_state} が状態数 {num_states} の範囲外です", line_number
            )
        if (state, symbol) in table:
            raise MachineFileError(f"遷移 ({state}, {symbol}) が重複しています", line_number)
        table[(state, symbol)] = Transition(write, Move.from_string(match.group(4)), next_state)

    if header is None:
        raise MachineFileError("ヘッダ行がありません", max(last_line, 1))
    try:
        return TuringMachine.from_table(header[0], header[1], table)
    except InvalidMachineError as e:
        raise MachineFileError(str(e), max(last_line, 1)) from e


def load_machine_file(path: Union[str, Path]) -> TuringMachine:
    """記述ファイルを読み込む"""
    return parse_machine_text(Path(path).read_text(encoding="utf-8"))


def format_machine_text(machine: TuringMachine) -> str:
    """機械を記述テキストに変換（parse_machine_text の逆）"""
    lines = [f"states={machine.num_states} symbols={machine.num_symbols}"]
    for index, transition in enumerate(machine.transitions):
        state, symbol = divmod(index, machine.num_symbols)
        next_text = "STOP" if transition.next_state == STOP else str(transition.next_state)
        lines.append(
            f"{state} {symbol} -> {transition.write} {transition.move.to_string()} {next_text}"
        )
    return "\n".join(lines) + "\n"

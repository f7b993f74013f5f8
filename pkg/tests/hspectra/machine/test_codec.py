"""
ゲーデル番号付けと列挙のテスト
"""

import pytest

from hspectra.domain.errors import ClassTooLargeError, InvalidCodeError
from hspectra.domain.models import STOP, MachineClass, Move
from hspectra.machine.catalog import champion_2x2, immediate_halt
from hspectra.machine.codec import (
    CodeLayout,
    check_class_size,
    class_count,
    code_from_rank,
    decode,
    encode,
    enumerate_machines,
    iter_class,
    rank_of_code,
)

ONE_TWO = MachineClass(1, 2)
TWO_TWO = MachineClass(2, 2)


def test_layout_widths():
    """エントリ幅は write + move + next のビット数"""
    assert CodeLayout.for_class(ONE_TWO).width == 3
    assert CodeLayout.for_class(TWO_TWO).width == 4
    assert CodeLayout.for_class(MachineClass(2, 3)).width == 5


def test_champion_code():
    code = encode(champion_2x2())
    assert code.code == 45399
    assert code.bit_length == 16
    assert decode(45399, TWO_TWO) == champion_2x2()


def test_immediate_halt_code():
    assert encode(immediate_halt()).code == 63


def test_class_counts():
    assert class_count(ONE_TWO) == 64
    assert class_count(TWO_TWO) == 20736


def test_first_machine_of_smallest_class_is_code_zero():
    first = next(iter_class(ONE_TWO))
    assert first[0] == 0
    transition = first[1].transition(0, 0)
    assert transition.write == 0
    assert transition.move is Move.LEFT
    assert transition.next_state == 0


def test_enumeration_matches_encoding():
    """列挙されたコードは encode と一致し、狭義単調増加"""
    codes = []
    for code, machine in iter_class(TWO_TWO):
        assert encode(machine).code == code
        codes.append(code)

    assert len(codes) == 20736
    assert all(earlier < later for earlier, later in zip(codes, codes[1:]))


def test_enumerate_machines_restarts():
    first = [encode(machine).code for machine in enumerate_machines(ONE_TWO)]
    second = [encode(machine).code for machine in enumerate_machines(ONE_TWO)]
    assert first == second == list(range(64))


def test_rank_and_code():
    # (2,2) のエントリ値は 0..11 の12通り
    assert code_from_rank(12, TWO_TWO) == 16
    assert rank_of_code(16, TWO_TWO) == 12
    assert rank_of_code(encode(champion_2x2()).code, TWO_TWO) == sum(
        1 for code, _ in iter_class(TWO_TWO) if code < 45399
    )
    with pytest.raises(IndexError):
        code_from_rank(20736, TWO_TWO)


def test_iter_class_range():
    codes = [code for code, _ in iter_class(TWO_TWO, 10, 14)]
    assert codes == [code_from_rank(rank, TWO_TWO) for rank in range(10, 14)]


def test_decode_rejects_next_state_field():
    with pytest.raises(InvalidCodeError) as excinfo:
        decode(12, TWO_TWO)
    assert excinfo.value.field == "next_state"
    assert (excinfo.value.state, excinfo.value.symbol) == (0, 0)


def test_decode_rejects_write_field():
    with pytest.raises(InvalidCodeError) as excinfo:
        decode(3, MachineClass(1, 3))
    assert excinfo.value.field == "write"


def test_decode_rejects_width():
    with pytest.raises(InvalidCodeError) as excinfo:
        decode(64, ONE_TWO)
    assert excinfo.value.field == "width"
    with pytest.raises(InvalidCodeError):
        decode(-1, ONE_TWO)


def test_stop_is_encoded_as_state_count():
    machine = decode(4, ONE_TWO)
    assert machine.transition(0, 0).next_state == STOP


def test_class_too_large():
    with pytest.raises(ClassTooLargeError) as excinfo:
        check_class_size(TWO_TWO, limit=100)
    assert excinfo.value.count == 20736
    assert "(k·2·(s+1))^(s·k)" in excinfo.value.formula

    # 生成器を回す前に送出される
    with pytest.raises(ClassTooLargeError):
        enumerate_machines(MachineClass(30, 30))


if __name__ == "__main__":
    pytest.main([__file__])

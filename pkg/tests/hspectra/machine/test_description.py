"""
機械記述ファイルとカタログのテスト
"""

import pytest

from hspectra.domain.errors import InvalidMachineError, MachineFileError
from hspectra.machine.catalog import CATALOG, champion_2x2, get_machine
from hspectra.machine.description import (
    format_machine_text,
    load_machine_file,
    parse_machine_text,
)

CHAMPION_TEXT = """
# 2状態2記号の王者
states=2 symbols=2
0 0 -> 1 R 1
0 1 -> 1 L 1
1 0 -> 1 L 0
1 1 -> 1 R STOP
"""


def test_parse_champion():
    assert parse_machine_text(CHAMPION_TEXT) == champion_2x2()


def test_format_is_parseable():
    text = format_machine_text(champion_2x2())
    assert text.startswith("states=2 symbols=2\n")
    assert parse_machine_text(text) == champion_2x2()


def test_load_machine_file(tmp_path):
    path = tmp_path / "champion.tm"
    path.write_text(CHAMPION_TEXT, encoding="utf-8")
    assert load_machine_file(path) == champion_2x2()


@pytest.mark.parametrize(
    ("text", "line_number"),
    [
        ("states=2\n", 1),
        ("states=1 symbols=2\n0 0 -> 1 X 0\n", 2),
        ("states=1 symbols=2\n0 0 -> 2 R 0\n", 2),
        ("states=1 symbols=2\n0 0 -> 1 R 1\n", 2),
        ("states=1 symbols=2\n0 0 -> 1 R 0\n0 0 -> 1 L 0\n", 3),
        ("states=1 symbols=37\n", 1),
        ("states=1 symbols=300\n0 0 -> 299 R STOP\n", 1),
        ("states=1 symbols=2\n0 0 -> 1 R 0\n", 2),
    ],
)
def test_errors_carry_line_numbers(text, line_number):
    """構文・範囲・重複・欠落のエラーは行番号付き"""
    with pytest.raises(MachineFileError) as excinfo:
        parse_machine_text(text)
    assert excinfo.value.line_number == line_number
    assert str(excinfo.value).startswith(f"line {line_number}:")


def test_missing_header():
    with pytest.raises(MachineFileError):
        parse_machine_text("# 空\n")


def test_catalog_lookup():
    assert set(CATALOG) >= {"champion-2x2", "bouncer", "toggler", "sweeper"}
    assert get_machine("champion-2x2") == champion_2x2()
    with pytest.raises(InvalidMachineError):
        get_machine("no-such-machine")


if __name__ == "__main__":
    pytest.main([__file__])

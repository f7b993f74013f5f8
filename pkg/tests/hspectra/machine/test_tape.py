"""
テープのテスト
"""

import pytest

from hspectra.machine.tape import Tape


def test_output_trims_blanks():
    tape = Tape((0, 1, 0, 1, 0))
    assert tape.output() == (1, 0, 1)
    assert (tape.low, tape.high) == (1, 3)


def test_grows_in_both_directions():
    tape = Tape()
    tape.write(-200, 1)
    tape.write(300, 2)
    assert tape.read(-200) == 1
    assert tape.read(300) == 2
    assert tape.read(50) == 0
    assert tape.snapshot() == {-200: 1, 300: 2}


def test_erasing_updates_bounds():
    tape = Tape((1, 1, 1))
    tape.write(0, 0)
    assert tape.low == 1
    tape.write(2, 0)
    assert tape.high == 1
    tape.write(1, 0)
    assert tape.low is None
    assert tape.output() == ()


def test_normalized_key_relative_to_head():
    first = Tape.from_mapping({3: 1, 5: 1})
    second = Tape.from_mapping({-7: 1, -5: 1})
    assert first.normalized_key(4) == second.normalized_key(-6)
    assert first.is_blank_right_of(5)
    assert not first.is_blank_left_of(4)


if __name__ == "__main__":
    pytest.main([__file__])

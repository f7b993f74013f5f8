"""
出力ライターのテスト
"""

import json

import pandas as pd
import pytest

from hspectra.service.output_writer import OutputWriter, strip_comment_lines


def _fixed_clock():
    return "2024-01-01T00:00:00+00:00"


def test_csv_header_and_rows(tmp_path):
    writer = OutputWriter(clock=_fixed_clock)
    frame = pd.DataFrame({"j": [1, 2], "eigenvalue": [-1.0, 1.0]})
    path = writer.write_csv(tmp_path / "out" / "spectrum.csv", frame, {"b": 1, "a": [2]})

    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# generated_at=2024-01-01T00:00:00+00:00"
    assert lines[1] == '# config={"a":[2],"b":1}'
    assert lines[2:] == ["j,eigenvalue", "1,-1.0", "2,1.0"]


def test_data_rows_do_not_depend_on_time():
    frame = pd.DataFrame({"x": [1]})
    first = OutputWriter(clock=lambda: "t1").render_csv(frame, {})
    second = OutputWriter(clock=lambda: "t2").render_csv(frame, {})
    assert first != second
    assert strip_comment_lines(first) == strip_comment_lines(second) == "x\n1\n"


def test_json_is_sorted_and_stable(tmp_path):
    writer = OutputWriter()
    path = writer.write_json(tmp_path / "record.json", {"b": 1, "a": {"d": 2, "c": 3}})
    text = path.read_text(encoding="utf-8")

    assert text == writer.render_json({"a": {"c": 3, "d": 2}, "b": 1})
    assert list(json.loads(text)) == ["a", "b"]
    assert text.endswith("\n")


def test_atomic_write_leaves_no_temporary_files(tmp_path):
    writer = OutputWriter(clock=_fixed_clock)
    writer.write_json(tmp_path / "a.json", {"x": 1})
    writer.write_json(tmp_path / "a.json", {"x": 2})
    assert sorted(path.name for path in tmp_path.iterdir()) == ["a.json"]
    assert json.loads((tmp_path / "a.json").read_text(encoding="utf-8")) == {"x": 2}


if __name__ == "__main__":
    pytest.main([__file__])

"""
実験サービスのテスト
"""

import json

import pytest

from hspectra.config import LabConfig
from hspectra.domain.errors import InvalidMachineError
from hspectra.domain.models import MachineClass, OutcomeKind
from hspectra.domain.spectral import VerdictKind
from hspectra.machine.catalog import champion_2x2, right_drifter
from hspectra.machine.description import format_machine_text
from hspectra.service.experiment_service import ExperimentService
from hspectra.service.output_writer import OutputWriter, strip_comment_lines


@pytest.fixture
def service():
    return ExperimentService(LabConfig(), OutputWriter(clock=lambda: "fixed"))


def test_resolve_machine_sources(service, tmp_path):
    """カタログ名・ファイル・コードのいずれからでも機械を得られる"""
    path = tmp_path / "champion.tm"
    path.write_text(format_machine_text(champion_2x2()), encoding="utf-8")

    assert service.resolve_machine("champion-2x2") == champion_2x2()
    assert service.resolve_machine(str(path)) == champion_2x2()
    assert service.resolve_machine(code=45399, machine_class=MachineClass(2, 2)) == champion_2x2()
    with pytest.raises(InvalidMachineError):
        service.resolve_machine("missing.tm")
    with pytest.raises(InvalidMachineError):
        service.resolve_machine()


def test_run_machine_json(service, tmp_path):
    out = tmp_path / "run.json"
    record, text = service.run_machine(champion_2x2(), (), 100, out)
    payload = json.loads(text)

    assert record.outcome is OutcomeKind.HALTED
    assert payload["outcome"] == "halted"
    assert payload["steps"] == 6
    assert payload["output"] == "1111"
    assert payload["config"]["parameters"]["code"] == 45399
    assert out.read_text(encoding="utf-8") == text


def test_spectrum_csv(service, tmp_path):
    out = tmp_path / "spectrum.csv"
    h_out = tmp_path / "h.csv"
    report, text = service.spectrum(champion_2x2(), (), 64, 0, out, h_out)

    lines = strip_comment_lines(out.read_text(encoding="utf-8")).splitlines()
    assert lines[0] == "j,eigenvalue,ldos_weight"
    assert len(lines) == 1 + 7
    assert lines[1].startswith("1,")
    assert strip_comment_lines(h_out.read_text(encoding="utf-8")).splitlines()[0] == (
        "index,diagonal,offdiagonal"
    )
    assert json.loads(text)["dimension"] == 7


def test_gap_sweep_summary(service, tmp_path):
    out = tmp_path / "sweep.csv"
    classification, text = service.gap_sweep(right_drifter(), (), [64, 128, 256], out)

    assert classification.verdict is VerdictKind.GAPLESS_TREND
    assert text.startswith("GAPLESS_TREND exponent≈")
    assert text.endswith("certificate=cycle\n")
    rows = strip_comment_lines(out.read_text(encoding="utf-8")).splitlines()
    assert rows[0] == "truncation,length,halted,gap,exponent_so_far"
    assert len(rows) == 4


def test_kt_csv(service, tmp_path):
    out = tmp_path / "kt.csv"
    certificate, text = service.kt((), MachineClass(1, 2), out=out)

    assert certificate.found.code == 4
    rows = strip_comment_lines(out.read_text(encoding="utf-8")).splitlines()
    assert rows[0].split(",")[:6] == ["target", "class", "budget", "found", "code", "code_bits"]
    assert json.loads(text)["found"]["code_bits"] == 3


def test_config_echo_is_independent_of_threads(tmp_path):
    """出力の設定エコーは並列度に依存しない"""
    single = ExperimentService(LabConfig(), OutputWriter(clock=lambda: "fixed"))
    config = LabConfig()
    config.runtime.threads = 2
    multi = ExperimentService(config, OutputWriter(clock=lambda: "fixed"))

    single.census(MachineClass(1, 2), 10, tmp_path / "a.csv")
    multi.census(MachineClass(1, 2), 10, tmp_path / "b.csv")
    assert (tmp_path / "a.csv").read_text(encoding="utf-8") == (
        tmp_path / "b.csv"
    ).read_text(encoding="utf-8")


def test_enumerate_to_stdout(service):
    frame, text = service.enumerate_class(MachineClass(1, 2), 0, 3)
    assert text.splitlines() == ["code,bits,table", "0,1,0LA0LA", "1,1,1LA0LA", "2,2,0RA0LA"]
    assert len(frame) == 3


def test_symbol_cap_from_config(tmp_path):
    config = LabConfig()
    config.machine.max_symbols = 2
    service = ExperimentService(config, OutputWriter(clock=lambda: "fixed"))
    path = tmp_path / "three.tm"
    path.write_text(
        "states=1 symbols=3\n0 0 -> 2 R STOP\n0 1 -> 2 R STOP\n0 2 -> 2 R STOP\n",
        encoding="utf-8",
    )

    assert service.resolve_machine("champion-2x2") == champion_2x2()
    with pytest.raises(InvalidMachineError):
        service.resolve_machine(code=0, machine_class=MachineClass(1, 3))
    with pytest.raises(InvalidMachineError):
        service.resolve_machine(str(path))
    with pytest.raises(InvalidMachineError):
        service.census(MachineClass(1, 3), 5)
    with pytest.raises(InvalidMachineError):
        service.kt((), MachineClass(1, 3))


def test_kt_curve_json_marks_completeness(service):
    _, text = service.kt_curve("11", MachineClass(1, 2), [1, 2])
    points = json.loads(text)["points"]
    assert [point["found"] for point in points] == [False, False]
    assert all(point["complete"] for point in points)
    assert points[0]["exhaustive_up_to"] == 6


if __name__ == "__main__":
    pytest.main([__file__])

"""
シミュレータとサイクル検出のテスト
"""

import pytest

from hspectra.domain.errors import (
    InvalidInputError,
    InvalidMachineError,
    StoppedConfigurationError,
)
from hspectra.domain.models import (
    MAX_SYMBOLS,
    STOP,
    Configuration,
    MachineClass,
    Move,
    OutcomeKind,
    Transition,
    TuringMachine,
    parse_symbols,
)
from hspectra.machine.catalog import (
    bouncer,
    champion_2x2,
    immediate_halt,
    left_writer,
    right_drifter,
    right_writer,
    sweeper,
    toggler,
)
from hspectra.machine.cycle import detect_cycle
from hspectra.machine.simulator import run, step, trace


def test_champion_halts_after_six_steps():
    """2状態2記号の王者は6ステップで停止し、1を4個残す"""
    record = run(champion_2x2(), budget=100)

    assert record.outcome is OutcomeKind.HALTED
    assert record.steps == 6
    assert record.trace_length == 7
    assert record.output == (1, 1, 1, 1)
    assert record.output_string == "1111"


def test_champion_exhausts_short_budget():
    """予算が停止時刻に届かなければ予算切れ"""
    record = run(champion_2x2(), budget=5, detect_cycles=False)

    assert record.outcome is OutcomeKind.BUDGET_EXHAUSTED
    assert record.steps == 5
    assert record.output is None


def test_budget_equal_to_halt_time_is_enough():
    record = run(champion_2x2(), budget=6)
    assert record.halted
    assert record.steps == 6


def test_immediate_halt():
    record = run(immediate_halt(), budget=1)
    assert record.halted
    assert record.steps == 1
    assert record.output == (1,)


@pytest.mark.parametrize(
    ("factory", "period"),
    [(bouncer, 2), (toggler, 4), (right_drifter, 1), (right_writer, 1), (left_writer, 1)],
)
def test_cycle_certificates(factory, period):
    """既知の非停止機械はステップ0から始まる周期で証明される"""
    record = run(factory(), budget=1000)

    assert record.outcome is OutcomeKind.CYCLE_CERTIFIED
    assert record.certificate is not None
    assert record.certificate.entry_step == 0
    assert record.certificate.period == period
    assert record.steps == period


def test_translated_cycle_offsets():
    assert run(right_drifter(), budget=10).certificate.offset == 1
    assert run(right_writer(), budget=10).certificate.offset == 1
    assert run(left_writer(), budget=10).certificate.offset == -1
    assert run(bouncer(), budget=10).certificate.offset == 0


def test_sweeper_is_not_certified():
    """往復しながら広がる機械は証明されず予算切れになる"""
    record = run(sweeper(), budget=2000)

    assert record.outcome is OutcomeKind.BUDGET_EXHAUSTED
    assert record.certificate is None
    assert not record.cycle_detection_disabled


def test_cycle_detection_can_be_disabled_by_cap():
    """訪問記録の上限を超えると検出を無効化したことが記録される"""
    record = run(sweeper(), budget=500, cap_visited=8)

    assert record.outcome is OutcomeKind.BUDGET_EXHAUSTED
    assert record.cycle_detection_disabled


def test_run_without_cycle_detection():
    record = run(bouncer(), budget=50, detect_cycles=False)
    assert record.outcome is OutcomeKind.BUDGET_EXHAUSTED
    assert record.steps == 50


def test_input_is_written_from_square_zero():
    """入力1を読んだ王者は A1 -> 1LB から始まる"""
    first = list(trace(champion_2x2(), "1", budget=1))[-1]
    assert first.head_state == 1
    assert first.head_position == -1
    assert first.tape == {0: 1}


def test_invalid_input_symbol():
    with pytest.raises(InvalidInputError):
        run(champion_2x2(), (2,), budget=10)
    with pytest.raises(InvalidInputError):
        parse_symbols("1?")


def test_invalid_budget():
    with pytest.raises(ValueError):
        run(champion_2x2(), budget=0)


def test_step_is_pure_and_rejects_stopped_configuration():
    machine = champion_2x2()
    initial = Configuration.initial()
    after = step(machine, initial)

    assert initial.tape == {}
    assert initial.step_count == 0
    assert after.step_count == 1
    assert after.head_state == 1
    assert after.head_position == 1
    assert after.tape == {0: 1}

    stopped = Configuration(STOP, 0, {}, 3)
    with pytest.raises(StoppedConfigurationError):
        step(machine, stopped)


def test_trace_matches_run():
    """trace の最終様相と run の記録が一致する"""
    configs = list(trace(champion_2x2(), budget=100))

    assert len(configs) == 7
    assert configs[-1].is_stopped
    assert configs[-1].output() == (1, 1, 1, 1)
    assert [config.step_count for config in configs] == list(range(7))


def test_detect_cycle_on_trace():
    assert detect_cycle(trace(toggler(), budget=20)).period == 4
    assert detect_cycle(trace(champion_2x2(), budget=20)) is None


def test_configuration_normalized_key_is_translation_invariant():
    first = Configuration(0, 5, {5: 1, 6: 1})
    second = Configuration(0, -2, {-2: 1, -1: 1})
    assert first.normalized() == second.normalized()


def test_widest_alphabet_output_is_formatted():
    """記号数の上限いっぱいのクラスでも最大の記号を書いて出力できる"""
    top = MAX_SYMBOLS - 1
    writer = Transition(top, Move.RIGHT, STOP)
    machine = TuringMachine(1, MAX_SYMBOLS, (writer,) * MAX_SYMBOLS)
    record = run(machine, budget=10)

    assert record.halted
    assert record.output == (top,)
    assert record.output_string == "z"
    assert record.to_dict()["output"] == "z"


@pytest.mark.parametrize("num_symbols", [MAX_SYMBOLS + 1, 40, 300])
def test_classes_beyond_alphabet_are_rejected(num_symbols):
    with pytest.raises(InvalidMachineError):
        MachineClass(1, num_symbols)
    with pytest.raises(InvalidMachineError):
        TuringMachine(1, num_symbols, (Transition(1, Move.RIGHT, STOP),) * num_symbols)


if __name__ == "__main__":
    pytest.main([__file__])

"""
ギャップ分類と ε 判定のテスト
"""

import math
from collections import defaultdict

import pytest

from hspectra.clock.hamiltonian import uniform_chain
from hspectra.domain.models import MachineClass, OutcomeKind
from hspectra.domain.spectral import EpsilonAnswer, VerdictKind
from hspectra.machine.catalog import bouncer, champion_2x2, right_drifter, sweeper
from hspectra.machine.codec import iter_class
from hspectra.machine.simulator import run
from hspectra.spectra.classify import fit_exponent, gap_below_epsilon, gap_sweep
from hspectra.spectra.solver import analytic_gap, chain_gap

TWO_TWO = MachineClass(2, 2)

CHAMPION_GAP = 2 * (math.cos(math.pi / 8) - math.cos(math.pi / 4))


def test_fit_exponent_of_exact_power_law():
    lengths = [10, 20, 40, 80]
    gaps = [3.0 * length**-2 for length in lengths]
    assert math.isclose(fit_exponent(lengths, gaps), -2.0, abs_tol=1e-12)


def test_fit_exponent_needs_three_points():
    with pytest.raises(ValueError):
        fit_exponent([10, 20], [0.1, 0.02])


def test_halting_machine_is_gapped():
    """最大の打ち切り長までに停止すればギャップは飽和する"""
    result = gap_sweep(champion_2x2(), "", [4, 8, 16, 32])

    assert result.verdict is VerdictKind.GAPPED
    assert result.halt_steps == 6
    assert math.isclose(result.gap, CHAMPION_GAP, abs_tol=1e-10)
    assert [point.length for point in result.sweep] == [4, 7, 7, 7]
    assert [point.halted for point in result.sweep] == [False, True, True, True]
    assert result.summary_line().startswith("GAPPED T=6 gap=0.4335")


def test_non_halting_machine_trends_gapless():
    """停止しない機械のギャップは L^-2 で閉じる"""
    result = gap_sweep(right_drifter(), "", [64, 128, 256, 512, 1024])

    assert result.verdict is VerdictKind.GAPLESS_TREND
    assert result.within_band
    assert abs(result.exponent + 2.0) <= 0.05
    assert result.certificate is not None
    assert result.summary_line().startswith("GAPLESS_TREND exponent≈-1.9")
    assert result.summary_line().endswith("certificate=cycle")

    gaps = [point.gap for point in result.sweep]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
    assert result.sweep[0].exponent_so_far is None
    assert result.sweep[-1].exponent_so_far == pytest.approx(result.exponent)


def test_uncertified_machine_reports_no_certificate():
    result = gap_sweep(sweeper(), "", [64, 128, 256])
    assert result.verdict is VerdictKind.GAPLESS_TREND
    assert result.certificate is None
    assert result.summary_line().endswith("certificate=none")


def test_too_few_points_is_unknown():
    result = gap_sweep(bouncer(), "", [64, 128])
    assert result.verdict is VerdictKind.UNKNOWN
    assert result.budget == 127
    assert result.summary_line() == "UNKNOWN"


@pytest.mark.parametrize("truncations", [[], [1, 4, 8], [8, 8, 16], [16, 8, 32]])
def test_invalid_truncations(truncations):
    with pytest.raises(ValueError):
        gap_sweep(champion_2x2(), "", truncations)


def test_epsilon_no_for_halting_machine():
    verdict = gap_below_epsilon(champion_2x2(), "", 0.1, 64)
    assert verdict.answer is EpsilonAnswer.NO
    assert verdict.halt_steps == 6
    assert verdict.witness is None
    assert math.isclose(verdict.gap, CHAMPION_GAP, abs_tol=1e-10)


def test_epsilon_yes_for_halting_machine_with_large_epsilon():
    verdict = gap_below_epsilon(champion_2x2(), "", 1.0, 64)
    assert verdict.answer is EpsilonAnswer.YES
    assert verdict.witness == 7


def test_epsilon_witness_for_non_halting_machine():
    """証拠は gap(L) < ε となる最小の L"""
    epsilon = 1e-3
    verdict = gap_below_epsilon(right_drifter(), "", epsilon, 1024)
    expected = next(length for length in range(2, 1025) if analytic_gap(length) < epsilon)

    assert verdict.answer is EpsilonAnswer.YES
    assert verdict.witness == expected
    assert 170 <= verdict.witness <= 174
    assert verdict.gap < epsilon
    assert verdict.certificate is not None


def test_epsilon_unknown_when_budget_too_small():
    verdict = gap_below_epsilon(right_drifter(), "", 1e-3, 100)
    assert verdict.answer is EpsilonAnswer.UNKNOWN
    assert verdict.witness is None
    assert verdict.gap >= 1e-3


def test_epsilon_validation():
    with pytest.raises(ValueError):
        gap_below_epsilon(champion_2x2(), "", 0.0, 64)
    with pytest.raises(ValueError):
        gap_below_epsilon(champion_2x2(), "", 0.1, 1)



def test_gap_scaling_exponent_over_long_chains():
    """L ∈ [128, 2048] の両対数の傾きは -2.00 ± 0.02"""
    lengths = [128, 256, 512, 1024, 2048]
    gaps = [chain_gap(uniform_chain(length)) for length in lengths]
    assert abs(fit_exponent(lengths, gaps) + 2.0) <= 0.02


def _small_class_corpus(per_halting_time, cycling):
    """(2,2) の停止機械を停止時間ごとに、サイクル証明される機械を cycling 台選ぶ"""
    by_halting_time = defaultdict(list)
    certified = []
    for code, machine in iter_class(TWO_TWO):
        record = run(machine, (), 20)
        if record.outcome is OutcomeKind.HALTED:
            if len(by_halting_time[record.steps]) < per_halting_time:
                by_halting_time[record.steps].append(machine)
        elif record.outcome is OutcomeKind.CYCLE_CERTIFIED and len(certified) < cycling:
            certified.append(machine)
    return dict(by_halting_time), certified


def test_verdicts_agree_with_independent_reruns():
    """停止 ⇔ GAPPED、サイクル証明 ⇔ GAPLESS_TREND（10倍の予算で再実行して確認）"""
    by_halting_time, certified = _small_class_corpus(3, 12)
    truncations = [32, 64, 128]

    # 1, 2, 3, 4, 6 ステップで停止する機械は手で構成できる
    assert {1, 2, 3, 4, 6} <= set(by_halting_time)
    by_halting_time[6].append(champion_2x2())

    for halt_steps, machines in by_halting_time.items():
        for machine in machines:
            result = gap_sweep(machine, "", truncations)
            assert result.verdict is VerdictKind.GAPPED
            assert result.halt_steps == halt_steps
            assert math.isclose(result.gap, analytic_gap(halt_steps + 1), abs_tol=1e-10)
            assert run(machine, (), 10 * truncations[-1]).halted
    for machine in certified:
        result = gap_sweep(machine, "", truncations)
        assert result.verdict is VerdictKind.GAPLESS_TREND
        assert result.certificate is not None
        assert not run(machine, (), 10 * truncations[-1]).halted


if __name__ == "__main__":
    pytest.main([__file__])

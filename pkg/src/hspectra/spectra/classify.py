"""
ギャップ分類

打ち切り長を増やしながらクロック鎖の基底ギャップを測り、
停止性と結び付けて Gapped / GaplessTrend / Unknown に分類します。
"""

from typing import List, Optional, Sequence, Union

import numpy as np

from ..clock.chain import build_chain
from ..clock.hamiltonian import hamiltonian, uniform_chain
from ..domain.models import TuringMachine
from ..domain.spectral import (
    EpsilonAnswer,
    EpsilonVerdict,
    GapClassification,
    SweepPoint,
    VerdictKind,
)
from ..machine.cycle import DEFAULT_CAP_VISITED
from ..observability.logger import LoggerFactory
from .solver import DEFAULT_TOLERANCE, chain_gap

logger = LoggerFactory.create_spectra_logger()

BAND_EXPONENT = -2.0
BAND_WIDTH = 0.05
MIN_TREND_POINTS = 3


def fit_exponent(lengths: Sequence[float], gaps: Sequence[float]) -> float:
    """
    log gap と log L の最小二乗直線の傾き

    Raises:
        ValueError: 点が3点未満の場合
    """
    if len(lengths) != len(gaps):
        raise ValueError("lengths と gaps の長さが一致しません")
    if len(lengths) < MIN_TREND_POINTS:
        raise ValueError(f"傾きの推定には {MIN_TREND_POINTS} 点以上が必要です: {len(lengths)}")
    slope, _ = np.polyfit(np.log(np.asarray(lengths, dtype=float)), np.log(np.asarray(gaps)), 1)
    return float(slope)


def _check_truncations(truncations: Sequence[int]) -> List[int]:
    values = [int(value) for value in truncations]
    if not values:
        raise ValueError("打ち切り長を1つ以上指定してください")
    if any(value < 2 for value in values):
        raise ValueError(f"打ち切り長は2以上である必要があります: {values}")
    if any(later <= earlier for earlier, later in zip(values, values[1:])):
        raise ValueError(f"打ち切り長は狭義単調増加である必要があります: {values}")
    return values


def gap_sweep(
    machine: TuringMachine,
    symbols: Union[str, Sequence[int], None] = (),
    truncations: Sequence[int] = (),
    *,
    tol: float = DEFAULT_TOLERANCE,
    band_exponent: float = BAND_EXPONENT,
    band_width: float = BAND_WIDTH,
    cap_visited: int = DEFAULT_CAP_VISITED,
) -> GapClassification:
    """
    打ち切りスイープによるギャップ分類

    最大の打ち切り長までに停止すれば GAPPED（ギャップは飽和）、
    停止せず3点以上あれば両対数の傾きを付けた GAPLESS_TREND、
    それ以外は UNKNOWN を返します。

    Args:
        machine: 対象の機械
        symbols: 入力記号列
        truncations: 狭義単調増加の打ち切り長（各2以上）
        tol: 固有値の許容誤差
        band_exponent: 分類帯の中心となる指数
        band_width: 分類帯の半幅
        cap_visited: サイクル検出の訪問記録上限

    Returns:
        GapClassification: 分類結果とスイープ列
    """
    values = _check_truncations(truncations)

    points: List[SweepPoint] = []
    chain = None
    for truncation in values:
        chain = build_chain(machine, symbols, truncation, cap_visited=cap_visited)
        gap = chain_gap(hamiltonian(chain), tol)
        exponent_so_far = None
        if len(points) + 1 >= MIN_TREND_POINTS and not chain.halted:
            exponent_so_far = fit_exponent(
                [point.length for point in points] + [chain.length],
                [point.gap for point in points] + [gap],
            )
        point = SweepPoint(truncation, chain.length, chain.halted, gap, exponent_so_far)
        points.append(point)
        logger.log_sweep_point(truncation, chain.length, chain.halted, gap)

    sweep = tuple(points)
    assert chain is not None
    if chain.halted:
        return GapClassification(
            verdict=VerdictKind.GAPPED,
            sweep=sweep,
            halt_steps=chain.halt_steps,
            gap=sweep[-1].gap,
        )
    if len(sweep) >= MIN_TREND_POINTS:
        exponent = fit_exponent([point.length for point in sweep], [point.gap for point in sweep])
        return GapClassification(
            verdict=VerdictKind.GAPLESS_TREND,
            sweep=sweep,
            exponent=exponent,
            certificate=chain.certificate,
            within_band=abs(exponent - band_exponent) <= band_width,
        )
    return GapClassification(verdict=VerdictKind.UNKNOWN, sweep=sweep, budget=values[-1] - 1)


def gap_below_epsilon(
    machine: TuringMachine,
    symbols: Union[str, Sequence[int], None] = (),
    epsilon: float = 1e-3,
    budget_truncation: int = 2,
    *,
    tol: float = DEFAULT_TOLERANCE,
    cap_visited: int = DEFAULT_CAP_VISITED,
) -> EpsilonVerdict:
    """
    「ギャップ < ε か」の三分法判定

    - 予算内に停止: 飽和ギャップが ε 以上なら NO、未満なら YES（証拠 L = T + 1）
    - 予算内に停止しない: gap(N) < ε となる最小の N ≤ budget_truncation があれば YES
    - それ以外は UNKNOWN

    停止しない鎖の長さは N そのものなので、ギャップは N について狭義単調減少です。

    停止した機械で飽和ギャップが ε 未満の場合は UNKNOWN ではなく YES を返します。
    長さ T + 1 の鎖は打ち切りをそれ以上伸ばしても変わらないため、
    その L が gap < ε の証拠としてそのまま確定します。
    """
    if epsilon <= 0:
        raise ValueError(f"ε は正である必要があります: {epsilon}")
    if budget_truncation < 2:
        raise ValueError(f"打ち切り予算は2以上である必要があります: {budget_truncation}")

    chain = build_chain(machine, symbols, budget_truncation, cap_visited=cap_visited)
    if chain.halted:
        gap = chain_gap(hamiltonian(chain), tol)
        answer = EpsilonAnswer.NO if gap >= epsilon else EpsilonAnswer.YES
        return EpsilonVerdict(
            answer=answer,
            epsilon=epsilon,
            budget_truncation=budget_truncation,
            witness=chain.length if answer is EpsilonAnswer.YES else None,
            halt_steps=chain.halt_steps,
            gap=gap,
        )

    witness = _smallest_length_below(epsilon, budget_truncation, tol)
    if witness is None:
        return EpsilonVerdict(
            answer=EpsilonAnswer.UNKNOWN,
            epsilon=epsilon,
            budget_truncation=budget_truncation,
            gap=chain_gap(uniform_chain(budget_truncation), tol),
            certificate=chain.certificate,
        )
    return EpsilonVerdict(
        answer=EpsilonAnswer.YES,
        epsilon=epsilon,
        budget_truncation=budget_truncation,
        witness=witness,
        gap=chain_gap(uniform_chain(witness), tol),
        certificate=chain.certificate,
    )


def _smallest_length_below(epsilon: float, limit: int, tol: float) -> Optional[int]:
    """gap(L) < ε となる最小の L ∈ [2, limit]（二分探索）"""
    if chain_gap(uniform_chain(limit), tol) >= epsilon:
        return None
    low, high = 2, limit
    while low < high:
        middle = (low + high) // 2
        if chain_gap(uniform_chain(middle), tol) < epsilon:
            high = middle
        else:
            low = middle + 1
    return low

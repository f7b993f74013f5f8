"""
時間制限付き最短プログラム探索（K_t）

クラス内の機械をコード昇順に空白テープ上で予算付き実行し、
目標の記号列を出力して停止する最初の機械を探します。
"""

import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..domain.errors import ResourceCapExceededError
from ..domain.information import BudgetRule, CurvePoint, KtCertificate, KtHit, KtQuery
from ..domain.models import MachineClass, SymbolString, parse_symbols
from ..machine.codec import class_count, code_bit_length, code_from_rank, iter_class
from ..machine.cycle import DEFAULT_CAP_VISITED
from ..machine.simulator import run
from ..observability.logger import LoggerFactory
from .shards import ShardRunner, plan_shards, waves

logger = LoggerFactory.create_search_logger()

DEFAULT_MAX_CLASS_SIZE = 1 << 21
DEFAULT_MAX_TOTAL_STEPS = 1 << 31
DEFAULT_SHARD_SIZE = 4096


@dataclass(frozen=True)
class SearchLimits:
    """探索のリソース上限"""

    max_class_size: int = DEFAULT_MAX_CLASS_SIZE
    max_total_steps: int = DEFAULT_MAX_TOTAL_STEPS
    shard_size: int = DEFAULT_SHARD_SIZE
    threads: int = 1
    cap_visited: int = DEFAULT_CAP_VISITED


@dataclass(frozen=True)
class _ShardTask:
    start: int
    stop: int
    num_states: int
    num_symbols: int
    target: SymbolString
    budget: int
    cap_visited: int


@dataclass(frozen=True)
class _ShardResult:
    start: int
    steps: Tuple[int, ...]
    hit: Optional[KtHit]


def _scan_shard(task: _ShardTask) -> _ShardResult:
    """順位区間を昇順に実行し、最初の一致で打ち切る"""
    machine_class = MachineClass(task.num_states, task.num_symbols)
    steps: List[int] = []
    for code, machine in iter_class(machine_class, task.start, task.stop):
        record = run(machine, (), task.budget, cap_visited=task.cap_visited)
        steps.append(record.steps)
        if record.halted and record.output == task.target:
            return _ShardResult(
                task.start, tuple(steps), KtHit(code, code_bit_length(code), record.steps)
            )
    return _ShardResult(task.start, tuple(steps), None)


@dataclass(frozen=True)
class _CurveTask:
    start: int
    stop: int
    num_states: int
    num_symbols: int
    target: SymbolString
    budget: int
    first_budget: int
    cap_visited: int


@dataclass(frozen=True)
class _CurveResult:
    start: int
    steps: Tuple[int, ...]
    hits: Tuple[Tuple[int, KtHit], ...]


def _scan_curve_shard(task: _CurveTask) -> _CurveResult:
    """最大予算で実行し、最小予算に収まる一致が出たところで打ち切る"""
    machine_class = MachineClass(task.num_states, task.num_symbols)
    steps: List[int] = []
    hits: List[Tuple[int, KtHit]] = []
    for offset, (code, machine) in enumerate(iter_class(machine_class, task.start, task.stop)):
        record = run(machine, (), task.budget, cap_visited=task.cap_visited)
        steps.append(record.steps)
        if record.halted and record.output == task.target:
            hits.append((offset, KtHit(code, code_bit_length(code), record.steps)))
            if record.steps <= task.first_budget:
                break
    return _CurveResult(task.start, tuple(steps), tuple(hits))


def _bits_before(rank: int, machine_class: MachineClass) -> int:
    """順位 rank 未満のコードを全て調べたとき、網羅済みと言える最大ビット長"""
    if rank >= class_count(machine_class):
        return code_bit_length(code_from_rank(class_count(machine_class) - 1, machine_class))
    return code_bit_length(code_from_rank(rank, machine_class)) - 1


def kt_search(query: KtQuery, limits: Optional[SearchLimits] = None) -> KtCertificate:
    """
    K_t 探索

    機械をコード昇順に実行し、目標を出力して停止する最初の機械を返します。
    並列実行時もシャード結果を順位順に集計するため、証明書は逐次実行と同一です。
    リソース上限に達した場合は found=None・complete=False の部分証明書を返します。

    Args:
        query: 目標・クラス・予算規則
        limits: リソース上限と並列度

    Returns:
        KtCertificate: 探索結果
    """
    limits = limits or SearchLimits()
    target = parse_symbols(query.target)
    machine_class = query.machine_class
    budget = query.budget_rule.budget(len(target), limits.max_total_steps)
    count = class_count(machine_class)
    stop = min(count, limits.max_class_size)
    if stop < count:
        logger.warning(
            f"クラス {machine_class} の要素数 {count} が上限を超えるため先頭 {stop} 台のみ探索します",
            count=count,
            max_class_size=limits.max_class_size,
        )

    tasks = [
        _ShardTask(
            start=lower,
            stop=upper,
            num_states=machine_class.num_states,
            num_symbols=machine_class.num_symbols,
            target=target,
            budget=budget,
            cap_visited=limits.cap_visited,
        )
        for lower, upper in plan_shards(0, stop, limits.shard_size)
    ]
    searched = 0
    total_steps = 0
    started = time.perf_counter()

    with ShardRunner(limits.threads) as runner:
        for wave in waves(tasks, runner.threads):
            for result in runner.map(_scan_shard, wave):
                for index, steps in enumerate(result.steps):
                    if total_steps >= limits.max_total_steps:
                        logger.warning(
                            f"総ステップ数の上限 {limits.max_total_steps} に達したため探索を打ち切ります",
                            searched=searched,
                        )
                        return _certificate(
                            target, machine_class, budget, None, searched, total_steps, False
                        )
                    searched += 1
                    total_steps += steps
                    if result.hit is not None and index == len(result.steps) - 1:
                        logger.log_performance_metric(
                            "kt_search_seconds", time.perf_counter() - started, "s"
                        )
                        return _certificate(
                            target, machine_class, budget, result.hit, searched, total_steps, True
                        )
            logger.log_search_progress(searched, stop)

    logger.log_performance_metric("kt_search_seconds", time.perf_counter() - started, "s")
    return _certificate(target, machine_class, budget, None, searched, total_steps, stop == count)


def _certificate(
    target: SymbolString,
    machine_class: MachineClass,
    budget: int,
    found: Optional[KtHit],
    searched: int,
    total_steps: int,
    complete: bool,
) -> KtCertificate:
    if found is not None:
        exhaustive_up_to = found.code_bit_length - 1
    else:
        exhaustive_up_to = _bits_before(searched, machine_class)
    return KtCertificate(
        target=target,
        machine_class=machine_class,
        budget=budget,
        found=found,
        exhaustive_up_to=exhaustive_up_to,
        machines_searched=searched,
        total_steps=total_steps,
        complete=complete,
    )


def kt_budget_curve(
    target: SymbolString,
    machine_class: MachineClass,
    budgets: Sequence[int],
    limits: Optional[SearchLimits] = None,
) -> List[CurvePoint]:
    """
    予算ごとの K_t 系列

    最大予算で一度だけ昇順に実行し、停止ステップが各予算以内に収まる
    最初の一致をその予算の結果とします。見つかった長さは予算について非増加です。
    kt_search と同じくシャード結果を順位順に集計し、クラス上限または総ステップ上限で
    打ち切った場合、未発見の点は complete=False になります。
    """
    limits = limits or SearchLimits()
    target = parse_symbols(target)
    values = [int(budget) for budget in budgets]
    if not values:
        raise ValueError("予算を1つ以上指定してください")
    if any(budget < 1 for budget in values):
        raise ValueError(f"予算は1以上である必要があります: {values}")
    if any(later < earlier for earlier, later in zip(values, values[1:])):
        raise ValueError(f"予算は昇順で指定してください: {values}")
    if values[-1] > limits.max_total_steps:
        raise ResourceCapExceededError(
            f"予算 {values[-1]} がステップ上限 {limits.max_total_steps} を超えています"
        )

    count = class_count(machine_class)
    stop = min(count, limits.max_class_size)
    tasks = [
        _CurveTask(
            start=lower,
            stop=upper,
            num_states=machine_class.num_states,
            num_symbols=machine_class.num_symbols,
            target=target,
            budget=values[-1],
            first_budget=values[0],
            cap_visited=limits.cap_visited,
        )
        for lower, upper in plan_shards(0, stop, limits.shard_size)
    ]
    found: List[Optional[KtHit]] = [None] * len(values)
    searched = 0
    total_steps = 0
    scanned_all = stop == count

    with ShardRunner(limits.threads) as runner:
        for wave in waves(tasks, runner.threads):
            for result in runner.map(_scan_curve_shard, wave):
                hits = dict(result.hits)
                for index, steps in enumerate(result.steps):
                    if total_steps >= limits.max_total_steps:
                        logger.warning(
                            f"総ステップ数の上限 {limits.max_total_steps} に達したため予算曲線を打ち切ります",
                            searched=searched,
                        )
                        return _curve_points(values, found, searched, machine_class, False)
                    searched += 1
                    total_steps += steps
                    hit = hits.get(index)
                    if hit is None:
                        continue
                    for position, budget in enumerate(values):
                        if found[position] is None and hit.halt_steps <= budget:
                            found[position] = hit
                    if found[0] is not None:
                        return _curve_points(values, found, searched, machine_class, True)
            logger.log_search_progress(searched, stop)
    return _curve_points(values, found, searched, machine_class, scanned_all)


def _curve_points(
    values: Sequence[int],
    found: Sequence[Optional[KtHit]],
    searched: int,
    machine_class: MachineClass,
    scanned_all: bool,
) -> List[CurvePoint]:
    # 見つかった点は打ち切りに関係なく最小性が保証される
    points = []
    for budget, hit in zip(values, found):
        if hit is not None:
            points.append(CurvePoint(budget, hit, hit.code_bit_length - 1, True))
        else:
            points.append(
                CurvePoint(budget, None, _bits_before(searched, machine_class), scanned_all)
            )
    return points


def default_budget_curve(
    target: SymbolString,
    machine_class: MachineClass,
    rule: BudgetRule,
    factors: Sequence[int] = (1, 4, 16),
    limits: Optional[SearchLimits] = None,
) -> List[CurvePoint]:
    """規則 rule の予算 t を factors 倍した系列（t, 4t, 16t など）"""
    target = parse_symbols(target)
    base = rule.budget(len(target))
    return kt_budget_curve(target, machine_class, [base * factor for factor in factors], limits)

"""
停止センサス

クラス内の全機械を空白テープ上で同じ予算で実行し、
停止・サイクル証明・予算切れを集計します。
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..domain.information import CensusReport, CensusRow
from ..domain.models import MachineClass, OutcomeKind
from ..machine.codec import check_class_size, iter_class
from ..machine.cycle import DEFAULT_CAP_VISITED
from ..machine.simulator import run
from ..observability.logger import LoggerFactory
from .search import DEFAULT_MAX_CLASS_SIZE, DEFAULT_SHARD_SIZE
from .shards import ShardRunner, plan_shards

logger = LoggerFactory.create_search_logger()


@dataclass(frozen=True)
class _CensusTask:
    start: int
    stop: int
    num_states: int
    num_symbols: int
    budget: int
    cap_visited: int


def _census_shard(task: _CensusTask) -> Tuple[CensusRow, ...]:
    machine_class = MachineClass(task.num_states, task.num_symbols)
    rows = []
    for code, machine in iter_class(machine_class, task.start, task.stop):
        record = run(machine, (), task.budget, cap_visited=task.cap_visited)
        rows.append(CensusRow(code, record.outcome, record.steps))
    return tuple(rows)


def halting_census(
    machine_class: MachineClass,
    budget: int,
    *,
    threads: int = 1,
    shard_size: int = DEFAULT_SHARD_SIZE,
    max_class_size: int = DEFAULT_MAX_CLASS_SIZE,
    cap_visited: int = DEFAULT_CAP_VISITED,
) -> CensusReport:
    """
    クラス全体の停止センサス

    要素数が max_class_size を超える場合は実行前に ClassTooLargeError を送出します。
    """
    if budget < 1:
        raise ValueError(f"予算は1以上である必要があります: {budget}")
    count = check_class_size(machine_class, max_class_size)

    tasks = [
        _CensusTask(
            lower, upper, machine_class.num_states, machine_class.num_symbols, budget, cap_visited
        )
        for lower, upper in plan_shards(0, count, shard_size)
    ]
    rows: List[CensusRow] = []
    with ShardRunner(threads) as runner:
        for shard_rows in runner.map(_census_shard, tasks):
            rows.extend(shard_rows)

    tally = Counter(row.outcome for row in rows)
    halting_times = Counter(row.steps for row in rows if row.outcome is OutcomeKind.HALTED)
    report = CensusReport(
        machine_class=machine_class,
        budget=budget,
        halted=tally[OutcomeKind.HALTED],
        cycle_certified=tally[OutcomeKind.CYCLE_CERTIFIED],
        budget_exhausted=tally[OutcomeKind.BUDGET_EXHAUSTED],
        halting_times=tuple(sorted(halting_times.items())),
        rows=tuple(rows),
    )
    logger.info(
        f"センサス完了: クラス {machine_class} 予算 {budget}",
        budget=budget,
        **report.counts,
    )
    return report


def census_curve(
    machine_class: MachineClass, budgets: Sequence[int], **options
) -> List[CensusReport]:
    """予算ごとのセンサス（停止割合は予算について非減少）"""
    values = [int(budget) for budget in budgets]
    if any(later < earlier for earlier, later in zip(values, values[1:])):
        raise ValueError(f"予算は昇順で指定してください: {values}")
    return [halting_census(machine_class, budget, **options) for budget in values]

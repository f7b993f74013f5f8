"""
シャード分割と並列実行

コード空間を連続した順位区間に分け、プロセスプールで処理します。
結果は常に区間の順序で返すため、集計は逐次実行と一致します。
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, List, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

Shard = Tuple[int, int]


def plan_shards(start: int, stop: int, shard_size: int) -> List[Shard]:
    """[start, stop) を長さ shard_size 以下の区間に分割"""
    if shard_size < 1:
        raise ValueError(f"シャードサイズは1以上である必要があります: {shard_size}")
    return [(lower, min(lower + shard_size, stop)) for lower in range(start, stop, shard_size)]


def waves(tasks: Sequence[T], width: int) -> Iterator[Sequence[T]]:
    """tasks を width 個ずつの波に分ける"""
    width = max(1, width)
    for index in range(0, len(tasks), width):
        yield tasks[index : index + width]


class ShardRunner:
    """
    シャード単位のワーカー実行器

    threads が1ならプロセス内で順に実行し、2以上なら
    ProcessPoolExecutor に投入します。ワーカーはモジュールトップレベルの
    関数（pickle可能）である必要があります。
    """

    def __init__(self, threads: int = 1):
        self.threads = max(1, threads)
        self._executor = None

    def __enter__(self) -> "ShardRunner":
        if self.threads > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.threads)
        return self

    def __exit__(self, *exc_info) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None

    def map(self, worker: Callable[[T], R], tasks: Sequence[T]) -> List[R]:
        """tasks を処理し、入力と同じ順序で結果を返す"""
        if self._executor is None or len(tasks) <= 1:
            return [worker(task) for task in tasks]
        return list(self._executor.map(worker, tasks))

"""
シャード分割のテスト
"""

import pytest

from hspectra.aic.shards import ShardRunner, plan_shards, waves


def _square(value):
    return value * value


def test_plan_shards_covers_range():
    assert plan_shards(0, 10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert plan_shards(5, 5, 4) == []
    with pytest.raises(ValueError):
        plan_shards(0, 10, 0)


def test_waves():
    assert [list(wave) for wave in waves([1, 2, 3, 4, 5], 2)] == [[1, 2], [3, 4], [5]]


def test_runner_preserves_order():
    tasks = list(range(20))
    with ShardRunner(1) as runner:
        sequential = runner.map(_square, tasks)
    with ShardRunner(2) as runner:
        parallel = runner.map(_square, tasks)
    assert sequential == parallel == [value * value for value in tasks]


if __name__ == "__main__":
    pytest.main([__file__])

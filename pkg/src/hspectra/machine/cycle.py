"""
サイクル検出

停止しないことを証明する2種類の反復を検出します。

1. 正規化様相の反復: 状態とヘッド基準のテープ内容が一致
2. 平行移動サイクル: ヘッドがテープの右端（左端）にいる2時点 i < j で状態が一致し、
   区間 [i, j] でヘッドが到達した最小（最大）位置からヘッドまでのテープが
   ずれ d = pos_j - pos_i を除いて一致

どちらも決定性と平行移動不変性から非停止を含意します。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from ..domain.models import STOP, Configuration, CycleCertificate
from .tape import Tape

logger = logging.getLogger(__name__)

DEFAULT_CAP_VISITED = 1 << 22

# 平行移動サイクルの照合対象にする直近の候補数（状態ごと）
FRONTIER_CANDIDATES = 16


@dataclass(frozen=True)
class _FrontierMark:
    step: int
    position: int
    start: int
    cells: bytes


class CycleDetector:
    """
    逐次的なサイクル検出器

    observe() に各ステップの様相を順に渡すと、最初に反復が確定した時点で
    CycleCertificate を返します。訪問記録が cap_visited を超えると検出を停止し、
    disabled フラグを立てます。
    """

    def __init__(self, cap_visited: int = DEFAULT_CAP_VISITED):
        self.cap_visited = cap_visited
        self.disabled = False
        self._first_step: Optional[int] = None
        self._positions: List[int] = []
        self._visited: Dict[Tuple[int, bytes, bytes], Tuple[int, int]] = {}
        self._right_marks: Dict[int, List[_FrontierMark]] = {}
        self._left_marks: Dict[int, List[_FrontierMark]] = {}
        self._entries = 0

    def observe(
        self, step: int, state: int, position: int, tape: Tape
    ) -> Optional[CycleCertificate]:
        """ステップ step の様相を記録し、反復が見つかれば証明書を返す"""
        if self.disabled:
            return None
        if self._first_step is None:
            self._first_step = step
        self._positions.append(position)

        left, right = tape.normalized_key(position)
        key = (state, left, right)
        seen = self._visited.get(key)
        if seen is not None:
            entry_step, entry_position = seen
            return CycleCertificate(entry_step, step - entry_step, position - entry_position)

        certificate = None
        if tape.is_blank_right_of(position):
            certificate = self._match_right(step, state, position, tape)
        if certificate is None and tape.is_blank_left_of(position):
            certificate = self._match_left(step, state, position, tape)
        if certificate is not None:
            return certificate

        self._visited[key] = (step, position)
        self._entries += 1
        if self._entries > self.cap_visited:
            self._disable()
        return None

    def _disable(self) -> None:
        logger.warning(
            f"訪問記録が上限 {self.cap_visited} を超えたためサイクル検出を無効化します"
        )
        self.disabled = True
        self._visited.clear()
        self._right_marks.clear()
        self._left_marks.clear()
        self._positions.clear()

    def _head_range(self, start_step: int, stop_step: int) -> List[int]:
        offset = self._first_step or 0
        return self._positions[start_step - offset : stop_step - offset + 1]

    def _match_right(
        self, step: int, state: int, position: int, tape: Tape
    ) -> Optional[CycleCertificate]:
        marks = self._right_marks.setdefault(state, [])
        found = None
        lowest, cursor = position, step
        for mark in reversed(marks[-FRONTIER_CANDIDATES:]):
            lowest = min(lowest, *self._head_range(mark.step, cursor))
            cursor = mark.step
            drift = position - mark.position
            if drift <= 0:
                continue
            before = _window(mark, lowest, mark.position)
            if before == tape.segment(lowest + drift, position):
                found = CycleCertificate(mark.step, step - mark.step, drift)
        if found is not None:
            return found

        start = position if tape.low is None else min(tape.low, position)
        marks.append(_FrontierMark(step, position, start, tape.segment(start, position)))
        self._entries += 1
        return None

    def _match_left(
        self, step: int, state: int, position: int, tape: Tape
    ) -> Optional[CycleCertificate]:
        marks = self._left_marks.setdefault(state, [])
        found = None
        highest, cursor = position, step
        for mark in reversed(marks[-FRONTIER_CANDIDATES:]):
            highest = max(highest, *self._head_range(mark.step, cursor))
            cursor = mark.step
            drift = position - mark.position
            if drift >= 0:
                continue
            before = _window(mark, mark.position, highest)
            if before == tape.segment(position, highest + drift):
                found = CycleCertificate(mark.step, step - mark.step, drift)
        if found is not None:
            return found

        stop = position if tape.high is None else max(tape.high, position)
        marks.append(_FrontierMark(step, position, position, tape.segment(position, stop)))
        self._entries += 1
        return None


def _window(mark: _FrontierMark, start: int, stop: int) -> bytes:
    """記録済みスナップショットから [start, stop] を切り出す（範囲外は空白）"""
    end = mark.start + len(mark.cells) - 1
    cells = bytearray()
    if start < mark.start:
        cells.extend(bytes(min(mark.start, stop + 1) - start))
    inner_start, inner_stop = max(start, mark.start), min(stop, end)
    if inner_start <= inner_stop:
        cells.extend(mark.cells[inner_start - mark.start : inner_stop - mark.start + 1])
    if stop > end:
        cells.extend(bytes(stop - max(end + 1, start) + 1))
    return bytes(cells)


def detect_cycle(
    trace: Iterable[Configuration], cap_visited: int = DEFAULT_CAP_VISITED
) -> Optional[CycleCertificate]:
    """
    様相の列から最初の非停止証明を探す

    証明書が見つからないことは停止の根拠になりません。

    Args:
        trace: 連続したステップの様相（trace() の出力など）
        cap_visited: 訪問記録の上限

    Returns:
        Optional[CycleCertificate]: 最初に確定した (entry_step, period)
    """
    detector = CycleDetector(cap_visited)
    for config in trace:
        if config.head_state == STOP:
            return None
        certificate = detector.observe(
            config.step_count,
            config.head_state,
            config.head_position,
            Tape.from_mapping(config.tape),
        )
        if certificate is not None:
            return certificate
        if detector.disabled:
            return None
    return None

"""
テープ

実行ループ用の可変テープ。bytearray 上に記号を保持し、
非空白マスの左右端を追跡します。
"""

from typing import Dict, Iterable, Mapping, Optional, Tuple

_GROW = 64
_BLANK = b"\x00"


class Tape:
    """
    両方向に無限なテープ

    絶対位置 position のマスは self._cells[position - self._origin] に対応します。
    範囲外のマスはすべて空白（記号0）です。
    """

    def __init__(self, symbols: Iterable[int] = ()):
        self._cells = bytearray(_GROW)
        self._origin = -(_GROW // 2)
        self._low: Optional[int] = None
        self._high: Optional[int] = None
        for position, symbol in enumerate(symbols):
            self.write(position, symbol)

    @classmethod
    def from_mapping(cls, tape: Mapping[int, int]) -> "Tape":
        """疎な辞書表現から生成"""
        result = cls()
        for position, symbol in tape.items():
            result.write(position, symbol)
        return result

    @property
    def low(self) -> Optional[int]:
        """最左の非空白マス（全空白ならNone）"""
        return self._low

    @property
    def high(self) -> Optional[int]:
        """最右の非空白マス（全空白ならNone）"""
        return self._high

    def _ensure(self, position: int) -> int:
        index = position - self._origin
        if index < 0:
            extra = -index + _GROW
            self._cells[0:0] = bytes(extra)
            self._origin -= extra
            index += extra
        elif index >= len(self._cells):
            self._cells.extend(bytes(index - len(self._cells) + _GROW))
        return index

    def read(self, position: int) -> int:
        index = position - self._origin
        if 0 <= index < len(self._cells):
            return self._cells[index]
        return 0

    def write(self, position: int, symbol: int) -> None:
        if symbol:
            self._cells[self._ensure(position)] = symbol
            if self._low is None or position < self._low:
                self._low = position
            if self._high is None or position > self._high:
                self._high = position
            return
        index = position - self._origin
        if not 0 <= index < len(self._cells) or not self._cells[index]:
            return
        self._cells[index] = 0
        if position == self._low or position == self._high:
            self._recompute_bounds()

    def _recompute_bounds(self) -> None:
        stripped_left = len(self._cells) - len(self._cells.lstrip(_BLANK))
        if stripped_left == len(self._cells):
            self._low = self._high = None
            return
        self._low = self._origin + stripped_left
        self._high = self._origin + len(self._cells.rstrip(_BLANK)) - 1

    def is_blank_right_of(self, position: int) -> bool:
        """position より右がすべて空白か"""
        return self._high is None or self._high <= position

    def is_blank_left_of(self, position: int) -> bool:
        """position より左がすべて空白か"""
        return self._low is None or self._low >= position

    def segment(self, start: int, stop: int) -> bytes:
        """[start, stop] の記号列（両端含む）"""
        if stop < start:
            return b""
        begin = start - self._origin
        end = stop - self._origin + 1
        if begin >= 0 and end <= len(self._cells):
            return bytes(self._cells[begin:end])
        return bytes(self.read(position) for position in range(start, stop + 1))

    def normalized_key(self, position: int) -> Tuple[bytes, bytes]:
        """
        ヘッド位置を基準にした正準キー

        (ヘッド左側の先頭空白を除いた列, ヘッド以降の末尾空白を除いた列)
        """
        if self._low is None or self._high is None:
            return b"", b""
        left = self.segment(self._low, position - 1) if self._low < position else b""
        right = self.segment(position, self._high) if self._high >= position else b""
        return left, right

    def snapshot(self) -> Dict[int, int]:
        """空白を含まない疎な辞書表現"""
        if self._low is None or self._high is None:
            return {}
        return {
            position: symbol
            for position, symbol in zip(
                range(self._low, self._high + 1), self.segment(self._low, self._high)
            )
            if symbol
        }

    def output(self) -> Tuple[int, ...]:
        """最左から最右の非空白マスまでの記号列"""
        if self._low is None or self._high is None:
            return ()
        return tuple(self.segment(self._low, self._high))

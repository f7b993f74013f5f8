"""
エラー定義

hspectra全体で送出される例外を定義します。
各例外は組み込み例外（ValueError / RuntimeError）も継承するため、
呼び出し側は従来通りの捕捉も行えます。
"""

from typing import Optional


class HSpectraError(Exception):
    """hspectraの基底例外"""


class InvalidMachineError(HSpectraError, ValueError):
    """遷移表が不正（非全域、範囲外のフィールドなど）"""


class InvalidInputError(HSpectraError, ValueError):
    """入力記号列が機械のアルファベット外"""


class StoppedConfigurationError(HSpectraError, ValueError):
    """STOP状態の様相に対してstepが呼ばれた"""


class InvalidCodeError(HSpectraError, ValueError):
    """ゲーデル番号が機械クラス内で有効でない"""

    def __init__(
        self,
        message: str,
        state: Optional[int] = None,
        symbol: Optional[int] = None,
        field: Optional[str] = None,
    ):
        super().__init__(message)
        self.state = state
        self.symbol = symbol
        self.field = field


class ClassTooLargeError(HSpectraError, RuntimeError):
    """機械クラスの要素数が上限を超えている"""

    def __init__(self, message: str, count: int, formula: str):
        super().__init__(message)
        self.count = count
        self.formula = formula


class MachineFileError(HSpectraError, ValueError):
    """機械記述ファイルの構文・内容エラー"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UndefinedGapError(HSpectraError, ValueError):
    """長さ1の鎖にはギャップが定義されない"""


class SiteOutOfRangeError(HSpectraError, ValueError):
    """クロック状態のインデックスが範囲外"""


class EigensolverError(HSpectraError, RuntimeError):
    """固有値計算が収束しなかった"""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class ResourceCapExceededError(HSpectraError, RuntimeError):
    """設定されたリソース上限を超えた"""


class TargetNotRepresentableError(HSpectraError, ValueError):
    """出力規約の下で生成できない目標記号列"""

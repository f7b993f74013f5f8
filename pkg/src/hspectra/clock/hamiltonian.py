"""
クロック・ハミルトニアン

実行履歴の部分空間に制限したファインマン型ハミルトニアン
（オンサイト0、ホッピング -1 の一様三重対角行列）を生成します。
"""

import numpy as np
import pandas as pd

from ..domain.spectral import ClockChain, TridiagonalHamiltonian

HOPPING = -1.0


def uniform_chain(length: int) -> TridiagonalHamiltonian:
    """長さ length の一様鎖"""
    if length < 1:
        raise ValueError(f"鎖の長さは1以上である必要があります: {length}")
    return TridiagonalHamiltonian(np.zeros(length), np.full(length - 1, HOPPING))


def hamiltonian(chain: ClockChain) -> TridiagonalHamiltonian:
    """クロック鎖のハミルトニアン（次元 = 鎖の長さ）"""
    return uniform_chain(chain.length)


def hamiltonian_frame(h: TridiagonalHamiltonian) -> pd.DataFrame:
    """
    CSV出力用の表 index,diagonal,offdiagonal

    最終行の offdiagonal は存在しないため空欄になります。
    """
    off_diagonal = np.append(h.off_diagonal, np.nan)
    return pd.DataFrame(
        {
            "index": np.arange(h.dimension),
            "diagonal": h.diagonal,
            "offdiagonal": off_diagonal,
        }
    )

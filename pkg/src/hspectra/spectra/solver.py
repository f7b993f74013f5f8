"""
三重対角固有値ソルバ

scipy.linalg の三重対角ルーチン（LAPACK stebz / stemr）を包み、
解析解オラクル・基底ギャップ・局所状態密度（LDOS）を提供します。
"""

import logging
from typing import Optional, Tuple

import numpy as np
import scipy.linalg as la

from ..domain.errors import EigensolverError, SiteOutOfRangeError, UndefinedGapError
from ..domain.spectral import SpectrumReport, TridiagonalHamiltonian

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-12
MAX_TOLERANCE = 1e-6


def _check_tolerance(tol: float) -> None:
    if not 0.0 < tol <= MAX_TOLERANCE:
        raise ValueError(f"許容誤差は (0, {MAX_TOLERANCE}] の範囲で指定してください: {tol}")


def _solver_error(error: Exception) -> EigensolverError:
    # LAPACK の info > 0 は収束しなかった固有値の番号
    index = getattr(error, "info", None)
    return EigensolverError(f"固有値計算が収束しませんでした: {error}", index=index)


def eigenvalues(h: TridiagonalHamiltonian, tol: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """
    全固有値を昇順で返す

    二分法（stebz）を絶対許容誤差 tol で使います。

    Args:
        h: ハミルトニアン
        tol: 許容誤差 (0, 1e-6]

    Returns:
        np.ndarray: 長さ L の昇順固有値
    """
    _check_tolerance(tol)
    if h.dimension == 1:
        return h.diagonal.copy()
    try:
        values = la.eigvalsh_tridiagonal(
            h.diagonal, h.off_diagonal, lapack_driver="stebz", tol=tol
        )
    except la.LinAlgError as e:
        raise _solver_error(e) from e
    return np.sort(values)


def lowest_eigenvalues(
    h: TridiagonalHamiltonian, count: int = 2, tol: float = DEFAULT_TOLERANCE
) -> np.ndarray:
    """下から count 個の固有値（スイープ用）"""
    _check_tolerance(tol)
    if h.dimension <= count:
        return eigenvalues(h, tol)
    try:
        values = la.eigvalsh_tridiagonal(
            h.diagonal,
            h.off_diagonal,
            select="i",
            select_range=(0, count - 1),
            lapack_driver="stebz",
            tol=tol,
        )
    except la.LinAlgError as e:
        raise _solver_error(e) from e
    return np.sort(values)


def chain_gap(h: TridiagonalHamiltonian, tol: float = DEFAULT_TOLERANCE) -> float:
    """E1 - E0 を直接計算"""
    if h.dimension < 2:
        raise UndefinedGapError("長さ1の鎖にはギャップが定義されません")
    lowest = lowest_eigenvalues(h, 2, tol)
    return float(lowest[1] - lowest[0])


def analytic_uniform_spectrum(length: int) -> np.ndarray:
    """一様鎖の閉形式スペクトル {-2cos(jπ/(L+1)) : j = 1..L}（昇順）"""
    if length < 1:
        raise ValueError(f"鎖の長さは1以上である必要があります: {length}")
    j = np.arange(1, length + 1)
    return np.sort(-2.0 * np.cos(j * np.pi / (length + 1)))


def analytic_gap(length: int) -> float:
    """一様鎖の基底ギャップ 2(cos(π/(L+1)) - cos(2π/(L+1)))"""
    if length < 2:
        raise UndefinedGapError("長さ1の鎖にはギャップが定義されません")
    angle = np.pi / (length + 1)
    return float(2.0 * (np.cos(angle) - np.cos(2.0 * angle)))


def eigensystem(h: TridiagonalHamiltonian) -> Tuple[np.ndarray, np.ndarray]:
    """固有値と固有ベクトル（列ベクトル）"""
    if h.dimension == 1:
        return h.diagonal.copy(), np.ones((1, 1))
    try:
        return la.eigh_tridiagonal(h.diagonal, h.off_diagonal)
    except la.LinAlgError as e:
        raise _solver_error(e) from e


def ldos(h: TridiagonalHamiltonian, site: int = 0) -> np.ndarray:
    """
    クロック状態 site の局所状態密度の重み

    固有ベクトルの site 成分の2乗を固有値の昇順に並べたもの（和は1）。

    Raises:
        SiteOutOfRangeError: site が [0, L) の範囲外の場合
    """
    if not 0 <= site < h.dimension:
        raise SiteOutOfRangeError(f"サイト {site} が範囲 [0, {h.dimension}) 外です")
    _, vectors = eigensystem(h)
    return vectors[site, :] ** 2


def spectrum_report(
    h: TridiagonalHamiltonian, site: int = 0, tol: float = DEFAULT_TOLERANCE
) -> SpectrumReport:
    """固有値とLDOS重みをまとめた SpectrumReport を作る"""
    report = SpectrumReport(eigenvalues=eigenvalues(h, tol), ldos_weights=ldos(h, site), site=site)
    logger.debug(f"スペクトルを計算しました: L={report.dimension} gap={report.ground_gap}")
    return report


def ground_gap(report: SpectrumReport) -> float:
    """
    基底ギャップ E1 - E0

    Raises:
        UndefinedGapError: L = 1 の場合
    """
    gap: Optional[float] = report.ground_gap
    if gap is None:
        raise UndefinedGapError("長さ1の鎖にはギャップが定義されません")
    return gap

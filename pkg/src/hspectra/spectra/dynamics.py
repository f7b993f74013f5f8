"""
時間領域とエネルギー領域の対応

LDOS重みから戻り振幅 a(t) を合成し、逆に a(t) の離散フーリエ解析で
固有エネルギーを取り出します。
"""

import numpy as np
from scipy.signal import find_peaks
from scipy.signal.windows import hann

from ..domain.errors import SiteOutOfRangeError
from ..domain.spectral import TridiagonalHamiltonian
from .solver import eigensystem


def return_amplitude_series(
    h: TridiagonalHamiltonian, site: int = 0, num_steps: int = 1
) -> np.ndarray:
    """
    戻り振幅 a(t) = Σ_j w_j exp(-i λ_j t)（t = 0..num_steps-1）

    重みは和が1になるよう正規化するので a(0) = 1 です。
    """
    if num_steps < 1:
        raise ValueError(f"ステップ数は1以上である必要があります: {num_steps}")
    if not 0 <= site < h.dimension:
        raise SiteOutOfRangeError(f"サイト {site} が範囲 [0, {h.dimension}) 外です")
    values, vectors = eigensystem(h)
    weights = vectors[site, :] ** 2
    weights = weights / weights.sum()
    times = np.arange(num_steps)
    series = np.exp(-1j * np.outer(times, values)) @ weights
    return series


def recover_spectrum(series: np.ndarray, count: int) -> np.ndarray:
    """
    戻り振幅の系列から固有エネルギーを推定

    Hann窓をかけた逆FFTの振幅で高い順に count 個の極大を選び、
    角周波数 (-π, π] をエネルギーとして昇順で返します。
    分解能は 2π / len(series) です。
    """
    series = np.asarray(series, dtype=complex)
    size = series.size
    if count < 1 or size < 3:
        raise ValueError("count は1以上、系列長は3以上である必要があります")

    magnitude = np.fft.fftshift(np.abs(np.fft.ifft(series * hann(size, sym=False))))
    frequencies = 2.0 * np.pi * np.fft.fftshift(np.fft.fftfreq(size))
    peaks, properties = find_peaks(magnitude, height=0.0)
    order = np.argsort(properties["peak_heights"])[::-1][:count]
    return np.sort(frequencies[peaks[order]])

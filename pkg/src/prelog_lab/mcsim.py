"""Monte Carlo channel simulation and nonparametric information estimates.

These routines validate the analytic chain numerically: the peak-limited
input ensemble (circularly symmetric, |X|^2 uniform on [0, A^2]), the channel
Y = H X + Z, k-nearest-neighbor differential entropy estimation on the complex
plane, the stratified estimate of the coherent mutual information
I(X1; Y1 | H1), and a Welch spectral check of simulated fading paths.
Everything is a pure function of its seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.signal
import scipy.spatial
from scipy.special import digamma

from . import fading
from ._parallel import parallel_map
from .errors import DegenerateSampleError

_STRATA = 64
_FOLDS = 10


@dataclass(frozen=True, eq=False)
class InputBatch:
    values: np.ndarray
    peak: float

    def __post_init__(self):
        if np.any(np.abs(self.values) > self.peak * (1 + 1e-12)):
            raise ValueError("inputs exceed the peak amplitude")


@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    standard_error: float
    sample_count: int
    neighbor_order: int

    def __post_init__(self):
        if self.sample_count < 100:
            raise ValueError("entropy estimates need at least 100 samples")
        if self.neighbor_order < 1:
            raise ValueError("neighbor order must be at least 1")
        if not self.standard_error > 0:
            raise ValueError("standard error must be positive")


def sample_inputs(n, peak, seed):
    """IID circularly-symmetric inputs with |X|^2 uniform on [0, peak^2]."""
    if n < 1:
        raise ValueError("need at least one sample")
    if peak <= 0:
        raise ValueError("peak amplitude must be positive")
    rng = np.random.default_rng(seed)
    radius = peak * np.sqrt(rng.random(n))
    return InputBatch(values=radius * np.exp(2j * np.pi * rng.random(n)),
                      peak=float(peak))


def simulate_channel(inputs, path, noise_variance, seed):
    """Y_k = H_k X_k + Z_k with fresh circularly-symmetric Gaussian noise.

    noise_variance = 0 is accepted as a test mode and returns H*X exactly.
    """
    x = inputs.values
    h = path.values
    if len(x) != len(h):
        raise ValueError("input and fading sequences must have equal length")
    if noise_variance < 0:
        raise ValueError("noise variance must be nonnegative")
    y = h * x
    if noise_variance > 0:
        rng = np.random.default_rng(seed)
        z = rng.standard_normal(len(x)) + 1j * rng.standard_normal(len(x))
        y = y + math.sqrt(noise_variance / 2.0) * z
    return y


def _kl_entropy(samples, k, workers=-1):
    """Kozachenko-Leonenko estimate of differential entropy in the plane."""
    samples = np.asarray(samples)
    pts = np.column_stack([samples.real, samples.imag])
    n = len(pts)
    tree = scipy.spatial.cKDTree(pts)
    dist, _ = tree.query(pts, k=k + 1, workers=workers)
    eps = dist[:, k]
    positive = eps > 0
    if np.count_nonzero(~positive) > 0.01 * n:
        raise DegenerateSampleError(
            "more than 1% duplicate points; differential entropy of a law "
            "with atoms is not defined")
    return float(digamma(n) - digamma(k) + math.log(math.pi)
                 + 2.0 * np.mean(np.log(eps[positive])))


def estimate_entropy(samples, k=4):
    """k-NN differential entropy of complex samples with a jackknife error bar.

    The standard error comes from a delete-a-group jackknife over 10 folds.
    Isolated duplicate points (at most 1% of the sample) are left out of the
    log-distance average; beyond that the sample is rejected as degenerate.
    """
    samples = np.asarray(samples)
    n = len(samples)
    if n < 100:
        raise ValueError("need at least 100 samples")
    if not 1 <= k <= 20:
        raise ValueError("neighbor order must lie in 1..20")
    value = _kl_entropy(samples, k)
    folds = np.arange(n) % _FOLDS
    thetas = np.array(parallel_map(
        lambda j: _kl_entropy(samples[folds != j], k, workers=1),
        range(_FOLDS)))
    se = math.sqrt((_FOLDS - 1) / _FOLDS * np.sum((thetas - thetas.mean())**2))
    return EntropyEstimate(value=value, standard_error=se,
                           sample_count=n, neighbor_order=k)


def estimate_coherent_mi(model, params, n_samples, seed):
    """Stratified MC estimate of I(X1; Y1 | H1) under the peak-limited ensemble.

    The conditioning expectation over H is stratified: 64 fading draws, each
    with its own block of channel samples and its own seed stream derived from
    (seed, stratum index), so the result is independent of execution order.
    The estimate is mean stratum entropy minus ln(pi e sigma^2); its standard
    error is the stratum spread over sqrt(64).
    """
    if n_samples < 10**4:
        raise ValueError("need at least 1e4 samples")
    base = [int(s) for s in seed] if np.iterable(seed) else [int(seed)]
    per = n_samples // _STRATA
    sigma2 = params.noise_variance
    peak = params.peak_amplitude

    def stratum(m):
        rng = np.random.default_rng(base + [m])
        h = fading.draw_marginal(model, 1, rng)[0]
        x = peak * np.sqrt(rng.random(per)) * np.exp(2j * np.pi * rng.random(per))
        z = rng.standard_normal(per) + 1j * rng.standard_normal(per)
        y = h * x + math.sqrt(sigma2 / 2.0) * z
        return _kl_entropy(y, k=4, workers=1)

    entropies = np.array(parallel_map(stratum, range(_STRATA)))
    mi = float(entropies.mean() - math.log(math.pi * math.e * sigma2))
    se = float(entropies.std(ddof=1) / math.sqrt(_STRATA))
    return EntropyEstimate(value=mi, standard_error=se,
                           sample_count=per * _STRATA, neighbor_order=4)


def empirical_spectrum(path, segment_length):
    """Welch density estimate of a fading path on the shifted frequency grid.

    Hann window, 50% overlap, mean removed, renormalized so that the grid sum
    times the bin width reproduces the sample variance.  Returns (grid, density).
    """
    values = np.asarray(path.values)
    seg = int(segment_length)
    if seg < 2 or seg & (seg - 1):
        raise ValueError("segment length must be a power of two")
    if len(values) < 8 * seg:
        raise ValueError("path must cover at least 8 segments")
    x = values - values.mean()
    freqs, dens = scipy.signal.welch(x, window="hann", nperseg=seg,
                                     noverlap=seg // 2, detrend=False,
                                     return_onesided=False, scaling="density")
    freqs = np.fft.fftshift(freqs)
    dens = np.fft.fftshift(dens.real)
    variance = float(np.mean(np.abs(x)**2))
    power = float(np.mean(np.abs(values)**2))
    if variance <= 1e-24 * max(power, 1.0):
        # centered variance at mean-subtraction rounding level: the path is
        # constant and its centered spectrum is identically zero
        return freqs, np.zeros_like(dens)
    total = float(dens.sum() / seg)
    if total > 0:
        dens = dens * (variance / total)
    return freqs, dens

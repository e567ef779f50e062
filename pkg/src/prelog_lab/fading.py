"""Stationary ergodic fading laws with a prescribed spectral distribution.

Two families are provided.  Gaussian models take an arbitrary spectral
distribution and realize the (unique) circularly-symmetric Gaussian process
with that spectrum; paths are drawn exactly by circulant embedding.  Filtered
models push IID unit-variance innovations (complex Gaussian, uniform-phase
unit modulus, or the four-point phase alphabet {1, i, -1, -i}) through a
finite filter, which yields non-Gaussian stationary ergodic processes whose
spectral density is an exact trigonometric polynomial.  Both carry an optional
mean d; the centered process always has unit variance.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import scipy.stats

from . import spectra
from .errors import NumericalError, UnsupportedModelError

GAUSSIAN = "gaussian"
FIR = "fir"

COMPLEX_GAUSSIAN = "complex_gaussian"
UNIT_MODULUS = "unit_modulus"
FOUR_POINT_PHASE = "four_point_phase"
INNOVATION_LAWS = (COMPLEX_GAUSSIAN, UNIT_MODULUS, FOUR_POINT_PHASE)

# exact alphabet so that |H_k| = 1 holds to the last bit for single-tap models
_FOUR_POINTS = np.array([1.0 + 0.0j, 0.0 + 1.0j, -1.0 + 0.0j, 0.0 - 1.0j])

_EMPIRICAL_N = 10**6
_EMPIRICAL_SEED = 181_451_339  # fixed: cached marginal CDFs must not depend on callers
_EMBED_CAP = 2**20
_EMBED_CLIP_TOL = 1e-4  # relative eigenvalue mass clipped to zero in the embedding


@dataclass(frozen=True)
class FadingModel:
    """Immutable fading law; hashable so derived tables can be cached."""

    kind: str
    mean: complex
    spectrum: spectra.SpectralDistribution
    taps: tuple | None = None
    innovation: str | None = None


@dataclass(frozen=True, eq=False)
class SamplePath:
    values: np.ndarray
    model: FadingModel
    seed: object

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("sample path must contain at least one value")


@dataclass(frozen=True)
class ZeroMassEstimate:
    """Empirical P(|H1| < eps) with its binomial standard error."""

    probability: float
    standard_error: float
    epsilon: float
    sample_count: int


def gaussian_model(spectrum, d=0.0):
    """Circularly-symmetric Gaussian fading with the given spectrum, plus mean d."""
    return FadingModel(kind=GAUSSIAN, mean=complex(d), spectrum=spectrum)


def fir_spectrum(taps):
    """Exact trigonometric-polynomial spectrum |sum_j tap_j e^{-i 2 pi j lam}|^2."""
    a = np.asarray(taps, dtype=complex)
    corr = np.correlate(a, a, mode="full")  # filter autocorrelation, lag m at index J-1+m
    piece = spectra.Piece(-0.5, 0.5, spectra.TrigPolyDensity(tuple(corr[::-1])))
    return spectra.SpectralDistribution(pieces=(piece,))


def fir_model(taps, innovation=COMPLEX_GAUSSIAN, d=0.0):
    """H_k = d + sum_j tap_j W_{k-j} with IID unit-variance innovations W.

    Taps are normalized to unit total power so the centered process has unit
    variance; the derived spectral density is exact, so a Gaussian and a
    non-Gaussian model built from the same taps share the same spectrum by
    construction.
    """
    a = np.asarray(taps, dtype=complex)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("taps must be a nonempty 1-d sequence")
    if innovation not in INNOVATION_LAWS:
        raise ValueError(f"unknown innovation law {innovation!r}")
    power = np.sum(np.abs(a) ** 2)
    if power == 0:
        raise ValueError("taps must not be all zero")
    a = a / np.sqrt(power)
    return FadingModel(kind=FIR, mean=complex(d), spectrum=fir_spectrum(a),
                       taps=tuple(a), innovation=innovation)


def _draw_innovations(rng, law, count):
    if law == COMPLEX_GAUSSIAN:
        z = rng.standard_normal(count) + 1j * rng.standard_normal(count)
        return z / np.sqrt(2.0)
    if law == UNIT_MODULUS:
        return np.exp(2j * np.pi * rng.random(count))
    return _FOUR_POINTS[rng.integers(0, 4, size=count)]


def draw_marginal(model, count, rng):
    """IID draws from the marginal law of H1 (no path machinery involved)."""
    if model.kind == GAUSSIAN:
        z = rng.standard_normal(count) + 1j * rng.standard_normal(count)
        return model.mean + z / np.sqrt(2.0)
    taps = np.asarray(model.taps)
    w = _draw_innovations(rng, model.innovation, count * taps.size)
    return model.mean + w.reshape(count, taps.size) @ taps


@functools.lru_cache(maxsize=64)
def _embedding_eigenvalues(spectrum, order):
    """Eigenvalues of the order-point circulant embedding, clipped to >= 0.

    Returns (eigenvalues, ok): ok is True when the clipped (negative) eigenvalue
    mass is at most a 1e-4 fraction of the total, which bounds the covariance
    error of the sampled path by the same fraction.  Strictly band-limited
    densities never embed exactly PSD at any finite order, so a small clipped
    mass is accepted instead of demanding min eigenvalue >= 0.
    """
    half = order // 2
    r = spectra.autocovariances(spectrum, np.arange(half + 1))
    first_row = np.concatenate([r, np.conj(r[half - 1:0:-1])])
    lam = np.fft.fft(first_row).real
    clipped = -float(lam[lam < 0].sum())
    ok = clipped <= _EMBED_CLIP_TOL * float(np.abs(lam).sum())
    return np.clip(lam, 0.0, None), ok


def _gaussian_path(spectrum, n, rng):
    order = 1 << max(int(np.ceil(np.log2(max(8 * n, 16)))), 4)
    while True:
        lam, ok = _embedding_eigenvalues(spectrum, order)
        if ok:
            break
        if order >= _EMBED_CAP:
            raise NumericalError(
                f"circulant embedding still not PSD at order {order}")
        order *= 2
    xi = rng.standard_normal(order) + 1j * rng.standard_normal(order)
    path = np.sqrt(order / 2.0) * np.fft.ifft(np.sqrt(lam) * xi)
    return path[:n]


def simulate_path(model, n, seed):
    """Length-n stationary sample path, deterministic in (model, n, seed).

    Gaussian models use circulant embedding of the autocovariance sequence
    (embedding order at least 8n, doubled as needed); filtered models draw
    n + len(taps) - 1 innovations and convolve.
    """
    if n < 1:
        raise ValueError("path length must be at least 1")
    rng = np.random.default_rng(seed)
    if model.kind == FIR:
        taps = np.asarray(model.taps)
        w = _draw_innovations(rng, model.innovation, n + taps.size - 1)
        values = model.mean + np.convolve(w, taps, mode="valid")
    else:
        if model.spectrum.point_masses:
            raise UnsupportedModelError(
                "Gaussian fading with spectral point masses is not ergodic; "
                "path simulation is not supported for such models")
        values = model.mean + _gaussian_path(model.spectrum, n, rng)
    return SamplePath(values=values, model=model, seed=seed)


@functools.lru_cache(maxsize=8)
def _marginal_samples(model):
    """Sorted |H1| draws (N = 1e6) for models without a closed-form tail."""
    rng = np.random.default_rng([_EMPIRICAL_SEED])
    return np.sort(np.abs(draw_marginal(model, _EMPIRICAL_N, rng)))


def marginal_tail(model, gamma):
    """P(|H1| >= gamma).

    Closed form for Gaussian marginals (Rayleigh/Rice; filtered complex
    Gaussian innovations included, since a unit-power filter preserves the
    law) and for single-tap discrete alphabets; otherwise an empirical tail
    from 1e6 cached draws, whose standard error is at most 5e-4.
    """
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    if gamma == 0:
        return 1.0
    gaussian_marginal = model.kind == GAUSSIAN or model.innovation == COMPLEX_GAUSSIAN
    if gaussian_marginal:
        if model.mean == 0:
            return float(np.exp(-gamma * gamma))
        return float(scipy.stats.rice.sf(gamma, np.sqrt(2.0) * abs(model.mean),
                                         scale=np.sqrt(0.5)))
    if model.kind == FIR and len(model.taps) == 1:
        tap = model.taps[0]
        if model.innovation == FOUR_POINT_PHASE:
            atoms = np.abs(model.mean + tap * _FOUR_POINTS)
            return float(np.mean(atoms >= gamma - 1e-12))
        if model.innovation == UNIT_MODULUS and model.mean == 0:
            return 1.0 if abs(tap) >= gamma - 1e-12 else 0.0
    samples = _marginal_samples(model)
    idx = np.searchsorted(samples, gamma, side="left")
    return float(samples.size - idx) / samples.size


def zero_mass_check(model, epsilon, n_samples=10**6, seed=0):
    """Empirical P(|H1| < epsilon), certifying continuity of the law at zero."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if n_samples < 10**3:
        raise ValueError("need at least 1000 samples")
    rng = np.random.default_rng(seed)
    hits = np.abs(draw_marginal(model, n_samples, rng)) < epsilon
    p = float(np.mean(hits))
    se = float(np.sqrt(p * (1.0 - p) / n_samples))
    return ZeroMassEstimate(probability=p, standard_error=se,
                            epsilon=float(epsilon), sample_count=int(n_samples))

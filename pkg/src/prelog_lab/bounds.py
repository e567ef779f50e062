"""Capacity lower bound for peak-limited non-coherent fading channels.

For a fading law with marginal tail p = P(|H1| >= Gamma) and spectral
distribution F, the bound at a given SNR is

    bound = p * ln(SNR) - p * (1 - ln Gamma^2) - integral ln(1 + SNR F'(lam)) dlam

in nats per channel use.  The first two terms lower-bound the coherent mutual
information I(X1; Y1 | H1) under the peak-limited input ensemble; the integral
is the high-n limit of the penalty (1/n) ln det(I + SNR K), the information the
outputs leak about the fading.  Both penalty forms are provided; the bound uses
the spectral integral, while the finite-n log-determinant supports convergence
studies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.integrate
import scipy.linalg

from . import fading, spectra
from .errors import NumericalError


@dataclass(frozen=True)
class ChannelParams:
    """Peak amplitude A, noise variance, and their ratio snr = A^2 / sigma^2."""

    peak_amplitude: float
    noise_variance: float
    snr: float

    def __post_init__(self):
        if self.noise_variance <= 0:
            raise ValueError("noise variance must be positive")
        if self.peak_amplitude < 0:
            raise ValueError("peak amplitude must be nonnegative")
        implied = self.peak_amplitude**2 / self.noise_variance
        if abs(implied - self.snr) > 1e-12 * max(1.0, abs(self.snr)):
            raise ValueError("snr must equal peak_amplitude^2 / noise_variance")

    @classmethod
    def from_snr(cls, snr, noise_variance=1.0):
        if snr <= 0:
            raise ValueError("snr must be positive")
        peak = math.sqrt(snr * noise_variance)
        return cls(peak_amplitude=peak, noise_variance=float(noise_variance),
                   snr=float(snr))


@dataclass(frozen=True)
class BoundReport:
    snr: float
    gamma: float
    coherent: float
    penalty_spectral: float
    bound: float
    penalty_logdet_n: tuple | None = None  # optional (n, value in nats)

    def __post_init__(self):
        if abs(self.bound - (self.coherent - self.penalty_spectral)) > 1e-12:
            raise ValueError("bound must equal coherent - penalty_spectral")
        if self.penalty_spectral < 0:
            raise ValueError("penalty must be nonnegative")


def coherent_term(snr, gamma, tail):
    """tail * ln(snr) - tail * (1 - ln gamma^2): the coherent MI lower bound."""
    if snr <= 0:
        raise ValueError("snr must be positive")
    if gamma <= 0:
        raise ValueError("gamma must be positive (ln gamma^2 is undefined at 0)")
    if not 0.0 <= tail <= 1.0:
        raise ValueError("tail must be a probability")
    return tail * math.log(snr) - tail * (1.0 - 2.0 * math.log(gamma))


def penalty_spectral(spectrum, snr):
    """integral over [-1/2, 1/2] of ln(1 + snr * F'(lam)).

    Constant-density pieces integrate in closed form; polynomial and
    trigonometric pieces use adaptive quadrature with absolute tolerance 1e-9.
    Point masses have no density and contribute nothing.
    """
    if snr <= 0:
        raise ValueError("snr must be positive")
    total = 0.0
    for p in spectrum.pieces:
        dens = p.density
        if isinstance(dens, spectra.ConstantDensity):
            total += (p.hi - p.lo) * math.log1p(snr * dens.value)
        else:
            # clamp rounding noise at density zeros: snr * (-1e-17) matters at 1e16
            val, _ = scipy.integrate.quad(
                lambda lam: math.log1p(snr * max(float(dens(lam)), 0.0)),
                p.lo, p.hi, epsabs=1e-9, limit=200)
            total += val
    return total


def penalty_logdet(spectrum, snr, n):
    """(1/n) * ln det(I + snr * K) for the order-n Toeplitz covariance K."""
    if snr <= 0:
        raise ValueError("snr must be positive")
    if n < 1:
        raise ValueError("matrix order must be at least 1")
    cov = spectra.toeplitz_covariance(spectrum, n)
    m = np.eye(n, dtype=complex) + snr * cov.entries
    try:
        chol = scipy.linalg.cholesky(m, lower=True)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            "Cholesky factorization of I + snr*K failed; covariance invariants "
            "are violated upstream") from exc
    return float(2.0 * np.sum(np.log(np.diag(chol).real)) / n)


def capacity_lower_bound(model, snr, gamma):
    """BoundReport at one (snr, gamma); the raw bound may be negative, and
    capacity satisfies C >= max(bound, 0)."""
    tail = fading.marginal_tail(model, gamma)
    coherent = coherent_term(snr, gamma, tail)
    penalty = penalty_spectral(model.spectrum, snr)
    return BoundReport(snr=float(snr), gamma=float(gamma), coherent=coherent,
                       penalty_spectral=penalty, bound=coherent - penalty)


_GAMMA_GRID = np.logspace(-6.0, 3.0, 601)
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def optimize_gamma(model, snr):
    """Best threshold for the bound at this snr: grid search over
    [1e-6, 1e3] (601 log-spaced points, Gamma = 1 among them) refined by
    golden-section on the bracketing interval; ties go to the smaller Gamma.

    The penalty does not depend on Gamma, so only the coherent term is
    searched.  The returned bound is never below the bound at Gamma = 1.
    """
    if snr <= 1:
        raise ValueError("snr must exceed 1 so that ln snr > 0")
    lsnr = math.log(snr)

    def objective(g):
        return fading.marginal_tail(model, g) * (lsnr - 1.0 + 2.0 * math.log(g))

    values = np.array([objective(g) for g in _GAMMA_GRID])
    i = int(np.argmax(values))  # argmax takes the first = smallest gamma on ties
    a = math.log(_GAMMA_GRID[max(i - 1, 0)])
    b = math.log(_GAMMA_GRID[min(i + 1, len(_GAMMA_GRID) - 1)])
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = objective(math.exp(c)), objective(math.exp(d))
    for _ in range(50):
        if fc >= fd:  # keep the left subinterval on ties
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = objective(math.exp(c))
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = objective(math.exp(d))
    refined = math.exp(0.5 * (a + b))
    candidates = [(float(_GAMMA_GRID[i]), float(values[i])),
                  (refined, objective(refined)),
                  (1.0, objective(1.0))]
    best_g, best_v = candidates[0]
    for g, v in candidates[1:]:
        # near-ties (within 1e-9 nats) count as ties and go to the smaller gamma
        if v > best_v + 1e-9 or (v >= best_v - 1e-9 and g < best_g):
            best_g, best_v = g, v
    return best_g, capacity_lower_bound(model, snr, best_g)

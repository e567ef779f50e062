"""Spectral distribution functions on the frequency interval [-1/2, 1/2].

A spectral distribution is represented exactly as a collection of absolutely
continuous pieces (constant, polynomial, or trigonometric-polynomial densities
on disjoint sub-intervals) plus a finite set of point masses.  Every quantity
derived here -- masses, autocovariances, level-set measures -- is computed in
closed form from that representation, so flat-set measures and the harmonic
partition carry no quadrature error.

Conventions: unit total mass (unit-variance fading), natural logarithms, and
autocovariance(m) = integral of exp(i 2 pi m lambda) against the distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

MASS_TOL = 1e-12
_DENSITY_FLOOR = -1e-9  # tolerance for tiny negative rounding in derived densities


def _fourier_kernel(m, lo, hi):
    """Integral of exp(i 2 pi m lambda) over [lo, hi], vectorized over m."""
    m = np.asarray(m)
    w = 2j * np.pi * m
    safe = np.where(m == 0, 1.0, w)
    out = np.where(m == 0, complex(hi - lo), (np.exp(w * hi) - np.exp(w * lo)) / safe)
    if out.ndim == 0:
        return complex(out)
    return out


def _real_roots_in(coeffs, lo, hi):
    """Real roots of a polynomial (low-order-first coeffs) strictly inside (lo, hi)."""
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    if coeffs.size <= 1:
        return np.empty(0)
    roots = np.polynomial.polynomial.polyroots(coeffs)
    real = roots[np.abs(roots.imag) < 1e-9].real
    inside = real[(real > lo + 1e-13) & (real < hi - 1e-13)]
    return np.unique(np.round(inside, 12))


@dataclass(frozen=True)
class ConstantDensity:
    """Density that is constant on its piece."""

    value: float

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=float)
        out = np.full(lam.shape, float(self.value))
        return out if out.ndim else float(out)

    @property
    def is_zero(self):
        return self.value == 0.0

    def mass(self, lo, hi):
        return self.value * (hi - lo)

    def fourier(self, m, lo, hi):
        return self.value * _fourier_kernel(m, lo, hi)

    def min_value(self, lo, hi):
        return self.value

    def level_measures(self, lo, hi):
        length = hi - lo
        if self.value == 0.0:
            return (length, 0.0, 0.0)
        if self.value >= 1.0:
            return (0.0, length, 0.0)
        return (0.0, 0.0, length)


@dataclass(frozen=True)
class PolynomialDensity:
    """Density given by a polynomial in lambda, coefficients low order first."""

    coeffs: tuple

    def __call__(self, lam):
        return np.polynomial.polynomial.polyval(lam, np.asarray(self.coeffs, dtype=float))

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def mass(self, lo, hi):
        anti = np.polynomial.polynomial.polyint(np.asarray(self.coeffs, dtype=float))
        val = np.polynomial.polynomial.polyval
        return float(val(hi, anti) - val(lo, anti))

    def fourier(self, m, lo, hi):
        # integral of lambda^k exp(i w lambda) by downward integration by parts
        m_arr = np.atleast_1d(np.asarray(m))
        out = np.zeros(m_arr.shape, dtype=complex)
        nz = m_arr != 0
        if np.any(~nz):
            out[~nz] = self.mass(lo, hi)
        if np.any(nz):
            w = 2j * np.pi * m_arr[nz]
            e_hi, e_lo = np.exp(w * hi), np.exp(w * lo)
            powers_hi = hi ** np.arange(len(self.coeffs))
            powers_lo = lo ** np.arange(len(self.coeffs))
            ik = np.zeros_like(w)  # I_k for current k
            acc = np.zeros_like(w)
            for k in range(len(self.coeffs)):
                boundary = (powers_hi[k] * e_hi - powers_lo[k] * e_lo) / w
                ik = boundary - (k / w) * ik if k else boundary
                acc += self.coeffs[k] * ik
            out[nz] = acc
        return out if np.asarray(m).ndim else complex(out[0])

    def min_value(self, lo, hi):
        deriv = np.polynomial.polynomial.polyder(np.asarray(self.coeffs, dtype=float))
        crit = np.concatenate([[lo, hi], _real_roots_in(deriv, lo, hi)])
        return float(np.min(self(crit)))

    def level_measures(self, lo, hi):
        length = hi - lo
        if self.is_zero:
            return (length, 0.0, 0.0)
        shifted = np.asarray(self.coeffs, dtype=float).copy()
        shifted[0] -= 1.0
        if not np.any(shifted):
            return (0.0, length, 0.0)  # density identically 1 -> boundary set
        cuts = np.concatenate([[lo], _real_roots_in(shifted, lo, hi), [hi]])
        mids = 0.5 * (cuts[:-1] + cuts[1:])
        ge1 = self(mids) >= 1.0
        lengths = np.diff(cuts)
        return (0.0, float(lengths[ge1].sum()), float(lengths[~ge1].sum()))


@dataclass(frozen=True)
class TrigPolyDensity:
    """Density sum_m g_m exp(i 2 pi m lambda), m = -K..K, with Hermitian g."""

    coeffs: tuple  # complex, ordered m = -K .. K

    @property
    def order(self):
        return (len(self.coeffs) - 1) // 2

    def _harmonics(self):
        k = self.order
        return np.arange(-k, k + 1)

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=float)
        harm = self._harmonics()
        phases = np.exp(2j * np.pi * np.multiply.outer(lam, harm))
        out = np.real(phases @ np.asarray(self.coeffs, dtype=complex))
        return out if out.ndim else float(out)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def mass(self, lo, hi):
        g = np.asarray(self.coeffs, dtype=complex)
        return float(np.real(np.sum(g * _fourier_kernel(self._harmonics(), lo, hi))))

    def fourier(self, m, lo, hi):
        m_arr = np.atleast_1d(np.asarray(m))
        acc = np.zeros(m_arr.shape, dtype=complex)
        for k, g in zip(self._harmonics(), self.coeffs):
            acc += g * _fourier_kernel(k + m_arr, lo, hi)
        return acc if np.asarray(m).ndim else complex(acc[0])

    def min_value(self, lo, hi):
        grid = np.linspace(lo, hi, 4097)
        return float(np.min(self(grid)))

    def _level_cuts(self, c, lo, hi):
        """Solutions of density(lambda) = c in (lo, hi), via roots on the unit circle."""
        k = self.order
        g = np.asarray(self.coeffs, dtype=complex).copy()
        g[k] -= c  # subtract c from the m=0 coefficient
        if not np.any(g):
            return None  # density identically c
        roots = np.polynomial.polynomial.polyroots(g)
        on_circle = roots[np.abs(np.abs(roots) - 1.0) < 1e-7]
        lams = np.angle(on_circle) / (2 * np.pi)
        inside = lams[(lams > lo + 1e-13) & (lams < hi - 1e-13)]
        return np.unique(np.round(inside, 12))

    def level_measures(self, lo, hi):
        length = hi - lo
        if self.is_zero:
            return (length, 0.0, 0.0)
        cuts1 = self._level_cuts(1.0, lo, hi)
        if cuts1 is None:
            return (0.0, length, 0.0)
        cuts = np.concatenate([[lo], cuts1, [hi]])
        mids = 0.5 * (cuts[:-1] + cuts[1:])
        ge1 = self(mids) >= 1.0
        lengths = np.diff(cuts)
        return (0.0, float(lengths[ge1].sum()), float(lengths[~ge1].sum()))


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    density: ConstantDensity | PolynomialDensity | TrigPolyDensity


@dataclass(frozen=True)
class HarmonicPartition:
    """Measures of the harmonic sets where the density is zero, >= 1, or in (0, 1)."""

    mu_s1: float
    mu_s2: float
    mu_s3: float

    def __post_init__(self):
        total = self.mu_s1 + self.mu_s2 + self.mu_s3
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(f"partition measures sum to {total!r}, expected 1")


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """Hermitian Toeplitz covariance matrix of n consecutive fading samples."""

    order: int
    entries: np.ndarray

    def validate(self):
        """Check Hermitian/Toeplitz structure, unit diagonal, and PSD up to rounding."""
        k = self.entries
        n = self.order
        if k.shape != (n, n):
            raise ValueError("entry matrix shape does not match order")
        if not np.allclose(k, k.conj().T, atol=1e-12):
            raise ValueError("matrix is not Hermitian")
        first = k[0]
        for j in range(1, n):
            if not np.allclose(k[j, j:], first[: n - j], atol=1e-12):
                raise ValueError("matrix is not Toeplitz")
        if not np.allclose(np.diag(k).real, 1.0, atol=1e-9):
            raise ValueError("diagonal entries differ from unit variance")
        min_eig = float(np.linalg.eigvalsh(k).min())
        if min_eig < -1e-10 * max(n, 1):
            raise ValueError(f"matrix is not PSD, min eigenvalue {min_eig}")
        return self


@dataclass(frozen=True)
class SpectralDistribution:
    """Piecewise-exact spectral distribution: a.c. pieces plus point masses."""

    pieces: tuple = ()
    point_masses: tuple = ()  # ((location, weight), ...)

    def __post_init__(self):
        spans = []
        for p in self.pieces:
            if not (-0.5 - 1e-12 <= p.lo < p.hi <= 0.5 + 1e-12):
                raise ValueError(f"piece [{p.lo}, {p.hi}] outside [-1/2, 1/2]")
            if p.density.min_value(p.lo, p.hi) < _DENSITY_FLOOR:
                raise ValueError(f"negative density on [{p.lo}, {p.hi}]")
            spans.append((p.lo, p.hi))
        spans.sort()
        for (a0, b0), (a1, _) in zip(spans, spans[1:]):
            if a1 < b0 - 1e-12:
                raise ValueError("piece intervals overlap")
        locs = [loc for loc, _ in self.point_masses]
        if len(set(locs)) != len(locs):
            raise ValueError("point-mass locations must be distinct")
        for loc, w in self.point_masses:
            if not -0.5 <= loc <= 0.5:
                raise ValueError(f"point mass at {loc} outside [-1/2, 1/2]")
            if w < 0:
                raise ValueError("point-mass weights must be nonnegative")
        total = self.total_mass()
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(f"total spectral mass is {total!r}, expected 1")

    def total_mass(self):
        ac = sum(p.density.mass(p.lo, p.hi) for p in self.pieces)
        return ac + sum(w for _, w in self.point_masses)


# ---------------------------------------------------------------------------
# constructors for common spectra
# ---------------------------------------------------------------------------

def flat_band(half_width):
    """Uniform density 1/(2*half_width) on [-half_width, half_width]."""
    if not 0 < half_width <= 0.5:
        raise ValueError("half_width must lie in (0, 1/2]")
    dens = ConstantDensity(1.0 / (2.0 * half_width))
    return SpectralDistribution(pieces=(Piece(-half_width, half_width, dens),))


def white():
    """Flat unit density over the whole interval (memoryless fading)."""
    return flat_band(0.5)


def piecewise_constant(bands):
    """Spectrum from (lo, hi, density) triples; densities must integrate to 1."""
    pieces = tuple(Piece(lo, hi, ConstantDensity(float(c))) for lo, hi, c in bands)
    return SpectralDistribution(pieces=pieces)


def point_mass_spectrum(masses):
    """Purely discrete spectrum from (location, weight) pairs."""
    return SpectralDistribution(point_masses=tuple((float(l), float(w)) for l, w in masses))


def mixed_spectrum(bands, masses):
    """Absolutely continuous bands plus point masses, total mass 1."""
    pieces = tuple(Piece(lo, hi, ConstantDensity(float(c))) for lo, hi, c in bands)
    return SpectralDistribution(pieces=pieces,
                                point_masses=tuple((float(l), float(w)) for l, w in masses))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def density_at(spectrum, lam):
    """Density of the absolutely continuous part at lam (point masses excluded)."""
    if not -0.5 <= lam <= 0.5:
        raise ValueError(f"lambda {lam} outside [-1/2, 1/2]")
    for p in spectrum.pieces:
        if p.lo <= lam <= p.hi:
            return float(p.density(lam))
    return 0.0


def flat_set_measure(spectrum):
    """Lebesgue measure of the harmonic set where the density vanishes."""
    support = sum(p.hi - p.lo for p in spectrum.pieces if not p.density.is_zero)
    return max(0.0, 1.0 - support)


def partition_measures(spectrum):
    """Exact measures of the sets {density = 0}, {density >= 1}, {0 < density < 1}."""
    mu1 = 1.0 - sum(p.hi - p.lo for p in spectrum.pieces)
    mu2 = 0.0
    mu3 = 0.0
    for p in spectrum.pieces:
        m1, m2, m3 = p.density.level_measures(p.lo, p.hi)
        mu1 += m1
        mu2 += m2
        mu3 += m3
    return HarmonicPartition(max(0.0, mu1), mu2, mu3)


def autocovariance(spectrum, m):
    """Fourier-Stieltjes coefficient: integral of exp(i 2 pi m lambda) dF."""
    return complex(autocovariances(spectrum, np.asarray([m]))[0])


def autocovariances(spectrum, ms):
    """Vectorized autocovariance over an integer lag array."""
    ms = np.asarray(ms)
    out = np.zeros(ms.shape, dtype=complex)
    for p in spectrum.pieces:
        out += p.density.fourier(ms, p.lo, p.hi)
    for loc, w in spectrum.point_masses:
        out += w * np.exp(2j * np.pi * ms * loc)
    return out


def toeplitz_covariance(spectrum, n):
    """Covariance matrix of n consecutive samples, entry (j, k) = autocov(j - k)."""
    if n < 1:
        raise ValueError("matrix order must be at least 1")
    r = autocovariances(spectrum, np.arange(n))
    entries = scipy.linalg.toeplitz(r, np.conj(r))
    return CovarianceMatrix(order=n, entries=entries)


def cumulative(spectrum, lam):
    """Right-continuous distribution function F(lam) with F(-1/2) = 0 for a.c. parts."""
    if not -0.5 <= lam <= 0.5:
        raise ValueError(f"lambda {lam} outside [-1/2, 1/2]")
    acc = 0.0
    for p in spectrum.pieces:
        if lam > p.lo:
            acc += p.density.mass(p.lo, min(lam, p.hi))
    acc += sum(w for loc, w in spectrum.point_masses if loc <= lam)
    return acc


def auxiliary_spectrum(spectrum, snr):
    """Non-normalized spectral distribution lambda + snr * F(lambda) of the
    Gaussian process whose covariance is I + snr * K."""
    if snr <= 0:
        raise ValueError("snr must be positive")

    def fv(lam):
        lam_arr = np.atleast_1d(np.asarray(lam, dtype=float))
        vals = np.array([l + snr * cumulative(spectrum, l) for l in lam_arr])
        return vals if np.asarray(lam).ndim else float(vals[0])

    return fv

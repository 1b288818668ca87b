"""Cavity eigenmode spectra and the velocity-resonance condition.

Two idealized geometries are supported, both for a massless scalar field
with Dirichlet walls:

* one-dimensional cavity of length L: Omega_n = n*pi*c/L, n = 1, 2, ...
* cubic cavity of edge L: Omega = pi*c/L * sqrt(nx^2+ny^2+nz^2), n_i >= 1

Degenerate frequencies are kept as distinct labeled modes (the response
formulas sum over mode labels, not over distinct frequencies). A spectrum
is immutable after construction and safe to share between sweep workers.

The resonance analysis asks which mode pairs satisfy
|Omega_mu +- Omega_nu - 2*Omega_1| <= tol, the condition for the
wall-velocity coupling to survive time averaging when the drive runs at
twice the fundamental.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from scipy.constants import c as C_LIGHT

from .errors import DomainError


@dataclass(frozen=True)
class Geometry:
    """Cavity geometry tag: kind in {'one_dimensional', 'cubic'} plus size L in meters."""

    kind: str
    length: float

    def __post_init__(self):
        if self.kind not in ("one_dimensional", "cubic"):
            raise DomainError(f"unknown geometry kind {self.kind!r}")
        if self.length <= 0:
            raise DomainError(f"cavity size must be positive, got {self.length}")

    @classmethod
    def one_dimensional(cls, length: float) -> "Geometry":
        return cls("one_dimensional", length)

    @classmethod
    def cubic(cls, length: float) -> "Geometry":
        return cls("cubic", length)


class CavitySpectrum:
    """Ordered eigenmode list: labels (int or (nx,ny,nz)) with frequencies in rad/s.

    Modes are sorted by frequency, ties broken by lexicographic label, so
    repeated construction is reproducible byte-for-byte in CSV output.
    """

    def __init__(self, geometry: Geometry, labels: Sequence, frequencies: Sequence[float]):
        if len(labels) != len(frequencies):
            raise DomainError("labels and frequencies must have equal length")
        if len(labels) == 0:
            raise DomainError("spectrum must contain at least one mode")
        freqs = np.asarray(frequencies, dtype=float)
        if not np.all(freqs > 0) or not np.all(np.isfinite(freqs)):
            raise DomainError("mode frequencies must be positive and finite")
        order = sorted(range(len(labels)), key=lambda i: (freqs[i], _label_key(labels[i])))
        self.geometry = geometry
        self.labels = tuple(labels[i] for i in order)
        self.frequencies = freqs[order]
        self.frequencies.setflags(write=False)
        if len(set(self.labels)) != len(self.labels):
            raise DomainError("mode labels must be unique")

    @property
    def modes(self):
        """Ordered list of (label, frequency) pairs."""
        return list(zip(self.labels, self.frequencies))

    @property
    def fundamental(self) -> float:
        """Lowest eigenfrequency Omega_1."""
        return float(self.frequencies[0])

    def __len__(self):
        return len(self.labels)

    def restrict(self, n_modes: int) -> "CavitySpectrum":
        """Keep the n_modes lowest modes (for truncated simulations)."""
        if not (1 <= n_modes <= len(self)):
            raise DomainError(f"cannot restrict to {n_modes} of {len(self)} modes")
        return CavitySpectrum(self.geometry, self.labels[:n_modes],
                              self.frequencies[:n_modes])

    def __repr__(self):
        return (f"CavitySpectrum({self.geometry.kind}, L={self.geometry.length} m, "
                f"{len(self)} modes, Omega_1={self.fundamental:.6g} rad/s)")


def _label_key(label):
    # int labels and tuple labels both reduce to tuples for tie-breaks
    return tuple(label) if isinstance(label, (tuple, list)) else (label,)


def build_spectrum(geometry: Geometry, max_index: int) -> CavitySpectrum:
    """Enumerate eigenmodes up to per-axis index max_index.

    1D: modes n = 1..max_index. Cubic: all triples 1 <= n_i <= max_index,
    kept as distinct labels even where frequencies coincide.
    """
    if max_index < 1:
        raise DomainError(f"max_index must be >= 1, got {max_index}")
    scale = math.pi * C_LIGHT / geometry.length
    if geometry.kind == "one_dimensional":
        labels = list(range(1, max_index + 1))
        freqs = [n * scale for n in labels]
    else:
        labels = list(itertools.product(range(1, max_index + 1), repeat=3))
        freqs = [scale * math.sqrt(nx * nx + ny * ny + nz * nz) for nx, ny, nz in labels]
    return CavitySpectrum(geometry, labels, freqs)


@dataclass(frozen=True)
class ResonancePair:
    """Mode pair satisfying |Omega_mu +- Omega_nu - 2*Omega_1| <= tolerance.

    ``sign`` is 'plus' or 'minus'; for the minus branch mu is the
    higher-frequency partner so the residual is Omega_mu - Omega_nu - 2*Omega_1.
    """

    mu: object
    nu: object
    sign: str
    residual: float


def find_resonance_pairs(spectrum: CavitySpectrum, tolerance: float):
    """All unordered pairs resonant with twice the fundamental.

    Plus branch (Omega_mu + Omega_nu = 2*Omega_1) permits mu = nu; the minus
    branch (|Omega_mu - Omega_nu| = 2*Omega_1) requires distinct modes.
    tolerance is absolute, in rad/s; tolerance = inf returns every pair.
    """
    if tolerance < 0:
        raise DomainError(f"tolerance must be >= 0, got {tolerance}")
    freqs = spectrum.frequencies
    labels = spectrum.labels
    target = 2.0 * spectrum.fundamental
    n = len(freqs)
    pairs = []
    # plus branch, i <= j
    res_plus = freqs[:, None] + freqs[None, :] - target
    iu, ju = np.triu_indices(n)
    keep = np.abs(res_plus[iu, ju]) <= tolerance
    for i, j in zip(iu[keep], ju[keep]):
        pairs.append(ResonancePair(labels[i], labels[j], "plus", float(res_plus[i, j])))
    # minus branch, strictly distinct modes, higher frequency first
    res_minus = freqs[:, None] - freqs[None, :] - target  # row = mu (higher)
    iu, ju = np.triu_indices(n, k=1)
    keep = np.abs(res_minus[ju, iu]) <= tolerance  # freqs[j] >= freqs[i] for j > i
    for i, j in zip(iu[keep], ju[keep]):
        pairs.append(ResonancePair(labels[j], labels[i], "minus", float(res_minus[j, i])))
    return pairs

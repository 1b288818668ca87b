"""Bose-Einstein statistics of the initial canonical ensemble.

Occupations, the pair-creation enhancement factor 1 + 2n, and the exact
photon-number variance of a thermal oscillator. All frequencies are angular
(rad/s) and temperatures enter through :class:`dcesim.units.Temperature`,
so beta*omega is dimensionless. T = 0 is an exact branch, never a limit of
the exponential formula: the vacuum path returns exact zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cavity import CavitySpectrum
from .errors import DomainError
from .units import Temperature


def bose_occupation(omega: float, temperature: Temperature) -> float:
    """Mean thermal occupation 1/(exp(beta*omega) - 1).

    Evaluated as exp(-x)/(1 - exp(-x)) with the denominator through
    expm1, so large beta*omega underflows gracefully to 0 instead of
    overflowing and small beta*omega keeps full precision; exactly 0.0
    at T = 0.
    """
    omega = float(omega)
    if omega <= 0 or not math.isfinite(omega):
        raise DomainError(f"mode frequency must be positive and finite, got {omega}")
    if temperature.is_zero:
        return 0.0
    x = temperature.beta * omega
    return math.exp(-x) / -math.expm1(-x)


def enhancement_factor(omega: float, temperature: Temperature) -> float:
    """Thermal pair-creation enhancement 1 + 2n = coth(beta*omega/2)."""
    return 1.0 + 2.0 * bose_occupation(omega, temperature)


def thermal_variance(omega: float, temperature: Temperature) -> float:
    """Photon-number standard deviation sqrt(n(n+1)) of the thermal state.

    Exact geometric-law result; approaches n itself for n >> 1, which is
    the uncertainty floor against which created photons must be detected.
    """
    n = bose_occupation(omega, temperature)
    return math.sqrt(n * (n + 1.0))


@dataclass(frozen=True)
class ThermalEnsemble:
    """Per-mode thermal occupations of a cavity spectrum at temperature T."""

    temperature: Temperature
    spectrum: CavitySpectrum
    occupations: np.ndarray = field(init=False)

    def __post_init__(self):
        occ = np.array([bose_occupation(w, self.temperature)
                        for w in self.spectrum.frequencies])
        occ.setflags(write=False)
        object.__setattr__(self, "occupations", occ)

    @property
    def enhancements(self) -> np.ndarray:
        return 1.0 + 2.0 * self.occupations

    @property
    def variances(self) -> np.ndarray:
        return np.sqrt(self.occupations * (self.occupations + 1.0))

    def __len__(self):
        return len(self.spectrum)

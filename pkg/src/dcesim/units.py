"""Unit conversions between SI inputs and the internal natural-unit system.

Everything inside the package lives in units with hbar = c = k_B = 1, with
angular frequency (rad/s) as the one canonical scale: mode frequencies,
temperatures and energies are all carried as rad/s. The only place SI
quantities (Kelvin, meters) appear is at the boundary, through the helpers
in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.constants import c as C_LIGHT
from scipy.constants import hbar as HBAR
from scipy.constants import k as K_BOLTZMANN

from .errors import DomainError

# Estimated upper bound on the dimensionless amplitude of a resonant wall
# vibration; taken as an input constant, not derived here.
EPSILON_MAX = 1e-8


def kelvin_to_angular(kelvin: float) -> float:
    """Temperature in K -> equivalent angular frequency k_B*T/hbar in rad/s.

    Exact 0.0 for T = 0 so the vacuum branch stays bit-exact.
    """
    if kelvin < 0:
        raise DomainError(f"temperature must be >= 0 K, got {kelvin}")
    if kelvin == 0:
        return 0.0
    return K_BOLTZMANN * kelvin / HBAR


def angular_to_kelvin(omega: float) -> float:
    """Inverse of :func:`kelvin_to_angular`."""
    if omega < 0:
        raise DomainError(f"angular temperature must be >= 0 rad/s, got {omega}")
    if omega == 0:
        return 0.0
    return HBAR * omega / K_BOLTZMANN


def length_to_fundamental(length: float, geometry: str) -> float:
    """Lowest eigenmode angular frequency of a cavity of size ``length`` (m).

    'cubic' gives sqrt(3)*pi*c/L, 'one_dimensional' gives pi*c/L.
    """
    if length <= 0:
        raise DomainError(f"cavity size must be positive, got {length}")
    if geometry == "cubic":
        return math.sqrt(3.0) * math.pi * C_LIGHT / length
    if geometry in ("one_dimensional", "1d"):
        return math.pi * C_LIGHT / length
    raise DomainError(f"unknown geometry {geometry!r}")


@dataclass(frozen=True)
class Temperature:
    """Temperature with its natural-unit companions precomputed.

    beta is expressed against rad/s frequencies (beta*omega is dimensionless)
    and is +inf at T = 0; nothing downstream ever evaluates exp(beta*omega)
    in that branch, the zero-temperature limit is always taken exactly.
    """

    kelvin: float
    natural: float = field(init=False)   # k_B T / hbar, rad/s
    beta: float = field(init=False)      # 1 / natural, s/rad

    def __post_init__(self):
        if self.kelvin < 0:
            raise DomainError(f"temperature must be >= 0 K, got {self.kelvin}")
        natural = kelvin_to_angular(self.kelvin)
        object.__setattr__(self, "natural", natural)
        object.__setattr__(self, "beta", math.inf if natural == 0 else 1.0 / natural)

    @classmethod
    def from_kelvin(cls, kelvin: float) -> "Temperature":
        return cls(kelvin)

    @classmethod
    def from_natural(cls, omega: float) -> "Temperature":
        """Build from a temperature already expressed in rad/s."""
        return cls(angular_to_kelvin(omega))

    @property
    def is_zero(self) -> bool:
        return self.natural == 0.0

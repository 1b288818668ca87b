"""Radiated energy of a single moving mirror in 1+1 dimensions.

The total energy radiated by a perfectly reflecting point mirror on a
worldline eta(t) splits into a vacuum piece driven by the acceleration and
a thermal piece driven by the velocity:

    E = (1/12 pi) int dt (d2_eta/dt2)^2  +  (pi/3) T^2 int dt (d_eta/dt)^2

in natural units: eta is carried as light-time (meters / c, i.e. seconds),
so velocities are fractions of c, and T enters as an angular frequency.
The vacuum term is temperature independent and the thermal term scales
exactly as T^2.

Trajectories must start and end at rest (the interaction is switched on
and off asymptotically); sinusoids are therefore cosine-phased and
restricted to integer period counts, and Gaussian-windowed pulses carry
enough window margin that the residual edge velocity is below 1e-9 of the
peak. Both integrals go through composite Simpson; analytic trajectories
supply exact derivatives, sampled ones use 4th-order finite differences
(one-sided at the edges, matching Simpson's order).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import DomainError
from .units import Temperature

_REST_TOL = 1e-9
# advisory only: the perfect-mirror result assumes non-relativistic motion;
# the 0.1 c threshold is an arbitrary, documented convention
_VELOCITY_ADVISORY = 0.1


class SinusoidTrajectory:
    """eta(t) = amplitude * cos(omega t) over an integer number of periods.

    The cosine phase puts the mirror at rest at both endpoints. amplitude
    is in natural length (seconds), omega in rad/s.
    """

    def __init__(self, amplitude: float, omega: float, periods: int,
                 samples_per_period: int = 2048):
        if amplitude < 0 or omega <= 0:
            raise DomainError("need amplitude >= 0 and omega > 0")
        if periods < 1 or periods != int(periods):
            raise DomainError(f"periods must be a positive integer, got {periods}")
        if samples_per_period < 8:
            raise DomainError("samples_per_period too small for the quadrature")
        self.amplitude = amplitude
        self.omega = omega
        self.periods = int(periods)
        self.samples_per_period = int(samples_per_period)
        self.duration = 2.0 * math.pi * self.periods / omega

    def sample(self, refine: int = 1):
        n = self.samples_per_period * self.periods * refine
        n += n % 2  # even interval count for Simpson
        t = np.linspace(0.0, self.duration, n + 1)
        velocity = -self.amplitude * self.omega * np.sin(self.omega * t)
        acceleration = -self.amplitude * self.omega ** 2 * np.cos(self.omega * t)
        return t, velocity, acceleration


class GaussianSinusoidTrajectory:
    """Sinusoid under a Gaussian envelope exp(-(t-t0)^2 / (2 tau_env^2)).

    The grid spans n_sigma envelope widths on each side of the center; the
    default n_sigma = 7 leaves window mass ~2e-11, comfortably below the
    endpoint-rest tolerance.
    """

    def __init__(self, amplitude: float, omega: float, tau_env: float,
                 n_sigma: float = 7.0, samples_per_period: int = 2048):
        if amplitude < 0 or omega <= 0 or tau_env <= 0:
            raise DomainError("need amplitude >= 0, omega > 0, tau_env > 0")
        self.amplitude = amplitude
        self.omega = omega
        self.tau_env = tau_env
        self.n_sigma = n_sigma
        self.samples_per_period = int(samples_per_period)
        self.duration = 2.0 * n_sigma * tau_env

    def sample(self, refine: int = 1):
        t0 = 0.5 * self.duration
        n = max(int(self.samples_per_period * self.duration * self.omega / (2 * math.pi)),
                512) * refine
        n += n % 2
        t = np.linspace(0.0, self.duration, n + 1)
        s = t - t0
        env = np.exp(-0.5 * (s / self.tau_env) ** 2)
        denv = -(s / self.tau_env ** 2) * env
        d2env = ((s / self.tau_env ** 2) ** 2 - 1.0 / self.tau_env ** 2) * env
        sin = np.sin(self.omega * s)
        cos = np.cos(self.omega * s)
        a = self.amplitude
        w = self.omega
        velocity = a * (denv * sin + env * w * cos)
        acceleration = a * (d2env * sin + 2.0 * denv * w * cos - env * w * w * sin)
        return t, velocity, acceleration


class SampledTrajectory:
    """Mirror worldline given on a uniform time grid (positions in seconds)."""

    def __init__(self, times, positions):
        t = np.asarray(times, dtype=float)
        x = np.asarray(positions, dtype=float)
        if t.ndim != 1 or t.shape != x.shape:
            raise DomainError("times and positions must be equal-length 1D arrays")
        if len(t) < 5:
            raise DomainError(f"need at least 5 samples, got {len(t)}")
        dt = np.diff(t)
        h = dt[0]
        if h <= 0 or np.abs(dt - h).max() > 1e-9 * h:
            raise DomainError("sample grid must be uniform and increasing")
        self.times = t
        self.positions = x
        self.h = float(h)
        self.duration = float(t[-1] - t[0])

    def sample(self, refine: int = 1):
        if refine != 1:
            raise DomainError("a sampled trajectory cannot be refined")
        if np.ptp(self.positions) == 0.0:
            zero = np.zeros_like(self.positions)
            return self.times, zero, zero
        v = _derivative_o4(self.positions, self.h)
        a = _derivative_o4(v, self.h)
        return self.times, v, a


def _derivative_o4(f: np.ndarray, h: float) -> np.ndarray:
    """4th-order central differences, one-sided 5-point stencils at the edges."""
    d = np.empty_like(f)
    d[2:-2] = (-f[4:] + 8.0 * f[3:-1] - 8.0 * f[1:-3] + f[:-4]) / (12.0 * h)
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h)
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h)
    d[-2] = (3.0 * f[-1] + 10.0 * f[-2] - 18.0 * f[-3] + 6.0 * f[-4] - f[-5]) / (12.0 * h)
    d[-1] = (25.0 * f[-1] - 48.0 * f[-2] + 36.0 * f[-3] - 16.0 * f[-4] + 3.0 * f[-5]) / (12.0 * h)
    return d


@dataclass(frozen=True)
class MirrorEnergyResult:
    """Vacuum/thermal split of the radiated energy (natural units, rad/s)."""

    vacuum: float
    thermal: float
    total: float
    ratio: float      # thermal/vacuum; nan when the vacuum term vanishes
    method: str


def radiated_energy(trajectory, temperature: Temperature,
                    refine: int = 1) -> MirrorEnergyResult:
    """Total radiated energy of a mirror worldline at temperature T.

    Checks that the trajectory starts and ends at rest (velocity residual
    <= 1e-9 of peak) and warns once if the peak speed exceeds 0.1 c, where
    the perfect-mirror formula starts to lose validity.
    """
    t, v, a = trajectory.sample(refine=refine)
    vpeak = float(np.abs(v).max())
    if vpeak > 0.0:
        rest = max(abs(float(v[0])), abs(float(v[-1])))
        if rest > _REST_TOL * vpeak:
            raise DomainError(
                f"trajectory must start and end at rest: edge velocity "
                f"{rest:.3e} vs peak {vpeak:.3e}")
    if vpeak > _VELOCITY_ADVISORY:
        warnings.warn(
            f"peak mirror speed {vpeak:.3g} c exceeds {_VELOCITY_ADVISORY} c; "
            "the non-relativistic mirror formula is losing validity")
    h = float(t[1] - t[0])  # grids are validated uniform at construction
    vacuum = float(simpson(a * a, dx=h)) / (12.0 * math.pi)
    if temperature.is_zero:
        thermal = 0.0
    else:
        thermal = (math.pi / 3.0) * temperature.natural ** 2 * float(simpson(v * v, dx=h))
    total = vacuum + thermal
    ratio = thermal / vacuum if vacuum > 0.0 else math.nan
    method = ("simpson+finite-differences" if isinstance(trajectory, SampledTrajectory)
              else "simpson+analytic-derivatives")
    return MirrorEnergyResult(vacuum=vacuum, thermal=thermal, total=total,
                              ratio=ratio, method=method)


def thermal_to_vacuum_ratio(trajectory, temperature: Temperature,
                            refine: int = 1) -> float:
    """thermal/vacuum energy ratio; requires a nonvanishing vacuum term."""
    result = radiated_energy(trajectory, temperature, refine=refine)
    if result.vacuum <= 0.0:
        raise DomainError("thermal/vacuum ratio undefined: vacuum term vanishes")
    return result.thermal / result.vacuum

"""Closed-form photon-creation results and quadratic-response bookkeeping.

Two independent routes to the created photon number live here:

* :func:`quadratic_response` - second order in the integrated interaction,
  valid for any (squeeze, hop) matrix pair, at any temperature;
* :func:`rwa_photon_number` - the non-perturbative rotating-wave result for
  a resonantly driven lowest mode, sinh^2(eps*Omega_1*T/2) * (1 + 2 n_1),
  exponential in the drive duration.

:func:`small_r_consistency` pins the two against each other where both are
valid (small squeezing), which is the package's main closed-form cross-check.

Sign conventions: the hop term only redistributes quanta (its per-mode
contributions sum to zero), the squeeze term is the sole source of total
particle-number growth, and the scalar phase constant never affects any
observable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .thermal import ThermalEnsemble, bose_occupation
from .units import Temperature

_SYMMETRY_TOL = 1e-10


@dataclass(frozen=True)
class PerturbationMatrices:
    """(squeeze, hop, phase) decomposition of the time-integrated interaction.

    ``squeeze`` is complex symmetric (pair creation a+a+ / annihilation aa),
    ``hop`` is Hermitian (a+a redistribution), ``phase`` is the scalar that
    only contributes an overall phase and drops out of every observable.
    """

    squeeze: np.ndarray
    hop: np.ndarray
    phase: complex = 0.0

    def __post_init__(self):
        s = np.asarray(self.squeeze, dtype=complex)
        u = np.asarray(self.hop, dtype=complex)
        if s.ndim != 2 or s.shape[0] != s.shape[1] or s.shape != u.shape:
            raise DomainError(f"need square matrices of equal size, got {s.shape}, {u.shape}")
        sym = np.abs(s - s.T).max()
        if sym > _SYMMETRY_TOL * max(1.0, np.abs(s).max()):
            raise DomainError(f"squeeze matrix symmetry defect {sym:.3e}")
        herm = np.abs(u - u.conj().T).max()
        if herm > _SYMMETRY_TOL * max(1.0, np.abs(u).max()):
            raise DomainError(f"hop matrix Hermiticity defect {herm:.3e}")
        s.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "squeeze", s)
        object.__setattr__(self, "hop", u)

    @property
    def n_modes(self) -> int:
        return self.squeeze.shape[0]


@dataclass(frozen=True)
class ResponseResult:
    """Per-mode photon-number changes, split by channel."""

    squeeze_part: np.ndarray   # >= 0 each
    hop_part: np.ndarray       # sums to ~0
    delta_n: np.ndarray        # squeeze_part + hop_part
    total_delta_n: float
    total_delta_energy: float  # sum Omega_mu * delta_n_mu, rad/s


def _occupations_and_frequencies(ensemble):
    """Accept a ThermalEnsemble or a bare occupation vector (tests, sweeps)."""
    if isinstance(ensemble, ThermalEnsemble):
        return np.asarray(ensemble.occupations, float), ensemble.spectrum.frequencies
    n = np.asarray(ensemble, dtype=float)
    if n.ndim != 1 or np.any(n < 0):
        raise DomainError("occupations must be a 1D vector of nonnegative numbers")
    return n, None


def quadratic_response(matrices: PerturbationMatrices, ensemble) -> ResponseResult:
    """Second-order photon-number change per mode.

    delta_n_mu = sum_rho |squeeze_{mu rho}|^2 (1 + n_rho + n_mu)
               + sum_rho |hop_{mu rho}|^2 (n_rho - n_mu)

    with the rho-sum explicit and including rho = mu (the diagonal hop term
    vanishes identically there). The phase scalar is ignored by
    construction. ``ensemble`` is a ThermalEnsemble, or any occupation
    vector (the energy total is then NaN for lack of frequencies).
    """
    n, freqs = _occupations_and_frequencies(ensemble)
    if matrices.n_modes != len(n):
        raise DomainError(
            f"{matrices.n_modes} matrix modes vs {len(n)} ensemble modes")
    s2 = np.abs(matrices.squeeze) ** 2
    u2 = np.abs(matrices.hop) ** 2
    squeeze_part = s2 @ (1.0 + n) + s2.sum(axis=1) * n
    hop_part = u2 @ n - u2.sum(axis=1) * n
    delta_n = squeeze_part + hop_part
    return ResponseResult(
        squeeze_part=squeeze_part,
        hop_part=hop_part,
        delta_n=delta_n,
        total_delta_n=float(delta_n.sum()),
        total_delta_energy=(float(freqs @ delta_n) if freqs is not None else math.nan),
    )


@dataclass(frozen=True)
class RwaPhotonNumber:
    """Rotating-wave closed form for the resonantly driven lowest mode."""

    squeeze_parameter: float | np.ndarray   # eps * omega * duration / 2
    thermal_floor: float                    # n_0 before the drive
    vacuum_delta_n: float | np.ndarray      # sinh^2 of the squeeze parameter
    enhancement: float                      # 1 + 2 n_0
    delta_n: float | np.ndarray             # vacuum_delta_n * enhancement
    total: float | np.ndarray               # n_0 + delta_n


def rwa_photon_number(epsilon: float, omega: float, duration,
                      temperature: Temperature) -> RwaPhotonNumber:
    """Photon number after driving the lowest mode resonantly for ``duration``.

    ``duration`` may be a scalar or an array (for sweep output). At T = 0
    the enhancement is exactly 1.0 and every field bit-matches the vacuum
    formula.
    """
    if epsilon < 0:
        raise DomainError(f"drive amplitude must be >= 0, got {epsilon}")
    if omega <= 0:
        raise DomainError(f"drive frequency must be positive, got {omega}")
    duration = np.asarray(duration, dtype=float)
    if np.any(duration < 0):
        raise DomainError("duration must be >= 0")
    if duration.ndim == 0:
        duration = float(duration)
    r = 0.5 * epsilon * omega * duration
    n0 = bose_occupation(omega, temperature)
    vacuum = np.sinh(r) ** 2
    enhancement = 1.0 + 2.0 * n0
    delta_n = vacuum * enhancement
    return RwaPhotonNumber(
        squeeze_parameter=r,
        thermal_floor=n0,
        vacuum_delta_n=vacuum,
        enhancement=enhancement,
        delta_n=delta_n,
        total=n0 + delta_n,
    )


@dataclass(frozen=True)
class SmallSqueezingReport:
    """Comparison of the quadratic and rotating-wave routes at small r."""

    r: float
    quadratic_delta_n: float
    rwa_delta_n: float
    relative_deviation: float
    bound: float
    ok: bool


def small_r_consistency(matrices: PerturbationMatrices,
                        ensemble) -> SmallSqueezingReport:
    """Check quadratic response against the rotating-wave closed form.

    r is read off as |squeeze_11|; both routes share the enhancement factor,
    so their relative gap is the sinh^2(r) vs r^2 series difference, r^2/3
    to leading order. Deviations beyond 2 r^2 raise (something other than
    the controlled series truncation went wrong).
    """
    r = float(np.abs(matrices.squeeze[0, 0]))
    if r > 0.1:
        raise DomainError(f"small-squeezing check requires |squeeze_11| <= 0.1, got {r}")
    quad = float(quadratic_response(matrices, ensemble).delta_n[0])
    n1 = float(_occupations_and_frequencies(ensemble)[0][0])
    rwa = float(np.sinh(r) ** 2 * (1.0 + 2.0 * n1))
    if rwa == 0.0:
        deviation = abs(quad)
    else:
        deviation = abs(quad - rwa) / rwa
    bound = 2.0 * r * r
    report = SmallSqueezingReport(
        r=r, quadratic_delta_n=quad, rwa_delta_n=rwa,
        relative_deviation=deviation, bound=bound, ok=deviation <= bound)
    if not report.ok:
        raise ConsistencyError(
            f"quadratic vs rotating-wave deviation {deviation:.3e} exceeds "
            f"bound {bound:.3e} at r={r:.3e}")
    return report

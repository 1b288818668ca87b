"""Time-dependent drives and exact density-matrix evolution.

The interaction picture is used throughout: ladder operators carry their
free phases exp(-i Omega_mu t), so the interaction Hamiltonian

    H_I(t) = sum_mu  q_mu(t)^2 * d_omega_sq_mu(t) / 2
           + sum_{mu,nu} q_mu(t) p_nu(t) * coupling_{mu nu}(t)

contains a frequency-modulation (squeezing) channel per mode plus an
antisymmetric wall-velocity (hopping) channel between modes. The standard
drive modulates the lowest mode as d_omega_sq_1(t) = 2 eps Omega_1^2
sin(2 w t) inside a hard window [0, duration]; with w = Omega_1 its time
average reproduces the effective pair-creation generator with squeeze
parameter r = eps * Omega_1 * duration / 2.

Evolution integrates i d(rho)/dt = [H_I(t), rho] with a classic fixed-step
4th-order Runge-Kutta scheme (determinism over adaptivity; step sizes are
validated by step halving, see :func:`step_halving_check`). The integrated
matrices of the quadratic form are extracted on the same uniform grid with
composite Simpson, so one grid drives both convergence knobs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.constants import c as C_LIGHT
from scipy.integrate import simpson

from .cavity import CavitySpectrum, Geometry, build_spectrum
from .errors import DomainError, NumericalToleranceError, TruncationWarning
from .fock import FockSpace, check_density_matrix, ladder_ops, von_neumann_entropy
from .response import PerturbationMatrices
from .units import EPSILON_MAX

_HERMITICITY_TOL = 1e-12
_ANTISYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class DriveProfile:
    """Harmonic boundary drive: amplitude eps, half-frequency w, duration.

    The time dependence is sin(2 w t) inside a hard window [0, duration].
    The asymptotic-regime markers (eps << 1, w*duration >> 1,
    eps*w*duration = O(1), eps below the physical amplitude bound) are
    computed and reported, never enforced.
    """

    epsilon: float
    omega: float
    duration: float

    def __post_init__(self):
        if self.epsilon < 0:
            raise DomainError(f"drive amplitude must be >= 0, got {self.epsilon}")
        if self.omega <= 0:
            raise DomainError(f"drive frequency must be positive, got {self.omega}")
        if self.duration < 0:
            raise DomainError(f"duration must be >= 0, got {self.duration}")

    def window(self, t):
        """Hard on/off envelope on [0, duration]."""
        t = np.asarray(t, dtype=float)
        w = ((t >= 0.0) & (t <= self.duration)).astype(float)
        return w if w.ndim else float(w)

    def regime_report(self) -> dict:
        """Dimensionless markers of the rotating-wave regime.

        Threshold choices (0.01 for 'small', 10 for 'long', one decade
        around 1 for 'order one') are reporting conventions only.
        """
        omega_t = self.omega * self.duration
        eps_omega_t = self.epsilon * omega_t
        return {
            "epsilon": self.epsilon,
            "omega_T": omega_t,
            "epsilon_omega_T": eps_omega_t,
            "squeeze_parameter": 0.5 * eps_omega_t,
            "small_amplitude": self.epsilon < 1e-2,
            "long_drive": omega_t > 10.0,
            "order_one_squeezing": 0.1 <= eps_omega_t <= 10.0,
            "within_amplitude_bound": self.epsilon <= EPSILON_MAX,
        }


@dataclass(frozen=True)
class InteractionSpec:
    """Spectrum plus the time functions defining H_I(t).

    delta_omega_sq holds one vectorized callable per mode (None = identically
    zero) giving the eigenfrequency-squared deviation of that mode;
    coupling, if present, maps t to the full antisymmetric K x K velocity
    matrix. Antisymmetry is checked wherever the matrix is evaluated.
    """

    spectrum: CavitySpectrum
    delta_omega_sq: tuple
    coupling: Optional[Callable] = None
    drive: Optional[DriveProfile] = None

    def __post_init__(self):
        if len(self.delta_omega_sq) != len(self.spectrum):
            raise DomainError("one delta_omega_sq entry per spectrum mode required")

    @property
    def n_modes(self) -> int:
        return len(self.spectrum)

    def delta_omega_sq_at(self, t):
        """Per-mode frequency-squared deviations at time(s) t."""
        t = np.asarray(t, dtype=float)
        out = np.zeros((self.n_modes,) + t.shape)
        for mu, f in enumerate(self.delta_omega_sq):
            if f is not None:
                out[mu] = f(t)
        return out

    def coupling_at(self, t: float) -> np.ndarray:
        """Velocity matrix at a single time, antisymmetry-checked."""
        k = self.n_modes
        if self.coupling is None:
            return np.zeros((k, k))
        m = np.asarray(self.coupling(t), dtype=float)
        if m.shape != (k, k):
            raise DomainError(f"coupling must return a {k}x{k} matrix, got {m.shape}")
        defect = np.abs(m + m.T).max()
        if defect > _ANTISYMMETRY_TOL * max(1.0, np.abs(m).max()):
            raise DomainError(f"coupling matrix antisymmetry defect {defect:.3e} at t={t}")
        return m


def standard_drive(epsilon: float, omega: float, duration: float,
                   n_modes: int = 1,
                   spectrum: Optional[CavitySpectrum] = None) -> InteractionSpec:
    """Resonant harmonic modulation of the lowest cavity mode.

    delta_omega_sq_1(t) = 2 eps Omega_1^2 sin(2 w t) on [0, duration],
    zero on the other modes, no velocity coupling. The normalization makes
    the time-averaged pair-creation generator carry the squeeze parameter
    r = eps * Omega_1 * duration / 2 when w = Omega_1.

    By default the spectrum is the 1D ladder whose fundamental equals the
    drive half-frequency (L = pi c / w), i.e. the resonant case; pass an
    explicit spectrum to detune.
    """
    drive = DriveProfile(epsilon, omega, duration)
    if spectrum is None:
        spectrum = build_spectrum(Geometry.one_dimensional(math.pi * C_LIGHT / omega),
                                  max_index=max(n_modes, 1))
    spectrum = spectrum.restrict(n_modes)
    omega1 = spectrum.fundamental
    amp = 2.0 * epsilon * omega1 * omega1

    def lowest_mode(t, _amp=amp, _om=omega, _drive=drive):
        return _amp * np.sin(2.0 * _om * np.asarray(t, dtype=float)) * _drive.window(t)

    funcs = [None] * n_modes
    if epsilon > 0 and duration > 0:
        funcs[0] = lowest_mode
    return InteractionSpec(spectrum=spectrum, delta_omega_sq=tuple(funcs),
                           coupling=None, drive=drive)


def interaction_hamiltonian(spec: InteractionSpec, space: FockSpace, t: float) -> np.ndarray:
    """H_I(t) as a dense matrix, built from interaction-picture quadratures.

    This is the definitional (slow) construction; evolve() uses an
    algebraically identical precomputed form. The result must be Hermitian
    to 1e-12 of its scale, else an internal-consistency error is raised.
    """
    if space.n_modes != spec.n_modes:
        raise DomainError(f"{space.n_modes} space modes vs {spec.n_modes} spec modes")
    freqs = spec.spectrum.frequencies
    dim = space.dimension
    h = np.zeros((dim, dim), dtype=complex)
    dosq = spec.delta_omega_sq_at(t)
    quads = {}

    def q_of(mu):
        if mu not in quads:
            a, ad = ladder_ops(space, mu)
            w = freqs[mu]
            ph = np.exp(-1j * w * t)
            q = (a * ph + ad * np.conj(ph)) / math.sqrt(2.0 * w)
            p = 1j * math.sqrt(w / 2.0) * (ad * np.conj(ph) - a * ph)
            quads[mu] = (q, p)
        return quads[mu]

    for mu in range(spec.n_modes):
        if dosq[mu] != 0.0:
            q, _ = q_of(mu)
            h += 0.5 * dosq[mu] * (q @ q)
    if spec.coupling is not None:
        m = spec.coupling_at(t)
        for mu in range(spec.n_modes):
            for nu in range(spec.n_modes):
                if mu != nu and m[mu, nu] != 0.0:
                    q, _ = q_of(mu)
                    _, p = q_of(nu)
                    h += m[mu, nu] * (q @ p)
    defect = np.abs(h - h.conj().T).max()
    if defect > _HERMITICITY_TOL * max(1.0, np.abs(h).max()):
        raise NumericalToleranceError(
            f"interaction Hamiltonian Hermiticity defect {defect:.3e} at t={t}")
    return h


def _hamiltonian_assembler(spec: InteractionSpec, space: FockSpace):
    """Precompute the normal-ordered constituents of H_I(t).

    Returns assemble(t, out) writing H_I(t) into ``out``. Expanding the
    quadratures gives, per driven mode,
    f(t)/(4 Omega) [a^2 e^{-2i Omega t} + a+^2 e^{+2i Omega t} + a a+ + a+ a],
    and per ordered mode pair the four ladder bilinears of q_mu p_nu with
    phases at Omega_nu -+ Omega_mu. Assembly is then a handful of scalar x
    matrix updates per call instead of repeated operator products. The
    mixed term is kept as the literal product a a+ + a+ a (not 2 a+a + 1):
    on the truncated space the two differ in the top-level corner, and the
    product form agrees exactly with the quadrature construction.
    """
    freqs = spec.spectrum.frequencies
    mode_terms = []      # (f_mu, omega_mu, A2, A2dag, D)
    ladders = [ladder_ops(space, mu) for mu in range(spec.n_modes)]
    for mu, f in enumerate(spec.delta_omega_sq):
        if f is None:
            continue
        a, ad = ladders[mu]
        a2 = a @ a
        d = a @ ad + ad @ a
        mode_terms.append((f, float(freqs[mu]), a2, a2.conj().T, d))
    pair_ops = None
    if spec.coupling is not None:
        pair_ops = {}
        for mu in range(spec.n_modes):
            for nu in range(spec.n_modes):
                if mu == nu:
                    continue
                a_mu, ad_mu = ladders[mu]
                a_nu, ad_nu = ladders[nu]
                pair_ops[(mu, nu)] = (a_mu @ ad_nu, a_mu @ a_nu,
                                      ad_mu @ ad_nu, ad_mu @ a_nu)

    def assemble(t: float, out: np.ndarray) -> np.ndarray:
        out[:] = 0.0
        for f, w, a2, a2d, d in mode_terms:
            fv = float(f(t))
            if fv == 0.0:
                continue
            c = fv / (4.0 * w)
            ph = complex(np.exp(-2j * w * t))
            out += (c * ph) * a2
            out += (c * np.conj(ph)) * a2d
            out += c * d
        if pair_ops is not None:
            m = spec.coupling_at(t)
            for (mu, nu), (g1, g2, g3, g4) in pair_ops.items():
                if m[mu, nu] == 0.0:
                    continue
                wmu, wnu = freqs[mu], freqs[nu]
                g = m[mu, nu] * math.sqrt(wnu / (4.0 * wmu))
                e_minus = complex(np.exp(1j * (wnu - wmu) * t))
                e_plus = complex(np.exp(1j * (wmu + wnu) * t))
                out += (1j * g * e_minus) * g1
                out += (-1j * g * np.conj(e_plus)) * g2
                out += (1j * g * e_plus) * g3
                out += (-1j * g * np.conj(e_minus)) * g4
        return out

    return assemble


def time_grid(duration: float, n_steps: int) -> np.ndarray:
    """Uniform grid 0..duration with n_steps intervals."""
    if duration < 0 or n_steps < 0:
        raise DomainError("duration and n_steps must be >= 0")
    return np.linspace(0.0, duration, n_steps + 1)


def _check_uniform(t: np.ndarray) -> float:
    t = np.asarray(t, dtype=float)
    if t.ndim != 1 or len(t) < 1:
        raise DomainError("time grid must be a 1D array with at least one point")
    if len(t) == 1:
        return 0.0
    dt = np.diff(t)
    h = float(dt[0])
    if h <= 0 or np.abs(dt - h).max() > 1e-9 * abs(h):
        raise DomainError("time grid must be uniform and increasing")
    return h


def extract_perturbation_matrices(spec: InteractionSpec,
                                  t: np.ndarray) -> PerturbationMatrices:
    """Composite-Simpson integrals of the normal-ordered coefficients.

    squeeze_{mu nu} = int dt c_S(t) e^{i(Omega_mu + Omega_nu) t},
    hop_{mu nu}     = int dt c_U(t) e^{i(Omega_mu - Omega_nu) t},
    phase           = int dt c_C(t),

    with the c's read off the expansion in _hamiltonian_assembler. Needs a
    uniform grid with an even interval count. Symmetry of the result is
    rechecked to 1e-10 by the PerturbationMatrices constructor.
    """
    t = np.asarray(t, dtype=float)
    h = _check_uniform(t)
    k = spec.n_modes
    if h == 0.0:
        return PerturbationMatrices(np.zeros((k, k), complex), np.zeros((k, k), complex), 0.0)
    n_intervals = len(t) - 1
    if n_intervals % 2 != 0:
        raise DomainError(f"composite Simpson needs an even interval count, got {n_intervals}")
    freqs = spec.spectrum.frequencies
    s = np.zeros((k, k), dtype=complex)
    u = np.zeros((k, k), dtype=complex)
    c_phase = 0.0 + 0.0j
    dosq = spec.delta_omega_sq_at(t)  # (K, T)
    for mu in range(k):
        f = dosq[mu]
        if not np.any(f):
            continue
        w = freqs[mu]
        s[mu, mu] += simpson(f * np.exp(2j * w * t), x=t) / (2.0 * w)
        base = simpson(f, x=t) / (2.0 * w)
        u[mu, mu] += base
        c_phase += 0.5 * base
    if spec.coupling is not None:
        m_t = np.stack([spec.coupling_at(tv) for tv in t])  # (T, K, K)
        for mu in range(k):
            for nu in range(k):
                if mu == nu:
                    continue
                g = m_t[:, mu, nu] * math.sqrt(freqs[nu] / (4.0 * freqs[mu]))
                if not np.any(g):
                    continue
                # a+_mu a+_nu integral; summed over both orders into the
                # symmetric squeeze matrix
                w_pair = simpson(1j * g * np.exp(1j * (freqs[mu] + freqs[nu]) * t), x=t)
                s[mu, nu] += w_pair
                s[nu, mu] += w_pair
                # a+_mu a_nu and a+_nu a_mu pieces of the same channel
                u[mu, nu] += simpson(-1j * g * np.exp(1j * (freqs[mu] - freqs[nu]) * t), x=t)
                u[nu, mu] += simpson(1j * g * np.exp(1j * (freqs[nu] - freqs[mu]) * t), x=t)
    return PerturbationMatrices(squeeze=s, hop=u, phase=complex(c_phase))


@dataclass
class EvolutionResult:
    """Recorded observables of one exact integration run."""

    times: np.ndarray           # recorded times, subset of the step grid
    numbers: np.ndarray         # (n_recorded, K) mode occupations
    entropies: np.ndarray       # von Neumann entropy per recorded time
    trace_defects: np.ndarray   # |Tr rho - 1| per recorded time
    top_level_mass: np.ndarray  # max over modes of population at the cutoff
    rho_final: np.ndarray
    n_steps: int
    dt: float

    @property
    def delta_n(self) -> np.ndarray:
        return self.numbers[-1] - self.numbers[0]


def evolve(spec: InteractionSpec, space: FockSpace, rho0: np.ndarray,
           t: np.ndarray, record_stride: Optional[int] = None,
           strict: bool = False, trace_tol: float = 1e-8,
           entropy_rel_tol: float = 1e-4,
           saturation_tol: float = 1e-6) -> EvolutionResult:
    """Fixed-step RK4 integration of i d(rho)/dt = [H_I(t), rho].

    The step grid ``t`` must be uniform; its spacing is the caller's
    responsibility and should pass :func:`step_halving_check` at the target
    accuracy. rho is re-symmetrized each step by averaging with its
    conjugate transpose. Observables (occupations, entropy, trace defect,
    top-level population) are recorded every ``record_stride`` steps
    (default: ~256 records per run), always including the first and last
    point.

    Raises NumericalToleranceError if the trace defect exceeds
    ``trace_tol`` (step size too coarse) or the entropy drifts beyond
    ``entropy_rel_tol`` x max(S_0, 1) - drift is measured relative to the
    initial entropy, or absolutely when S_0 < 1 (pure states have S_0 = 0).
    Population reaching the cutoff level beyond ``saturation_tol`` emits a
    TruncationWarning, escalated to an error when ``strict``.
    """
    t = np.asarray(t, dtype=float)
    h = _check_uniform(t)
    if space.n_modes != spec.n_modes:
        raise DomainError(f"{space.n_modes} space modes vs {spec.n_modes} spec modes")
    check_density_matrix(rho0)
    n_steps = len(t) - 1
    if record_stride is None:
        record_stride = max(1, n_steps // 256)
    assemble = _hamiltonian_assembler(spec, space)
    dim = space.dimension
    number_diags = np.stack([space.number_diag(mu) for mu in range(space.n_modes)])
    top_masks = [space.number_diag(mu) == space.cutoffs[mu] for mu in range(space.n_modes)]
    hbuf = np.empty((dim, dim), dtype=complex)

    def rhs(tv, r):
        w = assemble(tv, hbuf) @ r
        return -1j * (w - w.conj().T)

    rec_times, rec_numbers, rec_entropy, rec_trace, rec_top = [], [], [], [], []

    def record(tv, r):
        diag = np.real(np.diag(r))
        rec_times.append(tv)
        rec_numbers.append(number_diags @ diag)
        rec_entropy.append(von_neumann_entropy(r))
        rec_trace.append(abs(float(diag.sum()) - 1.0))
        rec_top.append(max(float(diag[mask].sum()) for mask in top_masks))

    rho = rho0.astype(complex).copy()
    record(t[0], rho)
    for k in range(n_steps):
        tk = t[k]
        k1 = rhs(tk, rho)
        k2 = rhs(tk + 0.5 * h, rho + (0.5 * h) * k1)
        k3 = rhs(tk + 0.5 * h, rho + (0.5 * h) * k2)
        k4 = rhs(tk + h, rho + h * k3)
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        rho = 0.5 * (rho + rho.conj().T)
        if (k + 1) % record_stride == 0 or k + 1 == n_steps:
            record(t[k + 1], rho)

    result = EvolutionResult(
        times=np.array(rec_times), numbers=np.array(rec_numbers),
        entropies=np.array(rec_entropy), trace_defects=np.array(rec_trace),
        top_level_mass=np.array(rec_top), rho_final=rho,
        n_steps=n_steps, dt=h)

    worst_trace = float(result.trace_defects.max())
    if worst_trace > trace_tol:
        raise NumericalToleranceError(
            f"trace defect {worst_trace:.3e} exceeds {trace_tol:.1e}; reduce the step size")
    s0 = float(result.entropies[0])
    drift = float(np.abs(result.entropies - s0).max()) / max(s0, 1.0)
    if drift > entropy_rel_tol:
        raise NumericalToleranceError(
            f"entropy drift {drift:.3e} exceeds {entropy_rel_tol:.1e}; reduce the step size")
    worst_top = float(result.top_level_mass.max())
    if worst_top > saturation_tol:
        msg = (f"population {worst_top:.3e} reached the cutoff level "
               f"(tolerance {saturation_tol:.1e}); raise the cutoffs")
        if strict:
            raise NumericalToleranceError(msg)
        warnings.warn(msg, TruncationWarning)
    return result


def step_halving_check(spec: InteractionSpec, space: FockSpace, rho0: np.ndarray,
                       t: np.ndarray, **evolve_kwargs) -> float:
    """Relative change of the final lowest-mode occupation when halving the step.

    The grid is doubled in resolution over the same span; agreement at the
    1e-8 level certifies the step size for production use.
    """
    t = np.asarray(t, dtype=float)
    fine = np.linspace(t[0], t[-1], 2 * (len(t) - 1) + 1)
    coarse = evolve(spec, space, rho0, t, **evolve_kwargs)
    refined = evolve(spec, space, rho0, fine, **evolve_kwargs)
    n_c = float(coarse.numbers[-1, 0])
    n_f = float(refined.numbers[-1, 0])
    return abs(n_c - n_f) / max(abs(n_f), 1.0)

"""Truncated multimode Fock space: operators, thermal states, diagnostics.

This is the substrate for the exact-evolution cross-checks: a handful of
discrete modes, each truncated at a per-mode occupation cutoff, with dense
complex matrices throughout (desk-scale oracle; simplicity over sparsity,
hard dimension cap instead of clever storage).

Basis convention: occupation tuples (n_1, ..., n_K) map to flat indices in
C order (first mode slowest). Operators and density matrices are plain
complex ndarrays over that basis. The canonical commutator [a, a+] = 1
holds exactly on the interior subspace (occupation below the cutoff in the
relevant mode); deviations are confined to the top level, which is why
every routine here polices how much population reaches it.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from .errors import CutoffTooSmallError, DomainError, NumericalToleranceError
from .units import Temperature

DEFAULT_DIM_CAP = 4096
DEFAULT_TAIL_TOL = 1e-6


class FockSpace:
    """K bosonic modes with per-mode occupation cutoffs.

    dimension = prod(cutoff_mu + 1) and must stay under ``dim_cap``; the
    index map between occupation tuples and flat indices is bijective.
    """

    def __init__(self, cutoffs: Sequence[int], dim_cap: int = DEFAULT_DIM_CAP):
        cutoffs = tuple(int(c) for c in cutoffs)
        if len(cutoffs) < 1:
            raise DomainError("need at least one mode")
        if any(c < 1 for c in cutoffs):
            raise DomainError(f"every cutoff must be >= 1, got {cutoffs}")
        dims = tuple(c + 1 for c in cutoffs)
        dimension = math.prod(dims)
        if dimension > dim_cap:
            raise DomainError(
                f"Fock dimension {dimension} exceeds the hard cap {dim_cap}; "
                f"lower the cutoffs {cutoffs} or raise dim_cap explicitly")
        self.cutoffs = cutoffs
        self.n_modes = len(cutoffs)
        self.dims = dims
        self.dimension = dimension
        # occupation table, shape (dimension, n_modes)
        occ = np.array(list(np.ndindex(*dims)), dtype=int)
        occ.setflags(write=False)
        self._occ = occ

    def index_of(self, occupation: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(occupation), self.dims))

    def occupation_of(self, index: int):
        return tuple(self._occ[index])

    def number_diag(self, mode: int) -> np.ndarray:
        """Diagonal of the number operator of one mode (integer vector)."""
        self._check_mode(mode)
        return self._occ[:, mode]

    def _check_mode(self, mode: int):
        if not (0 <= mode < self.n_modes):
            raise DomainError(f"mode {mode} out of range for {self.n_modes} modes")

    def __repr__(self):
        return f"FockSpace(cutoffs={self.cutoffs}, dim={self.dimension})"


def _single_mode_annihilator(local_dim: int) -> np.ndarray:
    a = np.zeros((local_dim, local_dim), dtype=complex)
    n = np.arange(1, local_dim)
    a[n - 1, n] = np.sqrt(n)
    return a


def ladder_ops(space: FockSpace, mode: int):
    """(a, a_dag) for one mode, identity on the others."""
    space._check_mode(mode)
    mats = [np.eye(d, dtype=complex) for d in space.dims]
    mats[mode] = _single_mode_annihilator(space.dims[mode])
    a = mats[0]
    for m in mats[1:]:
        a = np.kron(a, m)
    return a, a.conj().T


def number_operator(space: FockSpace, mode: int) -> np.ndarray:
    """a_dag a of one mode as a dense matrix (diagonal in this basis)."""
    return np.diag(space.number_diag(mode).astype(complex))


def quadrature_ops(space: FockSpace, mode: int, omega: float):
    """Position/momentum pair q = (a + a+)/sqrt(2 w), p = i sqrt(w/2) (a+ - a)."""
    if omega <= 0:
        raise DomainError(f"mode frequency must be positive, got {omega}")
    a, ad = ladder_ops(space, mode)
    q = (a + ad) / math.sqrt(2.0 * omega)
    p = 1j * math.sqrt(omega / 2.0) * (ad - a)
    return q, p


def normal_ordered_h0(space: FockSpace, frequencies: Sequence[float]) -> np.ndarray:
    """sum_mu Omega_mu a+_mu a_mu (zero-point term dropped)."""
    freqs = np.asarray(frequencies, dtype=float)
    if len(freqs) != space.n_modes:
        raise DomainError("one frequency per mode required")
    diag = space._occ @ freqs
    return np.diag(diag.astype(complex))


def required_cutoff(mean_occupation: float, tail_tol: float = DEFAULT_TAIL_TOL) -> int:
    """Smallest cutoff N with geometric tail mass q^(N+1) <= tail_tol.

    q = n/(1+n) for a thermal mode with mean occupation n. This is the
    exact single-mode requirement; it is what thermal_density_matrix
    enforces (and names in its error message) when a cutoff is too small.
    """
    if mean_occupation <= 0:
        return 1
    q = mean_occupation / (1.0 + mean_occupation)
    n = math.ceil(math.log(tail_tol) / math.log(q)) - 1
    return max(n, 1)


def thermal_density_matrix(space: FockSpace, frequencies: Sequence[float],
                           temperature: Temperature,
                           tail_tol: float = DEFAULT_TAIL_TOL) -> np.ndarray:
    """Canonical-ensemble state, diagonal in the Fock basis.

    p(n_1..n_K) ~ exp(-beta * sum Omega_mu n_mu), renormalized to unit
    trace after truncation. If the truncated tail mass (relative to the
    untruncated geometric law) exceeds ``tail_tol`` the call fails and
    names per-mode cutoffs that would suffice. T = 0 returns the exact
    ground-state projector, bit-identical to the dedicated vacuum path.
    """
    freqs = np.asarray(frequencies, dtype=float)
    if len(freqs) != space.n_modes:
        raise DomainError("one frequency per mode required")
    if np.any(freqs <= 0):
        raise DomainError("mode frequencies must be positive")
    rho = np.zeros((space.dimension, space.dimension), dtype=complex)
    if temperature.is_zero:
        rho[0, 0] = 1.0
        return rho
    beta = temperature.beta
    q = np.exp(-beta * freqs)
    retained = 1.0 - q ** (np.array(space.cutoffs) + 1)
    tail = 1.0 - float(np.prod(retained))
    if tail > tail_tol:
        per_mode_tol = 1.0 - (1.0 - tail_tol) ** (1.0 / space.n_modes)
        needed = [max(math.ceil(math.log(per_mode_tol) / math.log(qm)) - 1, 1)
                  for qm in q]
        raise CutoffTooSmallError(
            f"truncated tail mass {tail:.3e} exceeds {tail_tol:.1e}; "
            f"cutoffs of at least {tuple(needed)} are required "
            f"(current: {space.cutoffs})",
            required_cutoffs=tuple(needed))
    energies = space._occ @ freqs
    weights = np.exp(-beta * energies)
    weights /= weights.sum()
    np.fill_diagonal(rho, weights)
    return rho


def squeeze_operator(space: FockSpace, mode: int, r: float,
                     unitarity_tol: float = 1e-6) -> np.ndarray:
    """exp((r/2)(a+^2 - a^2)) on one mode.

    The generator is anti-Hermitian, so the exponential is unitary up to
    the accuracy of the matrix exponential; the defect is checked against
    ``unitarity_tol``. Accuracy against the untruncated operator requires
    the cutoff to dominate |r| (squeezed population reaches level
    ~ e^(2r) x initial spread).
    """
    a, ad = ladder_ops(space, mode)
    gen = 0.5 * r * (ad @ ad - a @ a)
    s = expm(gen)
    defect = np.abs(s.conj().T @ s - np.eye(space.dimension)).max()
    if defect > unitarity_tol:
        raise NumericalToleranceError(
            f"squeeze operator unitarity defect {defect:.3e} exceeds "
            f"{unitarity_tol:.1e} (r={r}, cutoffs={space.cutoffs})")
    return s


def expectation(op: np.ndarray, rho: np.ndarray):
    """Tr(op rho); returns a real float for Hermitian op, complex otherwise.

    For Hermitian op the imaginary residue must stay below 1e-10 (it is a
    pure roundoff artifact there); a larger residue means rho itself is
    corrupted and raises.
    """
    if op.shape != rho.shape or op.shape[0] != op.shape[1]:
        raise DomainError(f"shape mismatch: op {op.shape} vs rho {rho.shape}")
    value = complex(np.sum(op * rho.T))
    scale = max(1.0, float(np.abs(op).max()))
    if np.abs(op - op.conj().T).max() <= 1e-12 * scale:
        if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
            raise NumericalToleranceError(
                f"imaginary residue {value.imag:.3e} in Hermitian expectation")
        return value.real
    return value


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-Tr(rho ln rho) with 0 ln 0 := 0; eigenvalues clamped at zero."""
    defect = np.abs(rho - rho.conj().T).max()
    if defect > 1e-10:
        raise DomainError(f"density matrix not Hermitian (defect {defect:.3e})")
    w = np.linalg.eigvalsh(rho)
    w = np.clip(w, 0.0, None)
    w = w[w > 0.0]
    return float(-np.sum(w * np.log(w)))


def check_density_matrix(rho: np.ndarray, hermiticity_tol: float = 1e-12,
                         trace_tol: float = 1e-10, eig_floor: float = -1e-10):
    """Validate the density-matrix invariants; raises on violation."""
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DomainError(f"density matrix must be square, got shape {rho.shape}")
    herm = np.abs(rho - rho.conj().T).max()
    if herm > hermiticity_tol:
        raise NumericalToleranceError(f"Hermiticity defect {herm:.3e} > {hermiticity_tol:.1e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        raise NumericalToleranceError(f"trace defect {abs(tr - 1.0):.3e} > {trace_tol:.1e}")
    wmin = float(np.linalg.eigvalsh(rho).min())
    if wmin < eig_floor:
        raise NumericalToleranceError(f"negative eigenvalue {wmin:.3e} below {eig_floor:.1e}")

"""Operator algebra, thermal states and diagnostics on the truncated space."""

import math

import numpy as np
import pytest

from dcesim.errors import CutoffTooSmallError, DomainError, NumericalToleranceError
from dcesim.fock import (FockSpace, check_density_matrix, expectation,
                         ladder_ops, normal_ordered_h0, number_operator,
                         quadrature_ops, required_cutoff, squeeze_operator,
                         thermal_density_matrix, von_neumann_entropy)
from dcesim.units import Temperature

SINH2_HALF = 0.27154031740762188924   # sinh(0.5)^2, 50-digit mpmath
TWO_LN2 = 1.3862943611198906188


def beta_ln2_temperature(omega):
    """Temperature with beta*omega = ln 2, i.e. mean occupation exactly 1."""
    return Temperature.from_natural(omega / math.log(2.0))


def test_index_map_bijective():
    space = FockSpace([2, 3, 1])
    assert space.dimension == 3 * 4 * 2
    seen = set()
    for i in range(space.dimension):
        occ = space.occupation_of(i)
        assert space.index_of(occ) == i
        seen.add(occ)
    assert len(seen) == space.dimension


def test_dimension_cap():
    FockSpace([63, 63])             # 4096 exactly, allowed
    with pytest.raises(DomainError):
        FockSpace([63, 64])
    FockSpace([63, 64], dim_cap=8192)
    with pytest.raises(DomainError):
        FockSpace([0])


def test_ladder_matrix_elements():
    space = FockSpace([2])
    a, ad = ladder_ops(space, 0)
    expected = np.zeros((3, 3))
    expected[0, 1] = 1.0
    expected[1, 2] = math.sqrt(2.0)
    np.testing.assert_allclose(a, expected, atol=1e-15)
    np.testing.assert_allclose(ad, expected.T, atol=1e-15)
    np.testing.assert_allclose(np.diag(ad @ a), [0, 1, 2], atol=1e-15)


def test_commutator_on_interior():
    space = FockSpace([5])
    a, ad = ladder_ops(space, 0)
    comm = a @ ad - ad @ a
    np.testing.assert_allclose(np.diag(comm)[:-1], 1.0, atol=1e-14)
    # the defect is confined to the top level
    assert comm[-1, -1] == pytest.approx(-5.0)


def test_multimode_ladder_acts_on_its_mode_only():
    space = FockSpace([2, 2])
    a0, _ = ladder_ops(space, 0)
    a1, _ = ladder_ops(space, 1)
    # a0 on |1,2> -> sqrt(1)|0,2>, a1 on |1,2> -> sqrt(2)|1,1>
    src = space.index_of((1, 2))
    assert a0[space.index_of((0, 2)), src] == pytest.approx(1.0)
    assert a1[space.index_of((1, 1)), src] == pytest.approx(math.sqrt(2.0))
    assert np.abs(a0 @ a1 - a1 @ a0).max() < 1e-14


def test_quadratures():
    omega = 2.7
    space = FockSpace([8])
    q, p = quadrature_ops(space, 0, omega)
    vac = np.zeros(9)
    vac[0] = 1.0
    assert vac @ (q @ q) @ vac == pytest.approx(1.0 / (2 * omega), rel=1e-14)
    comm = q @ p - p @ q
    np.testing.assert_allclose(np.diag(comm)[:-1], 1j, atol=1e-14)
    q4, _ = quadrature_ops(space, 0, 4 * omega)
    np.testing.assert_allclose(q4, q / 2.0, atol=1e-15)


def test_required_cutoff_matches_tail():
    for nbar in (0.5, 1.0, 5.0, 50.0):
        n = required_cutoff(nbar, 1e-6)
        q = nbar / (1 + nbar)
        assert q ** (n + 1) <= 1e-6 < q ** n  # minimal sufficient cutoff


def test_thermal_state_zero_temperature_is_projector():
    space = FockSpace([4])
    rho = thermal_density_matrix(space, [1.0], Temperature(0.0))
    expected = np.zeros((5, 5), dtype=complex)
    expected[0, 0] = 1.0
    assert np.array_equal(rho, expected)  # bit-exact vacuum path


def test_thermal_state_geometric_law():
    omega = 1.0e10
    space = FockSpace([60])
    rho = thermal_density_matrix(space, [omega], beta_ln2_temperature(omega))
    diag = np.real(np.diag(rho))
    # p(n) proportional to (1/2)^n, oracle: geometric series
    ratio = diag[1:8] / diag[:7]
    np.testing.assert_allclose(ratio, 0.5, rtol=1e-12)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-14)
    n_mean = float(np.arange(61) @ diag)
    assert n_mean == pytest.approx(1.0, abs=1e-6)  # matches bose_occupation


def test_thermal_state_multimode_trace_and_means():
    omega = 2.0e9
    t = beta_ln2_temperature(omega)   # n = 1 in the first mode
    space = FockSpace([40, 25])
    rho = thermal_density_matrix(space, [omega, 2 * omega], t)
    diag = np.real(np.diag(rho))
    assert diag.sum() == pytest.approx(1.0, abs=1e-13)
    n0 = float(space.number_diag(0) @ diag)
    n1 = float(space.number_diag(1) @ diag)
    assert n0 == pytest.approx(1.0, abs=1e-6)
    assert n1 == pytest.approx(1.0 / 3.0, abs=1e-6)  # beta*omega = 2 ln 2


def test_thermal_state_cutoff_too_small():
    omega = 1.0e9
    t = Temperature.from_natural(omega / math.log(1.2))  # mean occupation 5
    space = FockSpace([10])
    with pytest.raises(CutoffTooSmallError) as exc:
        thermal_density_matrix(space, [omega], t)
    assert exc.value.required_cutoffs == (75,)
    # the reported cutoff actually suffices
    ok_space = FockSpace([75])
    rho = thermal_density_matrix(ok_space, [omega], t)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-13)


def test_squeeze_operator_identity_and_inverse():
    space = FockSpace([30])
    s0 = squeeze_operator(space, 0, 0.0)
    np.testing.assert_allclose(s0, np.eye(31), atol=1e-15)
    s = squeeze_operator(space, 0, 0.4)
    s_inv = squeeze_operator(space, 0, -0.4)
    assert np.abs(s @ s_inv - np.eye(31)).max() < 1e-8


def test_squeezed_vacuum_photon_number():
    space = FockSpace([40])
    s = squeeze_operator(space, 0, 0.5)
    vac = np.zeros(41, dtype=complex)
    vac[0] = 1.0
    n_op = number_operator(space, 0)
    value = np.real(np.conj(s @ vac) @ (n_op @ (s @ vac)))
    assert value == pytest.approx(SINH2_HALF, rel=1e-10)


def test_squeeze_column_norms_unitary():
    space = FockSpace([60])
    s = squeeze_operator(space, 0, 1.5)
    norms = np.linalg.norm(s, axis=0)
    np.testing.assert_allclose(norms, 1.0, atol=1e-8)


def test_expectation_basics():
    omega = 1.0e10
    space = FockSpace([50])
    rho = thermal_density_matrix(space, [omega], beta_ln2_temperature(omega))
    eye = np.eye(space.dimension, dtype=complex)
    assert expectation(eye, rho) == pytest.approx(1.0, abs=1e-13)
    n_op = number_operator(space, 0)
    assert expectation(n_op, rho) == pytest.approx(1.0, abs=1e-6)
    vac = np.zeros((space.dimension, space.dimension), dtype=complex)
    vac[0, 0] = 1.0
    assert expectation(n_op, vac) == 0.0
    # non-Hermitian operators come back complex
    a, _ = ladder_ops(space, 0)
    assert isinstance(expectation(a, rho), complex)
    with pytest.raises(DomainError):
        expectation(np.eye(3, dtype=complex), rho)


def test_normal_ordered_h0_energy():
    omega = 3.0e9
    t = beta_ln2_temperature(omega)
    space = FockSpace([40, 25])
    freqs = [omega, 2 * omega]
    rho = thermal_density_matrix(space, freqs, t)
    h0 = normal_ordered_h0(space, freqs)
    expected = omega * 1.0 + 2 * omega * (1.0 / 3.0)
    assert expectation(h0, rho) == pytest.approx(expected, rel=1e-6)


def test_entropy_pure_state():
    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 0] = 1.0
    assert von_neumann_entropy(rho) == 0.0


def test_entropy_thermal_closed_form():
    # single thermal mode with n = 1: S = (n+1)ln(n+1) - n ln n = 2 ln 2
    omega = 1.0e10
    space = FockSpace([80])
    rho = thermal_density_matrix(space, [omega], beta_ln2_temperature(omega))
    assert von_neumann_entropy(rho) == pytest.approx(TWO_LN2, rel=1e-10)


def test_entropy_maximally_mixed():
    d = 17
    rho = np.eye(d, dtype=complex) / d
    assert von_neumann_entropy(rho) == pytest.approx(math.log(d), rel=1e-12)


def test_entropy_rejects_non_hermitian():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 1] = 1.0
    with pytest.raises(DomainError):
        von_neumann_entropy(rho)


def test_check_density_matrix():
    good = np.diag([0.5, 0.5, 0.0]).astype(complex)
    check_density_matrix(good)
    with pytest.raises(NumericalToleranceError):
        check_density_matrix(np.diag([0.7, 0.7, 0.0]).astype(complex))
    bad_herm = good.copy()
    bad_herm[0, 1] = 1e-6
    with pytest.raises(NumericalToleranceError):
        check_density_matrix(bad_herm)
    bad_eig = np.diag([1.1, -0.1, 0.0]).astype(complex)
    with pytest.raises(NumericalToleranceError):
        check_density_matrix(bad_eig)

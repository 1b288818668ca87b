"""Unit-conversion tests against an independent high-precision oracle."""

import math

import mpmath as mp
import numpy as np
import pytest

from dcesim.errors import DomainError
from dcesim.units import (Temperature, angular_to_kelvin, kelvin_to_angular,
                          length_to_fundamental)

# frozen from a 50-digit mpmath evaluation of k_B T / hbar with the exact
# SI values k_B = 1.380649e-23 J/K, hbar = 6.62607015e-34/(2 pi) J s
K2A_1K = 1.3092033912698900252e11
K2A_290K = 3.7966898346826810731e13
CUBIC_1CM = 1.6312901091678403714e11  # sqrt(3) pi c / 0.01 m


def _mpmath_kelvin_to_angular(kelvin):
    mp.mp.dps = 50
    k_b = mp.mpf("1.380649e-23")
    hbar = mp.mpf("6.62607015e-34") / (2 * mp.pi)
    return k_b * kelvin / hbar


def test_zero_kelvin_is_exact_zero():
    assert kelvin_to_angular(0.0) == 0.0
    assert angular_to_kelvin(0.0) == 0.0


@pytest.mark.parametrize("kelvin,frozen", [(1.0, K2A_1K), (290.0, K2A_290K)])
def test_kelvin_to_angular_frozen_values(kelvin, frozen):
    value = kelvin_to_angular(kelvin)
    assert value == pytest.approx(frozen, rel=1e-12)
    # live independent oracle, same conclusion
    oracle = float(_mpmath_kelvin_to_angular(kelvin))
    assert value == pytest.approx(oracle, rel=1e-12)


def test_round_trip_relative_1e12():
    for t in np.logspace(-6, 6, 25):
        assert angular_to_kelvin(kelvin_to_angular(t)) == pytest.approx(t, rel=1e-12)
        w = kelvin_to_angular(t)
        assert kelvin_to_angular(angular_to_kelvin(w)) == pytest.approx(w, rel=1e-12)


def test_conversions_strictly_monotone():
    temps = np.logspace(-3, 4, 50)
    omegas = np.array([kelvin_to_angular(t) for t in temps])
    assert np.all(np.diff(omegas) > 0)
    back = np.array([angular_to_kelvin(w) for w in omegas])
    assert np.all(np.diff(back) > 0)


def test_negative_temperature_rejected():
    with pytest.raises(DomainError):
        kelvin_to_angular(-1.0)
    with pytest.raises(DomainError):
        Temperature(-0.5)


def test_cubic_fundamental_1cm():
    assert length_to_fundamental(0.01, "cubic") == pytest.approx(CUBIC_1CM, rel=1e-12)


def test_one_dimensional_fundamental_inverts():
    # L = pi c -> Omega_1 = 1 rad/s by construction
    c = 299792458.0
    assert length_to_fundamental(math.pi * c, "one_dimensional") == pytest.approx(1.0, rel=1e-15)


def test_inverse_length_scaling():
    w1 = length_to_fundamental(0.01, "cubic")
    w2 = length_to_fundamental(0.02, "cubic")
    assert w2 == pytest.approx(0.5 * w1, rel=1e-15)


def test_nonpositive_length_rejected():
    for bad in (0.0, -0.01):
        with pytest.raises(DomainError):
            length_to_fundamental(bad, "cubic")


def test_temperature_dataclass():
    t0 = Temperature(0.0)
    assert t0.is_zero and t0.beta == math.inf and t0.natural == 0.0
    t = Temperature(290.0)
    assert t.natural == pytest.approx(K2A_290K, rel=1e-12)
    assert t.beta == pytest.approx(1.0 / K2A_290K, rel=1e-12)
    again = Temperature.from_natural(t.natural)
    assert again.kelvin == pytest.approx(290.0, rel=1e-12)

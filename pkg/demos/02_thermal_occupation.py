"""Room-temperature photon background of a centimeter cavity.

At 290 K a 1.46e11 rad/s mode already holds ~260 thermal photons. The same
factor 1 + 2n ~ 520 multiplies the pair-creation yield of a vibrating
wall, which is what makes a warm experiment attractive: the signal grows
by the same three orders of magnitude as the background floor.
"""

from dcesim.thermal import (bose_occupation, enhancement_factor,
                            thermal_variance)
from dcesim.units import Temperature, kelvin_to_angular

OMEGA = 1.46e11  # rad/s, fundamental of a ~1 cm cavity

print(f"mode frequency          : {OMEGA:.3e} rad/s")
print(f"290 K in rad/s          : {kelvin_to_angular(290.0):.3e}")
print()
print(f"{'T [K]':>8} {'occupation n':>14} {'1 + 2n':>12} {'sigma(n)':>12}")
for kelvin in (0.0, 0.3, 3.0, 30.0, 290.0, 1000.0):
    t = Temperature(kelvin)
    n = bose_occupation(OMEGA, t)
    print(f"{kelvin:8.1f} {n:14.4f} {enhancement_factor(OMEGA, t):12.4f} "
          f"{thermal_variance(OMEGA, t):12.4f}")

print()
t290 = Temperature(290.0)
n = bose_occupation(OMEGA, t290)
print(f"at 290 K: n = {n:.4f}, thermal factor 1+2n = {1 + 2 * n:.4f}")
print("any photons created by wall motion ride on this floor, with")
print(f"shot-to-shot spread sigma = {thermal_variance(OMEGA, t290):.1f} photons")

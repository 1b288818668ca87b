"""Photon yield vs drive duration: vacuum curve against the warm cavity.

The resonant yield is sinh^2(eps*w*T/2), enhanced by 1 + 2n at finite
temperature. With the reference parameters (eps = 6e-10, w = 1.46e11
rad/s, 290 K) the thermal curve sits a constant factor ~520 above the
vacuum one, and both grow exponentially once the squeeze parameter
passes unity.

The same table is available as deterministic CSV from the command line:

    dcesim fig1 --output fig1.csv
"""

import numpy as np

from dcesim.response import rwa_photon_number
from dcesim.units import Temperature

EPS = 6e-10
OMEGA = 1.46e11
T290 = Temperature(290.0)

durations = np.linspace(0.0, 0.05, 11)
cold = rwa_photon_number(EPS, OMEGA, durations, Temperature(0.0))
warm = rwa_photon_number(EPS, OMEGA, durations, T290)

print(f"thermal floor n0 = {warm.thermal_floor:.3f}, "
      f"enhancement 1+2n0 = {warm.enhancement:.3f}")
print()
print(f"{'T [s]':>8} {'r':>8} {'dN vacuum':>12} {'dN at 290K':>14} {'N total':>12}")
for i, d in enumerate(durations):
    print(f"{d:8.4f} {warm.squeeze_parameter[i]:8.3f} "
          f"{cold.delta_n[i]:12.4e} {warm.delta_n[i]:14.4e} {warm.total[i]:12.2f}")

print()
big = warm.delta_n[-1] / cold.delta_n[-1]
print(f"the warm cavity creates {big:.0f}x more photons at every duration")
print("detectability: the created number passes the thermal spread "
      f"(~{(warm.thermal_floor * (warm.thermal_floor + 1)) ** 0.5:.0f}) near "
      "r ~ 1, far earlier than in vacuum")

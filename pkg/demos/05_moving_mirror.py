"""Energy radiated by a single oscillating mirror, cold and warm.

The acceleration-squared (vacuum) term is temperature independent; the
velocity-squared term carries the pi/3 T^2 prefactor, so the thermal
correction overtakes the vacuum emission once T exceeds ~w/(2 pi) in
natural units. Positions are carried as light-time, velocities as
fractions of c.
"""

import math

from dcesim.mirror import (GaussianSinusoidTrajectory, SinusoidTrajectory,
                           radiated_energy)
from dcesim.units import Temperature

A = 1e-9          # stroke in light-seconds (~0.3 m)
OMEGA = 1e3       # rad/s
PERIODS = 20

traj = SinusoidTrajectory(A, OMEGA, PERIODS)
tau = 2 * math.pi * PERIODS / OMEGA
closed = A * A * OMEGA**4 * tau / (24 * math.pi)
print(f"sinusoid: a = {A:.1e} s, w = {OMEGA:.0e} rad/s, {PERIODS} periods")
print(f"vacuum term (quadrature)  : {radiated_energy(traj, Temperature(0.0)).vacuum:.6e}")
print(f"vacuum term (closed form) : {closed:.6e}")
print()
print(f"{'T [K]':>8} {'E_vacuum':>12} {'E_thermal':>12} {'thermal/vacuum':>15}")
for kelvin in (0.0, 1e-9, 1e-8, 1e-7):
    res = radiated_energy(traj, Temperature(kelvin))
    print(f"{kelvin:8.1e} {res.vacuum:12.4e} {res.thermal:12.4e} {res.ratio:15.4e}")

t = Temperature(1e-8)
print()
print(f"closed-form ratio 4 pi^2 T^2 / w^2 at 1e-8 K: "
      f"{4 * math.pi**2 * t.natural**2 / OMEGA**2:.4e}")

pulse = GaussianSinusoidTrajectory(A, OMEGA, tau_env=2 * math.pi * 3 / OMEGA)
res = radiated_energy(pulse, t)
print()
print("gaussian-windowed pulse (starts and ends at rest automatically):")
print(f"  E_vacuum = {res.vacuum:.4e}, E_thermal = {res.thermal:.4e}, "
      f"method = {res.method}")

"""Cavity mode ladders and the velocity-resonance search.

A 1D cavity has an integer-spaced spectrum, so driving the walls at twice
the fundamental finds mode pairs whose gap matches the drive (the wall
velocity then shuffles photons between them). The cubic box is usually
quoted as resonance-free, but its diagonal modes m*(1,1,1) form their own
integer ladder: the search below finds those exact pairs.
"""

import math

from dcesim.cavity import Geometry, build_spectrum, find_resonance_pairs

C = 299792458.0

print("=== 1D cavity, L chosen so the ladder is 1, 2, 3, ... rad/s ===")
ladder = build_spectrum(Geometry.one_dimensional(math.pi * C), max_index=8)
for label, freq in ladder.modes:
    print(f"  mode {label}: {freq:.3f} rad/s")

pairs = find_resonance_pairs(ladder, tolerance=1e-9)
print(f"pairs with |w_mu +- w_nu - 2 w_1| <= 1e-9: {len(pairs)}")
for p in pairs:
    print(f"  ({p.mu}, {p.nu}) {p.sign}-branch, residual {p.residual:+.1e}")

print()
print("=== cubic cavity, L = 1 cm ===")
cube = build_spectrum(Geometry.cubic(0.01), max_index=5)
print(f"{len(cube)} modes; fundamental (1,1,1) at {cube.fundamental:.4e} rad/s")
for label, freq in cube.modes[:7]:
    print(f"  mode {label}: {freq:.6e} rad/s")

pairs = find_resonance_pairs(cube, tolerance=1e-9 * cube.fundamental)
print(f"resonant pairs up to index 5: {len(pairs)} "
      "(the diagonal sub-ladder is integer-spaced)")
for p in pairs[:6]:
    print(f"  ({p.mu}, {p.nu}) {p.sign}-branch")

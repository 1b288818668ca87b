"""dcesim: photon creation from time-dependent boundaries at finite temperature.

A desk-scale simulator for motion-induced radiation in cavities and from
moving mirrors, with thermal initial states. Closed-form and
quadratic-response predictions are cross-validated against exact
density-matrix evolution in a truncated Fock space.

Modules
-------
units     SI <-> natural units (hbar = c = k_B = 1, rad/s canonical)
cavity    eigenmode spectra and the velocity-resonance analysis
thermal   Bose occupations, enhancement factors, number variance
fock      truncated Fock space: operators, thermal states, entropy
dynamics  drives, interaction Hamiltonian, quadratic-form extraction,
          exact von Neumann evolution
response  quadratic response and the rotating-wave closed form
mirror    moving-mirror radiated energy at finite temperature
cli       deterministic CSV/JSON command-line front end
"""

from . import cavity, dynamics, errors, fock, mirror, response, thermal, units

__all__ = ["cavity", "dynamics", "errors", "fock", "mirror",
           "response", "thermal", "units"]
__version__ = "0.1.0"

"""Numerics for the harmonic sawtooth map and the zeta functions built from it.

Modules
-------
specfun     gamma, zeta, Hurwitz zeta, polygamma, Lambert W, Lerch Phi
maps        the sawtooth map w, the Gauss map h, fixed points, exact orbits
transforms  Mellin/Laplace transforms of the branches, finite zetas
reflection  chi(N; s) and its residues by closed form and by contour
roots       Laplace and Mellin root families
fractal     the fractal string l_n = 1/(2n(n+1)) and its zeta functions
cli         ``python -m zetasaw`` (eval, scan, verify)
"""

from . import errors, fractal, maps, reflection, roots, specfun, transforms
from .errors import ConvergenceError, DomainError, PoleError, PrecisionError, ZetasawError
from .fractal import geometric_zeta, geometric_zeta_integer, tube_volume
from .maps import gamma_orbit, gauss_map, w_map
from .reflection import chi, chi_residue_at_0, laurent_coeff, residue_sign_scan
from .specfun import lambert_w, riemann_zeta
from .transforms import FiniteZeta, schroder_numbers, zeta_h_finite, zeta_w_finite

__version__ = "0.1.0"

__all__ = [
    "errors", "fractal", "maps", "reflection", "roots", "specfun", "transforms",
    "ZetasawError", "DomainError", "PoleError", "ConvergenceError", "PrecisionError",
    "FiniteZeta", "chi", "chi_residue_at_0", "laurent_coeff", "residue_sign_scan",
    "gamma_orbit", "gauss_map", "w_map", "geometric_zeta", "geometric_zeta_integer",
    "tube_volume", "lambert_w", "riemann_zeta", "schroder_numbers", "zeta_h_finite",
    "zeta_w_finite",
]

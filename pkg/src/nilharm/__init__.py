"""Exact and numerical harmonic analysis on 2-step nilpotent Lie algebras.

Constructs the algebra families underlying commutative nilmanifolds,
computes Pfaffian Plancherel data in exact arithmetic, decides square
integrability, builds verified stepwise splits, and validates the
Fourier inversion formulas numerically.
"""

__version__ = "0.1.0"

from .algebra import LieAlgebraData, bracket, jacobi_defect, nilpotency_class
from .catalog import (abelian, free_two_step, from_name, heisenberg,
                      lambda_a, octonion_double)
from .gaussians import ComplexGaussian, GaussianTestFunction
from .inversion import (GroupPoint, InversionReport, factor_point,
                        group_multiply, invert_flat, invert_stepwise,
                        orbit_space_quadrature_check, orbital_character,
                        right_translate)
from .orbits import OrbitRepresentative, orbit_representative, skew_spectrum
from .pfaffian import (SquareIntegrability, b_matrix, is_square_integrable,
                       pf_at, pf_polynomial, pfaffian)
from .stepwise import StepwiseDecomposition, decompose, find_codim_split

__all__ = [
    "LieAlgebraData", "bracket", "jacobi_defect", "nilpotency_class",
    "heisenberg", "free_two_step", "octonion_double", "abelian",
    "lambda_a", "from_name",
    "ComplexGaussian", "GaussianTestFunction",
    "GroupPoint", "InversionReport", "group_multiply", "right_translate",
    "invert_flat", "invert_stepwise", "factor_point", "orbital_character",
    "orbit_space_quadrature_check",
    "OrbitRepresentative", "orbit_representative", "skew_spectrum",
    "SquareIntegrability", "b_matrix", "pfaffian", "pf_polynomial",
    "pf_at", "is_square_integrable",
    "StepwiseDecomposition", "decompose", "find_codim_split",
]

"""Exact computations with quantized enveloping algebras at small rank.

The package builds irreducible modules over Q(v) (v^2 = q), the
matrix-coefficient algebra of the corresponding quantum group with its Hopf
star-structure and invariant integral, parabolic and reductive subalgebras,
and the section spaces of induced homogeneous bundles, together with a
verification suite that re-derives the structural theorems exactly.
"""

from .cartan import CartanData, cartan_data, SUPPORTED_TYPES
from .coeff import CoeffAlgebra, CoeffElement
from .parabolic import ParabolicData
from .scalar import LaurentPoly, NumericValue, RationalFunction
from .uqrep import AlgebraWord, IrrepCache, IrrepModule, build_irrep

__all__ = [
    "AlgebraWord",
    "CartanData",
    "CoeffAlgebra",
    "CoeffElement",
    "IrrepCache",
    "IrrepModule",
    "LaurentPoly",
    "NumericValue",
    "ParabolicData",
    "RationalFunction",
    "SUPPORTED_TYPES",
    "build_irrep",
    "cartan_data",
]

__version__ = "0.1.0"

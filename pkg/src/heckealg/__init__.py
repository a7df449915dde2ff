"""Exact computational algebra for deformed semidirect products.

Subpackages cover: exact polynomial/series arithmetic (``exact``), Lie
algebras and enveloping arithmetic (``liealg``), determinant generating
functions for the gl/sp deformation families (``genfun``), algebra
presentations with PBW rewriting and flatness certification (``hecke``),
Dunkl operators with an exact sphere-moment engine (``dunkl``), lowest
weight module invariants (``category_o``), McKay graphs and wreath-product
representation conditions (``wreath``), and a CLI (``cli``).
"""

from fractions import Fraction

from .exact import SparsePoly, TruncatedSeries, poly_divide_exact
from .genfun import BetaParameter, ell_coefficients, r_coefficients
from .hecke import (FiniteGroup, HeckeAlgebra, cherednik_finite, infinitesimal_gl,
                    infinitesimal_sp, symplectic_finite)
from .liealg import EnvElement, LieAlgebraSpec, killing_form, symmetrize

__all__ = [
    "Fraction",
    "SparsePoly",
    "TruncatedSeries",
    "poly_divide_exact",
    "BetaParameter",
    "r_coefficients",
    "ell_coefficients",
    "FiniteGroup",
    "HeckeAlgebra",
    "cherednik_finite",
    "symplectic_finite",
    "infinitesimal_gl",
    "infinitesimal_sp",
    "EnvElement",
    "LieAlgebraSpec",
    "killing_form",
    "symmetrize",
]

__version__ = "0.1.0"

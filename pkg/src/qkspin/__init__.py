"""Exact Sp(n)Sp(1) spinor algebra, curvature spaces and Weitzenboeck matrices.

All arithmetic happens in Q(i, sqrt2) (`qkspin.scalar.Scalar`) or its
rational subfield (`fractions.Fraction`); nothing is ever verified in
floating point.  The main entry points:

  * `symplectic`, `powers`, `lefschetz`: the model spaces H and E, their
    symmetric/exterior powers, the sl2 triple and primitive subspaces;
  * `spinor.SpinorSpace`: the graded spinor space with its split Clifford
    multiplication, twisted Hermitian form and Casimir action;
  * `curvature`: the space of algebraic curvature tensors, the Bianchi
    equations on H tensor E, the model tensors and their Ricci traces;
  * `weitzenboeck`: the closed-form 2x2 / 3x3 / 6x6 matrices, the twelve
    projectors, the brute-force recovery oracle and the eigenvalue bound;
  * `verify.run_suite` / the `qkspin` command line for batch verification.
"""

from .scalar import Scalar
from .spinor import SpinorSpace, kraines_eigenvalue, rank_formula
from .weitzenboeck import estimate_bound, we_closed, wh_closed, w_full

__all__ = [
    "Scalar",
    "SpinorSpace",
    "estimate_bound",
    "kraines_eigenvalue",
    "rank_formula",
    "we_closed",
    "wh_closed",
    "w_full",
]

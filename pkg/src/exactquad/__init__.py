"""Exact quadratics: forms, roots in Q(sqrt d), transforms and congruences."""

from .exact import ExactRoot, MixedRadicandError, Rational, conjugate, ext_arith, rational_arith, squarefree_decompose
from .forms import (
    DegenerateQuadraticError,
    DiscriminantClass,
    FactoredForm,
    GeneralForm,
    NonRationalCoefficientError,
    RootCase,
    StandardForm,
    discriminant,
    evaluate,
    expand_factored,
    expand_standard,
    pretty_print,
    solve_prod_sum,
    symmetric_offset,
    to_factored,
    to_standard,
)
from .modular import (
    BruteForceBoundError,
    CongruenceProblem,
    CongruenceSolution,
    Method,
    brute_force_congruence,
    jacobi,
    legendre,
    mod_inverse,
    quadratic_residues,
    solve_congruence,
    sqrt_mod_prime,
    sqrt_mod_prime_power,
)
from .parser import ParseError, ProdSum, parse
from .plot import plot_overlay, plot_quadratic
from .transform import Point, Transformation, map_point, map_table, standard_to_transformation, unmap_point

__version__ = "0.1.0"

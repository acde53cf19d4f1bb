"""Exact super Catalan moments, their polynomial families and q-analogues.

The public surface is re-exported here; the submodules hold the details.
"""
from .algebra import (
    Poly, Series, d_q, e_q_series, exp_series, genocchi_numbers, q_tangent_numbers,
    tangent_numbers,
)
from .families import (
    FAMILIES, FUNCTIONALS, FamilySpec, MomentFunctional, apply_functional, family_poly,
    family_poly_by_recurrence, moment, moment_by_expansion, moment_of_power, sigma, sigma_q,
    special_values,
)
from .kernels import available_backends, use_backend
from .lattice import (
    brute_force_row, brute_force_weight, build_table, lambda_q_weights, lambda_weights,
    mu_weights, recurrence_weights, unit_weights,
)
from .render import parse_scalar, render_scalar
from .scalar import QPoly, QRat, eval_at_q, q_binomial, q_factorial, q_int, q_pochhammer, qpow

__version__ = "0.1.0"

__all__ = [
    "Poly", "Series", "d_q", "e_q_series", "exp_series", "genocchi_numbers",
    "q_tangent_numbers", "tangent_numbers",
    "FAMILIES", "FUNCTIONALS", "FamilySpec", "MomentFunctional", "apply_functional",
    "family_poly", "family_poly_by_recurrence", "moment", "moment_by_expansion",
    "moment_of_power", "sigma", "sigma_q", "special_values",
    "available_backends", "use_backend",
    "brute_force_row", "brute_force_weight", "build_table", "lambda_q_weights",
    "lambda_weights", "mu_weights", "recurrence_weights", "unit_weights",
    "parse_scalar", "render_scalar",
    "QPoly", "QRat", "eval_at_q", "q_binomial", "q_factorial", "q_int", "q_pochhammer", "qpow",
]

"""Exact lengths of H^0_m(R/I^n) for powers of monomial ideals, their limits,
and the K3-surface example where lim lambda/n^4 is irrational."""

from satpowers._kernels import BACKEND
from satpowers.asymptotics import (
    AsymptoticEstimate,
    NotStabilizedError,
    diagonal_hilbert,
    finite_difference_leading,
    multiplicity_mprimary,
    richardson_limit,
)
from satpowers.io import ParseError, parse_ideal, render_ideal
from satpowers.k3 import K3Params, closed_form_limit, sigma_decomposition, sigma_recursion
from satpowers.lengths import LengthRecord, empirical_swanson_e, h0_length, length_table
from satpowers.monomial import MonomialIdeal, saturate_irrelevant
from satpowers.numeric import QuadraticNumber, binomial, isqrt, quad_compare

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AsymptoticEstimate",
    "K3Params",
    "LengthRecord",
    "MonomialIdeal",
    "NotStabilizedError",
    "ParseError",
    "QuadraticNumber",
    "binomial",
    "closed_form_limit",
    "diagonal_hilbert",
    "empirical_swanson_e",
    "finite_difference_leading",
    "h0_length",
    "isqrt",
    "length_table",
    "multiplicity_mprimary",
    "parse_ideal",
    "quad_compare",
    "render_ideal",
    "richardson_limit",
    "saturate_irrelevant",
    "sigma_decomposition",
    "sigma_recursion",
]

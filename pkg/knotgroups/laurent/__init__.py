"""Exact Laurent polynomials and the cubic number field used by the Kishino certificate."""

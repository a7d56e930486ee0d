"""Exact arithmetic substrate: GF(3^k) tower, polynomials, exact linear algebra."""

from .gf import GF3, GF9, GF81, ZETA, Field, FieldElem, field_tower, zeta_pow
from .linalg import SingularMatrixError, det_exact, solve_exact
from .poly import Poly, RatFun, from_ints, poly_gcd, ratfun_identity
from .smith import nonunit_factors, rank_of, smith_invariants

__all__ = [
    "GF3", "GF9", "GF81", "ZETA", "Field", "FieldElem", "field_tower", "zeta_pow",
    "SingularMatrixError", "det_exact", "solve_exact",
    "Poly", "RatFun", "from_ints", "poly_gcd", "ratfun_identity",
    "nonunit_factors", "rank_of", "smith_invariants",
]

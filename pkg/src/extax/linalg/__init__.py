"""Exact dense linear algebra over GF(p^k), p in {2,3,5,7}."""

from .field import FEl, Field, conway_polynomial, field_make
from .kernels import gemm, inverse, left_nullspace, nullspace, rank, rref
from .mat import Mat

__all__ = [
    "FEl",
    "Field",
    "Mat",
    "conway_polynomial",
    "field_make",
    "gemm",
    "inverse",
    "left_nullspace",
    "nullspace",
    "rank",
    "rref",
]

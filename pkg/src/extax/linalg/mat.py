"""Dense matrix over a finite field, plus the matrix text format."""

from __future__ import annotations

import numpy as np

from ..errors import FieldMismatch
from . import kernels
from .field import Field, field_make


class Mat:
    """Immutable-by-convention dense matrix in canonical integer encoding."""

    __slots__ = ("field", "a")

    def __init__(self, field: Field, a):
        self.field = field
        arr = np.asarray(a, dtype=field.dtype)
        if arr.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        self.a = np.ascontiguousarray(arr)

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=field.dtype))

    @classmethod
    def identity(cls, field, n):
        out = np.zeros((n, n), dtype=field.dtype)
        out[np.arange(n), np.arange(n)] = 1
        return cls(field, out)

    @classmethod
    def random(cls, field, rows, cols, rng):
        return cls(field, rng.integers(0, field.q, size=(rows, cols)))

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        return Mat(self.field, self.field.add_arr(self.a, other.a))

    def __sub__(self, other):
        self._check(other)
        return Mat(self.field, self.field.sub_arr(self.a, other.a))

    def __neg__(self):
        return Mat(self.field, self.field.neg_arr(self.a))

    def __matmul__(self, other):
        self._check(other)
        return Mat(self.field, kernels.gemm(self.field, self.a, other.a))

    def scalar(self, c: int):
        return Mat(self.field, self.field.scalar_mul_arr(c, self.a))

    def t(self):
        return Mat(self.field, np.ascontiguousarray(self.a.T))

    def inverse(self):
        return Mat(self.field, kernels.inverse(self.field, self.a))

    def inv_t(self):
        """Inverse transpose (dual action)."""
        return Mat(self.field, np.ascontiguousarray(kernels.inverse(self.field, self.a).T))

    def pow(self, e: int):
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        if e < 0:
            return self.inverse().pow(-e)
        result = Mat.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        return result

    def kron(self, other: "Mat") -> "Mat":
        self._check(other)
        f = self.field
        ra, ca = self.a.shape
        rb, cb = other.a.shape
        if f._mul_table is not None:
            big = f._mul_table[self.a][:, :, None, None] * 0  # dtype placeholder
            big = f._mul_table[
                self.a[:, None, :, None].astype(np.int64),
                other.a[None, :, None, :].astype(np.int64),
            ]
        else:
            big = f.mul_arr(
                np.broadcast_to(self.a[:, None, :, None], (ra, rb, ca, cb)),
                np.broadcast_to(other.a[None, :, None, :], (ra, rb, ca, cb)),
            )
        return Mat(f, big.transpose(0, 1, 2, 3).reshape(ra * rb, ca * cb))

    def trace(self) -> int:
        t = 0
        for i in range(min(self.rows, self.cols)):
            t = self.field.add_scalar(t, int(self.a[i, i]))
        return t

    def frobenius(self, i: int = 1) -> "Mat":
        if i % self.field.k == 0 and self.field.k > 1:
            return self
        return Mat(self.field, self.field.frobenius_map(i)[self.a])

    def embed(self, big: Field) -> "Mat":
        table = self.field.embedding_into(big)
        return Mat(big, table[self.a])

    # -- predicates ---------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field is other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.a.tobytes()))

    def is_zero(self) -> bool:
        return not np.any(self.a)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        eye = np.zeros_like(self.a)
        eye[np.arange(self.rows), np.arange(self.rows)] = 1
        return bool(np.array_equal(self.a, eye))

    # -- elimination wrappers -----------------------------------------------
    def rref(self):
        red, rk, piv = kernels.rref(self.field, self.a)
        return Mat(self.field, red), rk, piv

    def rank(self) -> int:
        return kernels.rank(self.field, self.a)

    def nullspace(self) -> "Mat":
        return Mat(self.field, kernels.nullspace(self.field, self.a))

    # -- text format ---------------------------------------------------------
    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.field.p} {self.field.k}"]
        for i in range(self.rows):
            lines.append(" ".join(str(int(v)) for v in self.a[i]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Mat":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        rows, cols, p, k = (int(x) for x in lines[0].split())
        field = field_make(p, k)
        data = np.zeros((rows, cols), dtype=field.dtype)
        for i in range(rows):
            vals = lines[1 + i].split()
            if len(vals) != cols:
                raise ValueError(f"row {i} has {len(vals)} entries, expected {cols}")
            data[i] = [int(v) for v in vals]
        return cls(field, data)

    def __repr__(self):
        return f"Mat({self.field}, {self.rows}x{self.cols})"

"""Finite fields GF(p^k) for p in {2,3,5,7} with canonical moduli.

Elements are encoded as integers in [0, p^k): the element sum(c_i x^i)
is stored as sum(c_i p^i).  One Field object is cached per (p, k); the
modulus is the Conway polynomial, computed once and memoised, so that
serialized data is stable and subfield embeddings are compatible across
the canonical tower.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import UnsupportedField

SUPPORTED_PRIMES = (2, 3, 5, 7)
MAX_ORDER = 1 << 16


# -- polynomial helpers over GF(p), coefficient tuples, low degree first --

def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            m = (c * inv_lead) % p
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - m * f[j]) % p
    a = a[:df]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(c % p for c in a)


def _ppowmod(a, e, f, p):
    result = (1,)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _factor_int(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_primitive(f, p, k):
    """x generates the multiplicative group of GF(p)[x]/(f)."""
    q1 = p**k - 1
    x = (0, 1)
    if _ppowmod(x, q1, f, p) != (1,):
        return False
    for r in _factor_int(q1):
        if _ppowmod(x, q1 // r, f, p) == (1,):
            return False
    return True


def _minpoly_of_power(f, p, k, e, target_deg):
    """Minimal polynomial of x^e over GF(p), working mod f (degree k)."""
    # Build the matrix of powers of y = x^e and find the first linear relation.
    y = _ppowmod((0, 1), e, f, p)
    rows = []
    cur = (1,)
    for _ in range(target_deg + 1):
        rows.append([cur[i] if i < len(cur) else 0 for i in range(k)])
        cur = _pmod(_pmul(cur, y, p), f, p)
    m = np.array(rows, dtype=np.int64) % p
    # Solve for monic relation of degree target_deg exactly.
    a = m[:target_deg].T % p
    b = (-m[target_deg]) % p
    coeffs = _solve_mod_p(a, b, p)
    if coeffs is None:
        return None
    return tuple(int(c) for c in coeffs) + (1,)


def _solve_mod_p(a, b, p):
    """Solve a @ x = b over GF(p); returns None if inconsistent."""
    a = a.copy() % p
    b = b.copy() % p
    n_rows, n_cols = a.shape
    piv_cols = []
    r = 0
    for c in range(n_cols):
        rows = np.nonzero(a[r:, c])[0]
        if len(rows) == 0:
            continue
        t = r + rows[0]
        a[[r, t]] = a[[t, r]]
        b[[r, t]] = b[[t, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        b[r] = (b[r] * inv) % p
        for i in range(n_rows):
            if i != r and a[i, c]:
                m = int(a[i, c])
                a[i] = (a[i] - m * a[r]) % p
                b[i] = (b[i] - m * b[r]) % p
        piv_cols.append(c)
        r += 1
        if r == n_rows:
            break
    x = np.zeros(n_cols, dtype=np.int64)
    for idx, c in enumerate(piv_cols):
        x[c] = b[idx]
    if np.any((a @ x - b) % p):
        return None
    return x


@lru_cache(maxsize=None)
def conway_polynomial(p: int, k: int) -> tuple:
    """Canonical modulus for GF(p^k): lexicographically least primitive
    monic polynomial compatible with the canonical moduli of all maximal
    subfields (the Conway polynomial convention)."""
    if k == 1:
        # x - smallest primitive root of GF(p)
        g = 1
        if p > 2:
            fact = _factor_int(p - 1)
            for cand in range(2, p):
                if all(pow(cand, (p - 1) // r, p) != 1 for r in fact):
                    g = cand
                    break
        return ((-g) % p, 1)
    maximal = [k // r for r in _factor_int(k)]
    subs = {d: conway_polynomial(p, d) for d in maximal}
    # Candidates in the standard Conway order: writing
    # f = x^k + sum c_i x^i, compare ((-1)^(k-i) c_i mod p) for
    # i = k-1 ... 0 lexicographically.
    for code in range(p**k):
        b = []
        v = code
        for _ in range(k):
            b.append(v % p)  # b[i] for coefficient of x^i, low first
            v //= p
        f = tuple(((-1) ** (k - i) * b[i]) % p for i in range(k)) + (1,)
        if not _is_primitive(f, p, k):
            continue
        ok = True
        for d, sub in subs.items():
            e = (p**k - 1) // (p**d - 1)
            if _minpoly_of_power(f, p, k, e, d) != sub:
                ok = False
                break
        if ok:
            return f
    raise UnsupportedField(f"no canonical modulus found for GF({p}^{k})")


@dataclass(frozen=True)
class FEl:
    """A field element: canonical residue paired with its field."""

    field: "Field"
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError("element out of range")

    def __add__(self, other):
        return FEl(self.field, int(self.field.add_scalar(self.value, other.value)))

    def __mul__(self, other):
        return FEl(self.field, int(self.field.mul_scalar(self.value, other.value)))

    def __neg__(self):
        return FEl(self.field, int(self.field.neg_arr(np.array(self.value))))

    def inverse(self):
        return FEl(self.field, self.field.inv_scalar(self.value))


class Field:
    """GF(p^k) with log/antilog tables and vectorized array arithmetic."""

    _cache: dict = {}

    def __new__(cls, p, k):
        key = (p, k)
        if key in cls._cache:
            return cls._cache[key]
        self = super().__new__(cls)
        cls._cache[key] = self
        return self

    def __init__(self, p: int, k: int):
        if getattr(self, "_ready", False):
            return
        if p not in SUPPORTED_PRIMES or k < 1 or p**k > MAX_ORDER:
            raise UnsupportedField(f"GF({p}^{k}) not supported")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = conway_polynomial(p, k)
        self.dtype = np.uint8 if self.q <= 256 else np.uint16
        self._build_tables()
        self._ready = True

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # exp/log for the cyclic group generated by x (primitive by construction)
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = (1,)
        for i in range(q - 1):
            code = sum(c * p**j for j, c in enumerate(cur))
            exp[i] = code
            log[code] = i
            cur = _pmod(_pmul(cur, (0, 1), p), self.modulus, p)
        exp[q - 1 : 2 * (q - 1)] = exp[: q - 1]
        self._exp = exp
        self._log = log
        # digit planes: value -> coefficient vector over GF(p)
        codes = np.arange(q, dtype=np.int64)
        planes = np.zeros((k, q), dtype=np.int64)
        v = codes.copy()
        for i in range(k):
            planes[i] = v % p
            v //= p
        self._digit = planes
        if q <= 256:
            a = np.arange(q, dtype=np.int64)
            s = (self._digit[:, :, None] + self._digit[:, None, :]) % p
            add = np.zeros((q, q), dtype=np.int64)
            for i in range(k):
                add += s[i] * p**i
            self._add_table = add.astype(self.dtype)
            mul = np.zeros((q, q), dtype=np.int64)
            nz = a[1:]
            mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
            self._mul_table = mul.astype(self.dtype)
        else:
            self._add_table = None
            self._mul_table = None
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[np.arange(1, q)]) % (q - 1)]
        self._inv_table = inv.astype(self.dtype)
        neg = np.zeros(q, dtype=np.int64)
        if p == 2:
            neg = np.arange(q, dtype=np.int64)
        else:
            d = (-self._digit) % p
            for i in range(self.k):
                neg += d[i] * p**i
        self._neg_table = neg.astype(self.dtype)

    # -- scalar ops -------------------------------------------------------
    def add_scalar(self, a, b):
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return int(self.add_arr(np.array([a]), np.array([b]))[0])

    def mul_scalar(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv_scalar(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._inv_table[a])

    def pow_scalar(self, a, e):
        if a == 0:
            return 0 if e else 1
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError("order of zero")
        lg = int(self._log[a])
        from math import gcd

        return (self.q - 1) // gcd(self.q - 1, lg)

    # -- array ops (canonical integer encoding) ---------------------------
    def add_arr(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for i in range(self.k):
            out += ((self._digit[i][a] + self._digit[i][b]) % self.p) * self.p**i
        return out.astype(self.dtype)

    def sub_arr(self, a, b):
        return self.add_arr(a, self._neg_table[b])

    def mul_arr(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        out = np.where((np.asarray(a) == 0) | (np.asarray(b) == 0), 0, out)
        return out.astype(self.dtype)

    def neg_arr(self, a):
        return self._neg_table[a]

    def inv_arr(self, a):
        return self._inv_table[a]

    def scalar_mul_arr(self, c, a):
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy() if isinstance(a, np.ndarray) else a
        if self._mul_table is not None:
            return self._mul_table[c][a]
        return self.mul_arr(np.full(np.shape(a), c, dtype=self.dtype), a)

    # -- plane (coefficient) decomposition --------------------------------
    def to_planes(self, a):
        """uint8 array of shape (k,) + a.shape with GF(p) coordinates."""
        return self._digit[:, a].astype(np.uint8)

    def from_planes(self, planes):
        out = np.zeros(planes.shape[1:], dtype=np.int64)
        for i in range(self.k):
            out += (planes[i].astype(np.int64) % self.p) * self.p**i
        return out.astype(self.dtype)

    # reduction of x^m (k <= m <= 2k-2) to canonical planes, used by gemm
    def xpow_reduction(self):
        """Matrix R with R[m] = planes of x^m for m in [0, 2k-1)."""
        rows = []
        cur = (1,)
        for _ in range(2 * self.k - 1):
            rows.append([cur[i] if i < len(cur) else 0 for i in range(self.k)])
            cur = _pmod(_pmul(cur, (0, 1), self.p), self.modulus, self.p)
        return np.array(rows, dtype=np.int64)

    # -- subfield embedding ------------------------------------------------
    def embedding_into(self, big: "Field"):
        """Value map GF(p^k) -> GF(p^m) for k | m along the canonical tower."""
        if big.p != self.p or big.k % self.k:
            raise UnsupportedField("not a canonical subfield")
        if big is self:
            return np.arange(self.q, dtype=big.dtype)
        e = (big.q - 1) // (self.q - 1)
        table = np.zeros(self.q, dtype=big.dtype)
        for a in range(1, self.q):
            table[a] = big._exp[(int(self._log[a]) * e) % (big.q - 1)]
        return table

    def frobenius_map(self, i: int = 1):
        """Value map a -> a^(p^i)."""
        e = self.p**i
        table = np.zeros(self.q, dtype=self.dtype)
        for a in range(1, self.q):
            table[a] = self._exp[(int(self._log[a]) * e) % (self.q - 1)]
        return table

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (Field, (self.p, self.k))


def field_make(p: int, k: int) -> Field:
    """Public constructor; validates (p, k) and returns the cached field."""
    if not isinstance(p, int) or not isinstance(k, int):
        raise UnsupportedField("p and k must be integers")
    return Field(p, k)

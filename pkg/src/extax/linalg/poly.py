"""Univariate polynomial arithmetic over GF(p^k).

Polynomials are numpy int64 vectors of canonical field values, lowest
degree first.  Everything here exists to find and factor minimal
polynomials of module endomorphisms (peakword search); degrees up to a
few thousand must stay cheap, so modular reduction uses a precomputed
reduction matrix and multiplication runs per coefficient plane.
"""

from __future__ import annotations

import numpy as np

from . import kernels


def trim(f):
    f = np.asarray(f, dtype=np.int64)
    nz = np.nonzero(f)[0]
    if nz.size == 0:
        return np.zeros(1, dtype=np.int64)
    return f[: nz[-1] + 1].copy()


def degree(f):
    f = trim(f)
    return -1 if (len(f) == 1 and f[0] == 0) else len(f) - 1


def pmul(field, f, g):
    """Product via plane-wise convolution."""
    f, g = trim(f), trim(g)
    if degree(f) < 0 or degree(g) < 0:
        return np.zeros(1, dtype=np.int64)
    k, p = field.k, field.p
    fp = field._digit[:, f]
    gp = field._digit[:, g]
    red = field.xpow_reduction()
    n = len(f) + len(g) - 1
    planes = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            conv = np.convolve(fp[i], gp[j])
            for t in range(k):
                coef = red[i + j, t]
                if coef:
                    planes[t] += coef * conv
    planes %= p
    out = np.zeros(n, dtype=np.int64)
    for t in range(k):
        out += planes[t] * p**t
    return trim(out)


def padd(field, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(f)] = f
    b[: len(g)] = g
    return trim(field.add_arr(a.astype(field.dtype), b.astype(field.dtype)).astype(np.int64))


def pscale(field, c, f):
    return trim(field.scalar_mul_arr(c, np.asarray(f, dtype=np.int64).astype(field.dtype)).astype(np.int64))


def monic(field, f):
    f = trim(f)
    lead = int(f[-1])
    if lead == 0 or lead == 1:
        return f
    return pscale(field, field.inv_scalar(lead), f)


def pdivmod(field, f, g):
    f, g = trim(f), trim(g)
    dg = degree(g)
    if dg < 0:
        raise ZeroDivisionError("division by zero polynomial")
    df = degree(f)
    if df < dg:
        return np.zeros(1, dtype=np.int64), f
    inv_lead = field.inv_scalar(int(g[-1]))
    rem = f.astype(field.dtype).copy()
    quo = np.zeros(df - dg + 1, dtype=np.int64)
    garr = g.astype(field.dtype)
    for i in range(df, dg - 1, -1):
        c = int(rem[i])
        if c == 0:
            continue
        m = field.mul_scalar(c, inv_lead)
        quo[i - dg] = m
        seg = field.scalar_mul_arr(m, garr)
        rem[i - dg : i + 1] = field.sub_arr(rem[i - dg : i + 1], seg)
    return trim(quo), trim(rem.astype(np.int64))


def pgcd(field, f, g):
    f, g = trim(f), trim(g)
    while degree(g) >= 0:
        _, r = pdivmod(field, f, g)
        f, g = g, r
    return monic(field, f)


class ModRing:
    """Arithmetic mod a fixed monic polynomial, with a reduction matrix."""

    def __init__(self, field, modulus):
        self.field = field
        self.m = monic(field, modulus)
        self.d = degree(self.m)
        if self.d < 1:
            raise ValueError("modulus must have positive degree")
        # red[i] = x^(d+i) mod m as a canonical row, for i in [0, d)
        red = np.zeros((self.d, self.d), dtype=np.int64)
        cur = field.neg_arr(self.m[: self.d].astype(field.dtype)).astype(np.int64)
        red[0] = cur
        for i in range(1, self.d):
            nxt = np.zeros(self.d, dtype=np.int64)
            nxt[1:] = cur[: self.d - 1]
            if cur[self.d - 1]:
                nxt = field.add_arr(
                    nxt.astype(field.dtype),
                    field.scalar_mul_arr(int(cur[self.d - 1]), red[0].astype(field.dtype)),
                ).astype(np.int64)
            red[i] = nxt
            cur = nxt
        self.red = red

    def reduce(self, f):
        f = trim(f)
        if len(f) <= self.d:
            out = np.zeros(self.d, dtype=np.int64)
            out[: len(f)] = f
            return out
        low = f[: self.d].copy()
        high = f[self.d :]
        contrib = kernels.gemm(
            self.field,
            high.astype(self.field.dtype).reshape(1, -1),
            self.red[: len(high)].astype(self.field.dtype),
        )[0]
        out = self.field.add_arr(low.astype(self.field.dtype), contrib).astype(np.int64)
        return out

    def mul(self, f, g):
        return self.reduce(pmul(self.field, f, g))

    def pow(self, f, e):
        result = np.zeros(self.d, dtype=np.int64)
        result[0] = 1
        base = self.reduce(f)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def berlekamp_massey(field, seq):
    """Monic minimal polynomial of the linear recurrence behind seq."""
    n = len(seq)
    c = np.zeros(n + 2, dtype=np.int64)
    b = np.zeros(n + 2, dtype=np.int64)
    c[0] = b[0] = 1
    length, m, bd = 0, 1, 1
    neg1 = int(field._neg_table[1])
    for i in range(n):
        d = int(seq[i])
        for j in range(1, length + 1):
            if c[j] and seq[i - j]:
                d = field.add_scalar(d, field.mul_scalar(int(c[j]), int(seq[i - j])))
        if d == 0:
            m += 1
            continue
        coef = field.mul_scalar(field.mul_scalar(d, field.inv_scalar(bd)), neg1)
        adj = np.zeros(n + 2, dtype=np.int64)
        adj[m : m + n + 2 - m] = b[: n + 2 - m]
        adj = field.scalar_mul_arr(coef, adj.astype(field.dtype)).astype(np.int64)
        if 2 * length <= i:
            old = c.copy()
            c = field.add_arr(c.astype(field.dtype), adj.astype(field.dtype)).astype(np.int64)
            b, bd = old, d
            length = i + 1 - length
            m = 1
        else:
            c = field.add_arr(c.astype(field.dtype), adj.astype(field.dtype)).astype(np.int64)
            m += 1
    # minimal polynomial = x^L * C(1/x) with C padded to length L+1
    conn = c[: length + 1]
    return monic(field, conn[::-1].copy())


def minpoly_matrix(field, a: np.ndarray, rng, tries: int = 3):
    """Minimal polynomial of a square matrix via Wiedemann sequences."""
    n = a.shape[0]
    af = None
    k, p = field.k, field.p
    planes = field.to_planes(a).astype(np.float64)
    red = field.xpow_reduction()

    def matvec(vplanes):
        out = np.zeros((k, n))
        for i in range(k):
            for j in range(k):
                prod = np.dot(vplanes[i], planes[j])
                for t in range(k):
                    coef = red[i + j, t]
                    if coef:
                        out[t] += coef * prod
        return np.mod(out, p)

    def poly_kills_vector(f, wvec):
        # Horner: acc = f(A) w, using row-vector action
        acc = field.scalar_mul_arr(int(f[-1]), wvec)
        for i in range(len(f) - 2, -1, -1):
            acc = kernels.gemm(field, acc.reshape(1, -1), a)[0]
            if f[i]:
                acc = field.add_arr(acc, field.scalar_mul_arr(int(f[i]), wvec))
        return not np.any(acc)

    result = np.zeros(1, dtype=np.int64)
    result[0] = 1
    for attempt in range(4 * tries):
        u = rng.integers(0, field.q, n)
        v = rng.integers(0, field.q, n)
        if not np.any(u):
            u[int(rng.integers(0, n))] = 1
        if not np.any(v):
            v[int(rng.integers(0, n))] = 1
        vp = field._digit[:, v].astype(np.float64)
        up = field._digit[:, u].astype(np.float64)
        seq = []
        cur = vp
        for _ in range(2 * n + 2):
            # sample u . cur as a field element
            acc = np.zeros(k)
            for i in range(k):
                for j in range(k):
                    s = float(np.dot(up[i], cur[j]))
                    for t in range(k):
                        coef = red[i + j, t]
                        if coef:
                            acc[t] += coef * s
            acc = np.mod(acc, p).astype(np.int64)
            seq.append(int(sum(int(acc[t]) * p**t for t in range(k))))
            cur = matvec(cur)
        mp = berlekamp_massey(field, np.array(seq, dtype=np.int64))
        result = monic(field, pmul(field, result, pdivmod(field, mp, pgcd(field, result, mp))[0]))
        if degree(result) >= n:
            break
        if attempt >= tries - 1:
            checks = [
                poly_kills_vector(result, rng.integers(0, field.q, n).astype(field.dtype))
                for _ in range(4)
            ]
            if all(checks):
                break
    return result


def _derivative(field, f):
    if len(f) <= 1:
        return np.zeros(1, dtype=np.int64)
    out = np.array(
        [field.mul_scalar(int(f[i]), i % field.p) for i in range(1, len(f))],
        dtype=np.int64,
    )
    return trim(out)


def _squarefree_part(field, f):
    """Product of the distinct irreducible factors of f."""
    f = monic(field, trim(f))
    if degree(f) < 1:
        return f
    df = _derivative(field, f)
    if degree(df) < 0:
        # f = g(x^p): coefficientwise p-th root, c -> c^(q/p)
        root = f[:: field.p].copy()
        e = field.q // field.p
        root = np.array([field.pow_scalar(int(c), e) for c in root], dtype=np.int64)
        return _squarefree_part(field, trim(root))
    g = pgcd(field, f, df)
    if degree(g) == 0:
        return f
    quo, _ = pdivmod(field, f, g)  # quo is squarefree but may miss p-power factors
    rest = _squarefree_part(field, g)
    d = pgcd(field, quo, rest)
    if degree(d) > 0:
        rest, _ = pdivmod(field, rest, d)
    return monic(field, pmul(field, quo, rest))


def distinct_degree_split(field, f):
    """Squarefree monic f -> list of (product of irreducibles of degree d, d)."""
    ring = ModRing(field, f)
    out = []
    x = np.array([0, 1], dtype=np.int64)
    h = ring.reduce(x)
    rest = f.copy()
    d = 0
    while degree(rest) > 0:
        d += 1
        if 2 * d > degree(rest):
            out.append((monic(field, rest), degree(rest)))
            break
        h = ring.pow(trim(h), field.q)  # h = x^(q^d) mod f
        diff = padd(field, trim(h), pscale(field, int(field._neg_table[1]), x))
        g = pgcd(field, rest, diff)
        if degree(g) > 0:
            out.append((g, d))
            rest, _ = pdivmod(field, rest, g)
    return out


def equal_degree_factor(field, f, d, rng):
    """Split a product of degree-d irreducibles (Cantor-Zassenhaus)."""
    f = monic(field, f)
    n = degree(f)
    if n == d:
        return [f]
    ring = ModRing(field, f)
    while True:
        g = rng.integers(0, field.q, n).astype(np.int64)
        g = trim(g)
        if degree(g) < 1:
            continue
        if field.p == 2:
            # trace map over GF(2^k): T(g) = sum g^(2^i), i < d*k
            t = ring.reduce(g)
            acc = t.copy()
            for _ in range(d * field.k - 1):
                t = ring.mul(t, t)
                acc = padd(field, acc, t)
                acc = ring.reduce(acc)
            h = pgcd(field, f, trim(acc))
        else:
            e = (field.q**d - 1) // 2
            t = ring.pow(g, e)
            t = padd(field, trim(t), np.array([int(field._neg_table[1])], dtype=np.int64))
            h = pgcd(field, f, t)
        if 0 < degree(h) < n:
            left = equal_degree_factor(field, h, d, rng)
            right = equal_degree_factor(field, pdivmod(field, f, h)[0], d, rng)
            return left + right


def factor(field, f, rng):
    """Monic irreducible factors with multiplicities: list of (poly, mult)."""
    f = monic(field, trim(f))
    if degree(f) < 1:
        return []
    sq = _squarefree_part(field, f)
    pieces = []
    for block, d in distinct_degree_split(field, sq):
        pieces.extend(equal_degree_factor(field, block, d, rng))
    out = []
    for piece in pieces:
        mult = 0
        rem = f
        while True:
            quo, r = pdivmod(field, rem, piece)
            if degree(r) != -1:
                break
            mult += 1
            rem = quo
        out.append((piece, mult))
    out.sort(key=lambda t: (degree(t[0]), [int(c) for c in t[0]]))
    return out


def eval_matrix(field, f, a: np.ndarray) -> np.ndarray:
    """f(a) by Horner; intended for low-degree f."""
    n = a.shape[0]
    f = trim(f)
    out = np.zeros((n, n), dtype=field.dtype)
    out[np.arange(n), np.arange(n)] = int(f[-1])
    for i in range(len(f) - 2, -1, -1):
        out = kernels.gemm(field, out, a)
        if f[i]:
            idx = np.arange(n)
            out[idx, idx] = field.add_arr(out[idx, idx], np.full(n, int(f[i]), dtype=field.dtype))
    return out

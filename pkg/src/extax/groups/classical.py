"""Programmatic generators for SL, Sp and SU.

Each family is generated by its simple-root subgroups (positive and
negative) over an F_p-basis of the parameter field, which generates the
universal group; the constructors verify determinant/form conditions at
build time.  Central scalars are appended as designated extra
generators, so central elements have single-letter words.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from ..linalg import Mat, field_make


def _pk(q):
    for p in (2, 3, 5, 7):
        if q % p == 0:
            k = 0
            while q > 1:
                q //= p
                k += 1
            return p, k
    raise ValueError(f"unsupported q={q}")


def _elem(field, n, entries):
    a = np.zeros((n, n), dtype=field.dtype)
    a[np.arange(n), np.arange(n)] = 1
    for (i, j), v in entries.items():
        a[i, j] = v
    return Mat(field, a)


def _basis_elements(field):
    """1, x, ..., x^(k-1) as canonical integers."""
    if field.k == 1:
        return [1]
    out = []
    cur = 1
    for _ in range(field.k):
        out.append(cur)
        cur = field.mul_scalar(cur, field.p)  # p encodes x
    return out


def _span_basis(field, vals, target):
    """Greedy F_p-basis extracted from a list of canonical values."""
    picked = []
    closure = {0}
    for v in vals:
        if v in closure:
            continue
        picked.append(v)
        closure = {
            field.add_scalar(s, field.mul_scalar(c, v))
            for s in closure
            for c in range(field.p)
        }
        if len(picked) == target:
            break
    return picked


def sl_generators(n, q):
    p, k = _pk(q)
    field = field_make(p, k)
    gens = []
    for i in range(n - 1):
        for t in _basis_elements(field):
            gens.append(_elem(field, n, {(i, i + 1): t}))
            gens.append(_elem(field, n, {(i + 1, i): t}))
    central = []
    d = gcd(n, q - 1)
    if d > 1:
        zeta = field.pow_scalar(int(field._exp[1]), (q - 1) // d)
        gens.append(Mat(field, np.diag(np.full(n, zeta)).astype(field.dtype)))
        central.append((len(gens) - 1, d))
    return field, gens, central, None


def sp_generators(n, q):
    """Sp(n, q), n = 2m; form B(u, v) = u J v^T, J = [[0, I], [-I, 0]]."""
    m = n // 2
    p, k = _pk(q)
    field = field_make(p, k)
    jmat = np.zeros((n, n), dtype=field.dtype)
    for i in range(m):
        jmat[i, m + i] = 1
        jmat[m + i, i] = field._neg_table[1]
    jm = Mat(field, jmat)
    gens = []
    neg = field._neg_table
    for t in _basis_elements(field):
        for i in range(m - 1):
            gens.append(_elem(field, n, {(i, i + 1): t, (m + i + 1, m + i): int(neg[t])}))
            gens.append(_elem(field, n, {(i + 1, i): t, (m + i, m + i + 1): int(neg[t])}))
        gens.append(_elem(field, n, {(m - 1, n - 1): t}))
        gens.append(_elem(field, n, {(n - 1, m - 1): t}))
    for g in gens:
        assert (g @ jm @ g.t()) == jm, "symplectic form not preserved"
    central = []
    if p != 2:
        gens.append(Mat(field, np.diag(np.full(n, int(neg[1]))).astype(field.dtype)))
        central.append((len(gens) - 1, 2))
    return field, gens, central, ("symplectic", jm)


def su_generators(n, q):
    """SU(n, q) in SL(n, q^2); form B(u, v) = u J (v^sigma)^T, J antidiagonal."""
    p, k = _pk(q)
    field = field_make(p, 2 * k)
    frob = field.frobenius_map(k)  # sigma: x -> x^q
    neg = field._neg_table
    jmat = np.zeros((n, n), dtype=field.dtype)
    for i in range(n):
        jmat[i, n - 1 - i] = 1
    jm = Mat(field, jmat)

    def preserves(g):
        return (g @ jm @ Mat(field, frob[g.a]).t()) == jm

    def checked(entries):
        g = _elem(field, n, entries)
        assert preserves(g), f"unitary form violated by {entries}"
        return g

    gens = []
    # commuting sigma-orbits {alpha_i, alpha_(n-i)}, 1-based i with n-2i >= 2
    for i in range(1, (n - 1) // 2 + (1 if n % 2 == 0 else 0) + 1):
        if n - 2 * i < 2:
            break
        a, c = i - 1, n - i - 1  # 0-based rows of E_{i,i+1} and E_{n-i,n-i+1}
        for t in _basis_elements(field):
            s = int(neg[frob[t]])
            gens.append(checked({(a, a + 1): t, (c, c + 1): s}))
            gens.append(checked({(a + 1, a): t, (c + 1, c): s}))
    if n % 2 == 0:
        # sigma-fixed middle root: I + t E, trace(t) = 0
        m = n // 2 - 1
        tr0 = [t for t in range(1, field.q) if field.add_scalar(t, int(frob[t])) == 0]
        for t in _span_basis(field, tr0, k):
            gens.append(checked({(m, m + 1): t}))
            gens.append(checked({(m + 1, m): t}))
    else:
        # middle Heisenberg block on rows m, m+1, m+2
        m = (n - 3) // 2
        corner_ok = [b for b in range(1, field.q) if _corner_valid(field, frob, b)]
        for b in _span_basis(field, corner_ok, k):
            gens.append(checked({(m, m + 2): b}))
            gens.append(checked({(m + 2, m): b}))
        for t in _basis_elements(field):
            c = int(neg[frob[t]])
            b = _solve_corner(field, frob, t)
            gens.append(checked({(m, m + 1): t, (m + 1, m + 2): c, (m, m + 2): b}))
            gens.append(checked({(m + 1, m): t, (m + 2, m + 1): c, (m + 2, m): b}))
    central = []
    d = gcd(n, q + 1)
    if d > 1:
        zeta = field.pow_scalar(int(field._exp[1]), (field.q - 1) // d)
        gens.append(Mat(field, np.diag(np.full(n, zeta)).astype(field.dtype)))
        central.append((len(gens) - 1, d))
    return field, gens, central, ("unitary", jm)


def _corner_valid(field, frob, b):
    return field.add_scalar(b, int(frob[b])) == 0


def _solve_corner(field, frob, t):
    """b with b + b^q = -t^(1+q)."""
    target = int(field._neg_table[field.mul_scalar(t, int(frob[t]))])
    for b in range(field.q):
        if field.add_scalar(b, int(frob[b])) == target:
            return b
    raise AssertionError("no corner entry found")

"""Dense matrix kernels over GF(p^k).

Matrices are numpy arrays in the canonical integer encoding of field.py.
Multiplication runs on float64 BLAS after decomposing extension-field
entries into GF(p) coefficient planes; all intermediate integers stay far
below 2^53, so every result is exact.  GF(2) has bit-packed kernels
(uint64 words,四-Russians style multiply) used above a small cutoff.
Elimination is blocked: panels of pivots are found with deferred updates
and flushed through one matrix product per panel.
"""

from __future__ import annotations

import numpy as np

PANEL = 96
_PACK_CUTOFF = 64  # min(m, n) above which GF(2) uses packed kernels


# -- GF(2) packed helpers ------------------------------------------------

def pack2(a: np.ndarray) -> np.ndarray:
    """Rows of a 0/1 matrix packed into little-endian uint64 words."""
    m, n = a.shape
    words = (n + 63) // 64
    by = np.packbits(a.astype(np.uint8), axis=1, bitorder="little")
    buf = np.zeros((m, words * 8), dtype=np.uint8)
    buf[:, : by.shape[1]] = by
    return np.ascontiguousarray(buf).view(np.uint64)


def unpack2(p: np.ndarray, n: int) -> np.ndarray:
    by = np.ascontiguousarray(p).view(np.uint8)[:, : (n + 7) // 8]
    return np.unpackbits(by, axis=1, bitorder="little", count=n)


def mul2_packed(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """GF(2) product of 0/1 matrices via 8-row XOR tables."""
    m, kk = a.shape
    _, n = b.shape
    pb = pack2(b)
    w = pb.shape[1]
    c = np.zeros((m, w), dtype=np.uint64)
    abytes = pack2(a).view(np.uint8)
    for g0 in range(0, kk, 8):
        rows = pb[g0 : g0 + 8]
        size = 1 << rows.shape[0]
        tbl = np.zeros((size, w), dtype=np.uint64)
        for i in range(1, size):
            low = i & (-i)
            tbl[i] = tbl[i ^ low] ^ rows[low.bit_length() - 1]
        idx = abytes[:, g0 // 8]
        if size < 256:
            idx = idx & (size - 1)
        c ^= tbl[idx]
    return unpack2(c, n)


def _rref2_packed(a: np.ndarray):
    p = pack2(a)
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        w, bit = divmod(c, 64)
        col = (p[r:, w] >> np.uint64(bit)) & np.uint64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        g = r + int(nz[0])
        if g != r:
            p[[r, g]] = p[[g, r]]
        colall = (p[:, w] >> np.uint64(bit)) & np.uint64(1)
        colall[r] = 0
        rows = np.nonzero(colall)[0]
        if rows.size:
            p[rows] ^= p[r]
        pivots.append(c)
        r += 1
    return unpack2(p, n), r, pivots


# -- generic product -----------------------------------------------------

def gemm(field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product over the field; shapes (m, t) x (t, n)."""
    m, t = a.shape
    t2, n = b.shape
    if t != t2:
        raise ValueError("inner dimensions differ")
    if t == 0 or m == 0 or n == 0:
        return np.zeros((m, n), dtype=field.dtype)
    if field.q == 2:
        if min(m, n, t) >= _PACK_CUTOFF:
            return mul2_packed(a, b).astype(field.dtype)
        c = np.dot(a.astype(np.float64), b.astype(np.float64))
        return (c.astype(np.int64) & 1).astype(field.dtype)
    if field.k == 1:
        c = np.dot(a.astype(np.float64), b.astype(np.float64))
        return np.mod(c, field.p).astype(field.dtype)
    k = field.k
    ap = field.to_planes(a).astype(np.float64)
    bp = field.to_planes(b).astype(np.float64)
    acc = [None] * (2 * k - 1)
    for i in range(k):
        for j in range(k):
            cij = np.dot(ap[i], bp[j])
            acc[i + j] = cij if acc[i + j] is None else acc[i + j] + cij
    red = field.xpow_reduction()
    planes = np.zeros((k, m, n), dtype=np.float64)
    for d in range(2 * k - 1):
        if acc[d] is None:
            continue
        ad = np.mod(acc[d], field.p)
        for tdeg in range(k):
            coef = red[d, tdeg]
            if coef:
                planes[tdeg] += coef * ad
    planes = np.mod(planes, field.p).astype(np.uint8)
    return field.from_planes(planes)


# -- elimination ---------------------------------------------------------
#
# The echelon pass keeps the whole matrix as float64 coefficient planes.
# Entries are exact integers throughout: canonical multipliers are < p,
# pivot-row tails are reduced mod p before each trailing update, so the
# trailing block grows by at most PANEL*(p-1)^2 per panel and stays far
# below 2^53.

def _scalar_coeff_matrix(field, digits):
    """k x k integer matrix C with (C @ planes) = scalar * element."""
    red = field.xpow_reduction()
    k = field.k
    c = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        if digits[i]:
            for j in range(k):
                c[:, j] += digits[i] * red[i + j]
    return c % field.p


def _pair_dot(red, k, amats, bmats, out=None):
    """Sum of plane products with x-power reduction: result planes (k, ...)."""
    acc = [None] * (2 * k - 1)
    for i in range(k):
        for j in range(k):
            prod = np.dot(amats[i], bmats[j])
            d = i + j
            acc[d] = prod if acc[d] is None else acc[d] + prod
    shape = acc[0].shape
    res = np.zeros((k,) + shape) if out is None else out
    for d in range(2 * k - 1):
        if acc[d] is None:
            continue
        for t in range(k):
            coef = red[d, t]
            if coef:
                res[t] += coef * acc[d]
    return res


def _echelon_generic(field, a: np.ndarray, writeback: bool = True):
    """In-place echelon form with unit pivots; returns (rank, pivots).

    Two-level deferral: pivots within a panel only probe corrected
    columns; the panel body and the trailing block are each updated by
    one product per plane pair at panel end.
    """
    p, k = field.p, field.k
    m, n = a.shape
    if m == 0 or n == 0:
        return 0, []
    red = field.xpow_reduction()
    w = field.to_planes(a).astype(np.float64)  # (k, m, n)
    r = 0
    pivots = []
    for c0 in range(0, n, PANEL):
        if r == m:
            break
        c1 = min(c0 + PANEL, n)
        bw = c1 - c0
        rows = m - r
        panel = np.mod(w[:, r:, c0:c1], p)  # (k, rows, bw) canonical
        mi = np.zeros((k, rows, bw))  # multiplier planes (canonical)
        snap = np.zeros((k, bw, bw))  # corrected, scaled pivot panel-rows
        scales = []
        s = 0
        loc = []
        for j in range(bw):
            if r + s == m:
                break
            col = panel[:, s:, j].copy()  # (k, rows-s)
            if s:
                for i in range(k):
                    for jj in range(k):
                        v = np.dot(mi[i, s:, :s], snap[jj, :s, j])
                        for t in range(k):
                            coef = red[i + jj, t]
                            if coef:
                                col[t] -= coef * v
            col = np.mod(col, p)
            nz = np.nonzero(np.any(col != 0, axis=0))[0]
            if nz.size == 0:
                continue
            g = s + int(nz[0])
            if g != s:
                panel[:, [s, g]] = panel[:, [g, s]]
                mi[:, [s, g]] = mi[:, [g, s]]
                w[:, [r + s, r + g]] = w[:, [r + g, r + s]]
                col[:, [0, int(nz[0])]] = col[:, [int(nz[0]), 0]]
            # correct the pivot panel-row, normalize, snapshot it
            prow = panel[:, s, :].copy()
            if s:
                for i in range(k):
                    for jj in range(k):
                        v = np.dot(mi[i, s, :s], snap[jj, :s, :])
                        for t in range(k):
                            coef = red[i + jj, t]
                            if coef:
                                prow[t] -= coef * v
            prow = np.mod(prow, p)
            pdig = [int(col[i, 0]) for i in range(k)]
            pval = sum(d * p**i for i, d in enumerate(pdig))
            cinv = _scalar_coeff_matrix(field, field._digit[:, field.inv_scalar(pval)])
            prow = np.mod(np.tensordot(cinv, prow, axes=(1, 0)), p)
            scales.append(cinv)
            snap[:, s, :] = prow
            mi[:, s + 1 :, s] = col[:, 1:]
            loc.append(j)
            s += 1
        if s == 0:
            w[:, r:, c0:c1] = panel
            continue
        # finalize panel rows: pivots from snapshots, the rest via the gemm
        panel[:, :s, :] = snap[:, :s, :]
        if s < rows:
            corr = _pair_dot(red, k, mi[:, s:, :s], snap[:, :s, :])
            panel[:, s:, :] = np.mod(panel[:, s:, :] - corr, p)
        # pivot-row tails: triangular pass, then the trailing update
        if c1 < n:
            tails = w[:, r : r + s, c1:]
            for i in range(s):
                ti = np.mod(tails[:, i, :], p)
                if i:
                    for a_ in range(k):
                        for b_ in range(k):
                            v = np.dot(mi[a_, i, :i], tails[b_, :i, :])
                            for t in range(k):
                                coef = red[a_ + b_, t]
                                if coef:
                                    ti[t] -= coef * v
                    ti = np.mod(ti, p)
                tails[:, i, :] = np.mod(np.tensordot(scales[i], ti, axes=(1, 0)), p)
            if s < rows:
                corr = _pair_dot(red, k, mi[:, s:, :s], np.mod(tails[:, :s, :], p))
                w[:, r + s :, c1:] -= corr
        w[:, r:, c0:c1] = panel
        pivots.extend(c0 + j for j in loc)
        r += s
    if writeback:
        a[:] = field.from_planes(np.mod(w, p).astype(np.uint8))
        a[r:] = 0
    return r, pivots


def _invert_unit_upper(field, t: np.ndarray) -> np.ndarray:
    """Inverse of a unit upper-triangular matrix, small sizes only."""
    p, k = field.p, field.k
    b = t.shape[0]
    red = field.xpow_reduction()
    tp = field.to_planes(t).astype(np.float64)
    x = np.zeros((k, b, b))
    x[:, np.arange(b), np.arange(b)] = field._digit[:, 1][:, None]
    for j in range(b - 1, -1, -1):
        coeff = tp[:, :j, j]  # (k, j) canonical
        if not np.any(coeff):
            continue
        for i in range(k):
            for jj in range(k):
                prod = np.outer(coeff[i], x[jj, j, :])
                for tt in range(k):
                    c = red[i + jj, tt]
                    if c:
                        x[tt, :j, :] -= c * prod
        x[:, :j, :] = np.mod(x[:, :j, :], p)
    return field.from_planes(np.mod(x, p).astype(np.uint8))


def _backsub(field, red: np.ndarray, pivots):
    """Clear above-pivot entries of an echelon matrix, in place."""
    rank = len(pivots)
    for t0 in range(0, rank, PANEL):
        t1 = min(t0 + PANEL, rank)
        pc = list(pivots[t0:t1])
        tmat = np.ascontiguousarray(red[t0:t1][:, pc])
        if not np.array_equal(tmat, np.eye(t1 - t0, dtype=red.dtype)):
            tinv = _invert_unit_upper(field, tmat)
            red[t0:t1] = gemm(field, tinv, np.ascontiguousarray(red[t0:t1]))
        if t0:
            coef = np.ascontiguousarray(red[:t0][:, pc])
            if np.any(coef):
                red[:t0] = field.sub_arr(red[:t0], gemm(field, coef, red[t0:t1]))
    return red


def _backsolve_upper(field, u: np.ndarray, pivots, b: np.ndarray) -> np.ndarray:
    """Solve T @ x = b where T = u[:, pivots] is unit upper-triangular."""
    rank = len(pivots)
    w = b.shape[1]
    x = np.zeros((rank, w), dtype=field.dtype)
    rhs = b.copy()
    for t1 in range(rank, 0, -PANEL):
        t0 = max(0, t1 - PANEL)
        if t1 < rank:
            coef = np.ascontiguousarray(u[t0:t1][:, pivots[t1:]])
            if np.any(coef):
                rhs[t0:t1] = field.sub_arr(rhs[t0:t1], gemm(field, coef, x[t1:]))
        tmat = np.ascontiguousarray(u[t0:t1][:, pivots[t0:t1]])
        if np.array_equal(tmat, np.eye(t1 - t0, dtype=u.dtype)):
            x[t0:t1] = rhs[t0:t1]
        else:
            tinv = _invert_unit_upper(field, tmat)
            x[t0:t1] = gemm(field, tinv, np.ascontiguousarray(rhs[t0:t1]))
    return x


def rref(field, a: np.ndarray):
    """Reduced row-echelon form; returns (rref, rank, pivot columns)."""
    m, n = a.shape
    if m == 0 or n == 0:
        return a.copy(), 0, []
    if field.q == 2 and min(m, n) >= _PACK_CUTOFF:
        red, rank, pivots = _rref2_packed(a)
        return red.astype(field.dtype), rank, pivots
    work = a.astype(field.dtype).copy()
    rank, pivots = _echelon_generic(field, work)
    _backsub(field, work[:rank], pivots)
    work[rank:] = 0
    return work, rank, pivots


def rank(field, a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if field.q == 2 and min(a.shape) >= _PACK_CUTOFF:
        return _rref2_packed(a)[1]
    work = a.astype(field.dtype).copy()
    rk, _ = _echelon_generic(field, work, writeback=False)
    return rk


def nullspace(field, a: np.ndarray) -> np.ndarray:
    """Rows form a basis of the right kernel {v : a v^T = 0}."""
    m, n = a.shape
    if m == 0:
        return np.eye(n, dtype=field.dtype)
    if field.q == 2 and min(m, n) >= _PACK_CUTOFF:
        red, rk, pivots = _rref2_packed(a)
        red = red.astype(field.dtype)
    else:
        work = a.astype(field.dtype).copy()
        rk, pivots = _echelon_generic(field, work)
        red = work
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=field.dtype)
    if free:
        basis[np.arange(len(free)), free] = 1
        if rk:
            rhs = field.neg_arr(np.ascontiguousarray(red[:rk][:, free]))
            if field.q == 2 and min(m, n) >= _PACK_CUTOFF:
                x = rhs  # already fully reduced
            else:
                x = _backsolve_upper(field, red[:rk], pivots, rhs)
            basis[:, pivots] = x.T
    return basis


def left_nullspace(field, a: np.ndarray) -> np.ndarray:
    """Rows x with x @ a = 0."""
    return nullspace(field, np.ascontiguousarray(a.T))


def inverse(field, a: np.ndarray) -> np.ndarray:
    m, n = a.shape
    if m != n:
        raise ValueError("inverse of non-square matrix")
    aug = np.zeros((m, 2 * m), dtype=field.dtype)
    aug[:, :m] = a
    aug[np.arange(m), m + np.arange(m)] = 1
    if field.q == 2 and m >= _PACK_CUTOFF:
        red, rk, pivots = _rref2_packed(aug)
        red = red.astype(field.dtype)
    else:
        rk, pivots = _echelon_generic(field, aug)
        red = aug
    if rk < m or pivots[:m] != list(range(m)):
        raise ZeroDivisionError("matrix is singular")
    if field.q == 2 and m >= _PACK_CUTOFF:
        return np.ascontiguousarray(red[:m, m:])
    return _backsolve_upper(field, red[:m], pivots[:m], np.ascontiguousarray(red[:m, m:]))


def reduce_rows(field, red: np.ndarray, pivots, x: np.ndarray):
    """Reduce rows of x against an RREF basis.

    Returns (residual, coeffs) with residual = x - coeffs @ red and
    residual zero in all pivot columns.
    """
    if len(pivots) == 0 or x.shape[0] == 0:
        return x.copy(), np.zeros((x.shape[0], 0), dtype=field.dtype)
    coeffs = np.ascontiguousarray(x[:, list(pivots)])
    resid = field.sub_arr(x, gemm(field, coeffs, red))
    return resid, coeffs


def in_rowspace(field, red: np.ndarray, pivots, x: np.ndarray) -> bool:
    resid, _ = reduce_rows(field, red, pivots, x)
    return not np.any(resid)


# -- naive references (tests compare against these) -----------------------

def naive_gemm(field, a, b):
    m, t = a.shape
    _, n = b.shape
    out = np.zeros((m, n), dtype=field.dtype)
    for i in range(m):
        for j in range(n):
            s = 0
            for l in range(t):
                s = field.add_scalar(s, field.mul_scalar(int(a[i, l]), int(b[l, j])))
            out[i, j] = s
    return out


def naive_rref(field, a):
    work = a.astype(np.int64).copy()
    m, n = work.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if work[i, c]:
                pr = i
                break
        if pr is None:
            continue
        work[[r, pr]] = work[[pr, r]]
        inv = field.inv_scalar(int(work[r, c]))
        for j in range(n):
            work[r, j] = field.mul_scalar(inv, int(work[r, j]))
        for i in range(m):
            if i != r and work[i, c]:
                f = int(work[i, c])
                for j in range(n):
                    work[i, j] = field.add_scalar(
                        int(work[i, j]),
                        field.mul_scalar(f, field.neg_arr(np.array(work[r, j]))),
                    )
        pivots.append(c)
        r += 1
    return work.astype(field.dtype), r, pivots

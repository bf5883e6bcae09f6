"""Modules over a registered group: generator-image tuples plus the
constructions the identification recipes use (dual, tensor, symmetric
and exterior powers, Frobenius twist, direct sum).

A Rep stores one image matrix per group generator, over the group's
field or a canonical extension of it.  Labels follow the table corpus
conventions: ``[b]DIM[_i|_(i,j)][*]``, e.g. ``3*``, ``15_1``,
``9_(1,2)``, ``b9_(1,2)*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch, GroupMismatch
from .linalg import Mat
from .linalg.kernels import gemm, inverse


@dataclass(frozen=True, order=True)
class SimpleLabel:
    dim: int
    subscript: tuple = ()  # () for none, (1,) for 15_1, (1,2) for 9_(1,2)
    star: bool = False
    bar: bool = False

    def render(self) -> str:
        out = "b" if self.bar else ""
        out += str(self.dim)
        if len(self.subscript) == 1:
            out += f"_{self.subscript[0]}"
        elif len(self.subscript) > 1:
            out += "_(" + ",".join(str(s) for s in self.subscript) + ")"
        if self.star:
            out += "*"
        return out

    @classmethod
    def parse(cls, text: str) -> "SimpleLabel":
        m = re.fullmatch(r"(b?)(\d+)(?:_(\d+)|_\((\d+(?:,\d+)*)\))?(\*?)", text)
        if not m:
            raise ValueError(f"bad label {text!r}")
        bar, dim, sub1, subn, star = m.groups()
        if sub1:
            sub = (int(sub1),)
        elif subn:
            sub = tuple(int(x) for x in subn.split(","))
        else:
            sub = ()
        return cls(dim=int(dim), subscript=sub, star=bool(star), bar=bool(bar))

    def dual(self) -> "SimpleLabel":
        return SimpleLabel(self.dim, self.subscript, not self.star, self.bar)

    def __str__(self):
        return self.render()


class Rep:
    """A module given by its generator images (row-vector action)."""

    __slots__ = ("group", "field", "images", "label", "_invs")

    def __init__(self, group, images, label=None):
        self.group = group
        self.images = list(images)
        self.field = self.images[0].field
        self.label = label
        self._invs = None

    @property
    def dim(self) -> int:
        return self.images[0].rows

    def image_inverses(self):
        if self._invs is None:
            self._invs = [Mat(g.field, inverse(g.field, g.a)) for g in self.images]
        return self._invs

    def act_word(self, word) -> Mat:
        """Evaluate a signed-letter word in this module."""
        if not word:
            return Mat.identity(self.field, self.dim)
        acc = None
        for letter in word:
            m = self.images[letter - 1] if letter > 0 else self.image_inverses()[-letter - 1]
            acc = m if acc is None else acc @ m
        return acc

    def with_label(self, label) -> "Rep":
        out = Rep(self.group, self.images, label)
        out._invs = self._invs
        return out

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"Rep({self.group.name}, dim {self.dim}{tag})"


def natural(group, rep_index: int = 0, label=None) -> Rep:
    return Rep(group, group.reps[rep_index], label)


def dual(m: Rep) -> Rep:
    invs = m.image_inverses()
    images = [Mat(g.field, np.ascontiguousarray(g.a.T)) for g in invs]
    label = m.label.dual() if m.label else None
    return Rep(m.group, images, label)


def tensor(a: Rep, b: Rep) -> Rep:
    if a.group is not b.group:
        raise GroupMismatch(f"{a.group.name} vs {b.group.name}")
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return Rep(a.group, [x.kron(y) for x, y in zip(a.images, b.images)])


def direct_sum(a: Rep, b: Rep) -> Rep:
    if a.group is not b.group:
        raise GroupMismatch(f"{a.group.name} vs {b.group.name}")
    images = []
    for x, y in zip(a.images, b.images):
        m = np.zeros((x.rows + y.rows, x.cols + y.cols), dtype=x.field.dtype)
        m[: x.rows, : x.cols] = x.a
        m[x.rows :, x.cols :] = y.a
        images.append(Mat(x.field, m))
    return Rep(a.group, images)


def _sym2_matrix(field, g):
    n = g.rows
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    idx_i = np.array([p[0] for p in pairs])
    idx_j = np.array([p[1] for p in pairs])
    # action on monomial x_i x_j: rows indexed by source pair, cols by target
    gi = g.a[idx_i][:, :, None]  # (N, n, 1) -> entries g[i,k]
    gj = g.a[idx_j][:, None, :]  # (N, 1, n) -> entries g[j,l]
    prod = field.mul_arr(np.broadcast_to(gi, (len(pairs), n, n)),
                         np.broadcast_to(gj, (len(pairs), n, n)))
    # coefficient of x_k x_l (k<l): g[i,k]g[j,l] + g[i,l]g[j,k]; (k==l): g[i,k]g[j,k]
    out = np.zeros((len(pairs), len(pairs)), dtype=field.dtype)
    tri_k = idx_i  # reuse pair list for target indexing
    for col, (k, l) in enumerate(pairs):
        if k == l:
            out[:, col] = prod[:, k, k]
        else:
            out[:, col] = field.add_arr(prod[:, k, l], prod[:, l, k])
    return Mat(field, out)


def _ext2_matrix(field, g):
    n = g.rows
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = np.zeros((len(pairs), len(pairs)), dtype=field.dtype)
    gi = g.a[np.array([p[0] for p in pairs])][:, :, None]
    gj = g.a[np.array([p[1] for p in pairs])][:, None, :]
    prod = field.mul_arr(np.broadcast_to(gi, (len(pairs), n, n)),
                         np.broadcast_to(gj, (len(pairs), n, n)))
    for col, (k, l) in enumerate(pairs):
        out[:, col] = field.sub_arr(prod[:, k, l], prod[:, l, k])
    return Mat(field, out)


def _sym3_matrix(field, g):
    n = g.rows
    trips = [(i, j, k) for i in range(n) for j in range(i, n) for k in range(j, n)]
    tindex = {t: c for c, t in enumerate(trips)}
    out = np.zeros((len(trips), len(trips)), dtype=field.dtype)
    import itertools

    for row, (i, j, k) in enumerate(trips):
        # expand (sum g[i,a] x_a)(sum g[j,b] x_b)(sum g[k,c] x_c)
        acc = {}
        for a in range(n):
            gia = int(g.a[i, a])
            if not gia:
                continue
            for b in range(n):
                gjb = field.mul_scalar(gia, int(g.a[j, b]))
                if not gjb:
                    continue
                row_k = g.a[k]
                for c in np.nonzero(row_k)[0]:
                    coef = field.mul_scalar(gjb, int(row_k[c]))
                    key = tuple(sorted((a, b, int(c))))
                    acc[key] = field.add_scalar(acc.get(key, 0), coef)
        for key, coef in acc.items():
            if coef:
                out[row, tindex[key]] = coef
    return Mat(field, out)


def _ext3_matrix(field, g):
    n = g.rows
    trips = [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)]
    tindex = {t: c for c, t in enumerate(trips)}
    out = np.zeros((len(trips), len(trips)), dtype=field.dtype)
    neg = field._neg_table

    def sort_sign(a, b, c):
        perm = [a, b, c]
        sign = 1
        for x in range(2):
            for y in range(2 - x):
                if perm[y] > perm[y + 1]:
                    perm[y], perm[y + 1] = perm[y + 1], perm[y]
                    sign = -sign
        if perm[0] == perm[1] or perm[1] == perm[2]:
            return None, 0
        return tuple(perm), sign

    for row, (i, j, k) in enumerate(trips):
        acc = {}
        for a in np.nonzero(g.a[i])[0]:
            gia = int(g.a[i, a])
            for b in np.nonzero(g.a[j])[0]:
                gjb = field.mul_scalar(gia, int(g.a[j, b]))
                for c in np.nonzero(g.a[k])[0]:
                    coef = field.mul_scalar(gjb, int(g.a[k, c]))
                    key, sign = sort_sign(int(a), int(b), int(c))
                    if key is None:
                        continue
                    if sign < 0:
                        coef = int(neg[coef])
                    acc[key] = field.add_scalar(acc.get(key, 0), coef)
        for key, coef in acc.items():
            if coef:
                out[row, tindex[key]] = coef
    return Mat(field, out)


def sym_power(m: Rep, k: int) -> Rep:
    """Quotient symmetric power with the lexicographic monomial basis."""
    if k == 2:
        images = [_sym2_matrix(m.field, g) for g in m.images]
    elif k == 3:
        images = [_sym3_matrix(m.field, g) for g in m.images]
    else:
        raise ValueError("only k in {2,3}")
    return Rep(m.group, images)


def ext_power(m: Rep, k: int) -> Rep:
    if k == 2:
        images = [_ext2_matrix(m.field, g) for g in m.images]
    elif k == 3:
        images = [_ext3_matrix(m.field, g) for g in m.images]
    else:
        raise ValueError("only k in {2,3}")
    return Rep(m.group, images)


def frobenius_twist(m: Rep, i: int) -> Rep:
    if i % m.field.k == 0:
        return Rep(m.group, m.images, m.label)
    return Rep(m.group, [g.frobenius(i) for g in m.images])


def extend_field(m: Rep, big) -> Rep:
    if big is m.field:
        return m
    return Rep(m.group, [g.embed(big) for g in m.images], m.label)


def sub_rep(m: Rep, basis_rref, pivots) -> Rep:
    """Action restricted to an invariant rowspace (basis in RREF)."""
    field = m.field
    images = []
    for g in m.images:
        img = gemm(field, basis_rref, g.a)
        from .linalg.kernels import reduce_rows

        resid, coeff = reduce_rows(field, basis_rref, pivots, img)
        if resid.any():
            raise ValueError("rowspace is not invariant")
        images.append(Mat(field, coeff))
    return Rep(m.group, images)


def quotient_rep(m: Rep, basis_rref, pivots) -> Rep:
    """Action induced on the quotient by an invariant rowspace."""
    field = m.field
    n = m.dim
    keep = [i for i in range(n) if i not in set(pivots)]
    images = []
    from .linalg.kernels import reduce_rows

    for g in m.images:
        rows = np.ascontiguousarray(g.a[keep])
        resid, _ = reduce_rows(field, basis_rref, pivots, rows)
        images.append(Mat(field, np.ascontiguousarray(resid[:, keep])))
    return Rep(m.group, images)

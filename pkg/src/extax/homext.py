"""Ext^1 tables, Steinberg-tensor projectives, PIMs and their layers.

Everything is computed through projective modules: tensoring a
projective simple P0 (the Steinberg, or any defect-0 simple) with a
simple S gives a projective whose head multiplicities are

    a_U[S] = dim Hom(P0 (x) S, U) = [S* (x) U : P0],

computed by the standard-basis method through the tensor-hom
adjunction.  Writing L_k for multiset-valued Loewy layers,

    L_k(P0 (x) S) = sum_U a_U[S] * L_k(P(U)),

so once the multiplicity matrix A = (a_U[S]) is invertible over the
rationals, every layer of every projective indecomposable follows from
the layers of the tensor hosts; Ext^1(U, T) is the T-multiplicity of
layer 2 of P(U).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .budgets import DEFAULT as DEFAULT_BUDGET
from .errors import (
    IncompleteTable,
    NonIntegralSolution,
    ResourceBudgetExceeded,
    SingularMultiplicityMatrix,
)
from .gmodule import Rep, SimpleLabel, dual, sub_rep, tensor
from .linalg.kernels import gemm, nullspace, rref
from .meataxe import hom_space_from_simple, iso_test
from .meataxe.structure import loewy_layers


def label_sort_key(name: str):
    lab = SimpleLabel.parse(name)
    return (lab.dim, lab.bar, lab.subscript, lab.star)


@dataclass
class ExtTable:
    group: str
    labels: list  # ordered label strings
    dims: np.ndarray  # integer matrix
    tested_bound: dict = dc_field(default_factory=dict)  # row label -> bound

    def cell(self, s, t):
        return int(self.dims[self.labels.index(s), self.labels.index(t)])


@dataclass
class ProjDecomp:
    """P0 (x) S = (+)_U P(U)^a_U, with defect-0 simples appearing bare."""

    summands: list  # (label string, multiplicity, is_defect0)

    def render(self):
        parts = []
        for lab, mult, def0 in self.summands:
            body = lab if def0 else f"P({lab})"
            if mult > 1:
                body += "^{⊕" + str(mult) + "}"
            parts.append(body)
        return "⊕".join(parts)


class HomextEngine:
    """Per-group cache of head data, radicals and solved PIM layers."""

    def __init__(self, shop, seed=777, budget=DEFAULT_BUDGET):
        self.shop = shop
        self.group = shop.group
        self.budget = budget
        self.rng = np.random.default_rng(seed)
        base = dict(shop.env)
        # close the label set under duality
        for name in list(base):
            lab = SimpleLabel.parse(name)
            d = lab.dual().render()
            if d not in base:
                rep = dual(base[name]).with_label(lab.dual())
                if not iso_test(rep, base[name], self.rng):
                    base[d] = rep
        self.simples = base
        self.labels = sorted(base, key=label_sort_key)
        sylow = self.group.sylow_p_order
        self.defect0 = [l for l in self.labels if base[l].dim % sylow == 0]
        if not self.defect0:
            raise IncompleteTable("no projective simple realized")
        self.p0_label = self.defect0[0]
        self.p0 = base[self.p0_label]
        self._central_scalars = self._central_character_table()
        self._head_cache: dict = {}
        self._layer_cache: dict = {}

    # -- central characters ------------------------------------------------
    def _central_character_table(self):
        out = {}
        for name, rep in self.simples.items():
            scalars = []
            for word, _ in self.group.central_words:
                z = rep.act_word(word)
                scalars.append(int(z.a[0, 0]))
            out[name] = tuple(scalars)
        return out

    def _compatible_char(self, s_label, u_label):
        field = self.p0.field
        zs = self._central_scalars
        want = tuple(
            field.mul_scalar(a, b)
            for a, b in zip(zs[self.p0_label], zs[s_label])
        )
        return zs[u_label] == want

    # -- head data -----------------------------------------------------------
    def head_data(self, s_label):
        """{U label: (mult, [maps Q -> U])} for Q = P0 (x) S."""
        if s_label in self._head_cache:
            return self._head_cache[s_label]
        s = self.simples[s_label]
        self.budget.check_dim(self.p0.dim * s.dim, "Steinberg tensor")
        out = {}
        for u_label in self.labels:
            u = self.simples[u_label]
            if s.dim * u.dim < self.p0.dim:
                continue
            if not self._compatible_char(s_label, u_label):
                continue
            x = tensor(dual(s), u)
            homs = hom_space_from_simple(
                self.p0, x, self.rng, registry=list(self.simples.values())
            )
            if homs:
                maps = [
                    np.ascontiguousarray(
                        _adjoint_reshape(h, self.p0.dim, s.dim, u.dim)
                    )
                    for h in homs
                ]
                out[u_label] = (len(homs), maps)
        self._head_cache[s_label] = out
        return out

    def st_tensor_decompose(self, s_label) -> ProjDecomp:
        data = self.head_data(s_label)
        summands = []
        for u_label in self.labels:
            if u_label in data:
                mult = data[u_label][0]
                summands.append((u_label, mult, u_label in self.defect0))
        return ProjDecomp(summands)

    # -- Loewy layers of the tensor hosts -------------------------------------
    def host_layers(self, s_label, depth=None):
        """Loewy layers (as {U label: mult} dicts) of P0 (x) S."""
        key = (s_label, depth)
        done_key = (s_label, None)
        if done_key in self._layer_cache:
            full = self._layer_cache[done_key]
            return full if depth is None else full[:depth]
        if key in self._layer_cache:
            return self._layer_cache[key]
        s = self.simples[s_label]
        q = tensor(self.p0, s)
        data = self.head_data(s_label)
        head = {u: data[u][0] for u in data}
        stacked = np.concatenate([m for u in data for m in data[u][1]], axis=1)
        layers = loewy_layers(
            q, list(self.simples.values()), self.rng, depth,
            head=head, head_maps=stacked,
        )
        total = sum(
            self.simples[t].dim * c for layer in layers for t, c in layer.items()
        )
        if depth is None or total == q.dim:
            self._layer_cache[(s_label, None)] = layers
        else:
            self._layer_cache[key] = layers
        return layers

    # -- multiplicity matrix and the solve ------------------------------------
    def _solve_rows(self):
        """Greedy family of rows S with invertible A over non-defect0 columns."""
        columns = [
            l for l in self.labels if l not in self.defect0 and l != "1"
        ]
        rows = []
        amat = []
        for s_label in self.labels:
            if s_label == "1" or s_label in self.defect0:
                pass
            if s_label == "1":
                continue
            if self.p0.dim * self.simples[s_label].dim > self.budget.max_dim:
                continue
            data = self.head_data(s_label)
            row = [data.get(u, (0, None))[0] for u in columns]
            cand = amat + [row]
            if _rational_rank(cand) == len(cand):
                rows.append(s_label)
                amat.append(row)
            if len(rows) == len(columns):
                break
        if len(rows) < len(columns):
            raise SingularMultiplicityMatrix(
                f"only {len(rows)} independent projectives for {len(columns)} columns"
            )
        return rows, columns, amat

    def ext_table(self) -> ExtTable:
        rows, columns, amat = self._solve_rows()
        tcols = self.labels
        rmat = []
        for s_label in rows:
            layers = self.host_layers(s_label, depth=2)
            layer2 = layers[1] if len(layers) > 1 else {}
            rmat.append([layer2.get(t, 0) for t in tcols])
        esolved = _rational_solve(amat, rmat)  # rows: columns-labels
        n = len(self.labels)
        dims = np.zeros((n, n), dtype=np.int64)
        index = {l: i for i, l in enumerate(self.labels)}
        for ui, u_label in enumerate(columns):
            for ti, t_label in enumerate(tcols):
                val = esolved[ui][ti]
                if val.denominator != 1 or val < 0:
                    raise NonIntegralSolution(
                        f"E[{u_label}][{t_label}] = {val}"
                    )
                dims[index[u_label], index[t_label]] = int(val)
        # fill the trivial row/column by symmetry; defect-0 rows stay zero
        if "1" in index:
            for t_label in self.labels:
                dims[index["1"], index[t_label]] = dims[index[t_label], index["1"]]
        table = ExtTable(self.group.name, list(self.labels), dims)
        _check_table_invariants(table)
        return table

    # -- PIM layers ------------------------------------------------------------
    def pim_layers(self):
        """{U label: list of layer dicts} for all non-defect-0 U, plus
        single-layer entries for the defect-0 simples."""
        rows, columns, amat = self._solve_rows()
        host_layers = [self.host_layers(s) for s in rows]
        depth = max(len(h) for h in host_layers)
        # subtract the known defect-0 contributions from layer 1
        out = {d0: [{d0: 1}] for d0 in self.defect0}
        solved = {}
        for u in columns:
            solved[u] = []
        ainv = _rational_inverse(amat)
        for k in range(depth):
            rvec = []
            for s_label, layers in zip(rows, host_layers):
                layer = dict(layers[k]) if k < len(layers) else {}
                if k == 0:
                    data = self.head_data(s_label)
                    for d0 in self.defect0:
                        layer.pop(d0, None)
                rvec.append([layer.get(t, 0) for t in self.labels])
            sol = _mat_mul_fraction(ainv, rvec)
            for ui, u in enumerate(columns):
                layer = {}
                for ti, t in enumerate(self.labels):
                    val = sol[ui][ti]
                    if val.denominator != 1 or val < 0:
                        raise NonIntegralSolution(f"layer {k+1} of P({u}): {val}")
                    if val:
                        layer[t] = int(val)
                if layer:
                    solved[u].append(layer)
        out.update(solved)
        return out

    def cartan_row(self, u_label):
        layers = self.pim_layers()[u_label]
        out = {}
        for layer in layers:
            for t, c in layer.items():
                out[t] = out.get(t, 0) + c
        return out

    def pim_dim(self, u_label):
        return sum(
            self.simples[t].dim * c
            for layer in self.pim_layers()[u_label]
            for t, c in layer.items()
        )


def _adjoint_reshape(h, dim_p0, dim_s, dim_u):
    """Hom(P0, S* (x) U) -> Hom(P0 (x) S, U) matrix reshape."""
    return h.reshape(dim_p0, dim_s, dim_u).reshape(dim_p0 * dim_s, dim_u)


def _rational_rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def _rational_inverse(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            raise SingularMultiplicityMatrix("multiplicity matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def _mat_mul_fraction(a, b):
    n, k = len(a), len(b)
    cols = len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            row.append(sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)))
        out.append(row)
    return out


def _rational_solve(a, b):
    return _mat_mul_fraction(_rational_inverse(a), b)


def _check_table_invariants(table: ExtTable):
    dims = table.dims
    if not np.array_equal(dims, dims.T):
        raise NonIntegralSolution("Ext table is not symmetric")
    index = {l: i for i, l in enumerate(table.labels)}
    for s in table.labels:
        sd = SimpleLabel.parse(s).dual().render()
        if sd not in index:
            continue
        for t in table.labels:
            td = SimpleLabel.parse(t).dual().render()
            if td not in index:
                continue
            if dims[index[s], index[t]] != dims[index[sd], index[td]]:
                raise NonIntegralSolution(
                    f"Ext duality fails at ({s},{t}) vs ({sd},{td})"
                )

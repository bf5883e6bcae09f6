"""Meataxe: irreducibility, chopping, isomorphism and Hom spaces.

The algorithms are randomized but certificate-checked: irreducibility
follows Norton's criterion with a unique-block factor of the minimal
polynomial of a random algebra element, and Hom spaces are computed by
the standard-basis method (spin a canonical seed of the source, replay
the schedule on nullspace candidates in the target, keep the kernel of
the linear violation map).
"""

from __future__ import annotations

import numpy as np

from ..budgets import DEFAULT as DEFAULT_BUDGET
from ..errors import FieldTooSmall, NotSimpleInput
from ..gmodule import Rep, dual, quotient_rep, sub_rep
from ..linalg import Mat
from ..linalg import poly
from ..linalg.kernels import (
    gemm,
    nullspace,
    rank,
    reduce_rows,
    rref,
)


class AlgebraElement:
    """Formal sum of group words; evaluable in any module of the group."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)  # ((coeff, word), ...)

    def on(self, rep: Rep) -> np.ndarray:
        """Evaluate with a shared-prefix cache over the term words."""
        field = rep.field
        cache = {}

        def eval_word(word):
            if not word:
                return Mat.identity(rep.field, rep.dim).a
            if word in cache:
                return cache[word]
            best = len(word) - 1
            while best > 0 and word[:best] not in cache:
                best -= 1
            cur = eval_word(word[:best]) if best else None
            for letter in word[best:]:
                m = (
                    rep.images[letter - 1]
                    if letter > 0
                    else rep.image_inverses()[-letter - 1]
                ).a
                cur = m if cur is None else gemm(field, cur, m)
            cache[word] = cur
            return cur

        acc = None
        for coeff, word in self.terms:
            m = eval_word(word)
            if coeff != 1:
                m = field.scalar_mul_arr(coeff, m)
            acc = m if acc is None else field.add_arr(acc, m)
        return acc


def left_null(field, a):
    """Vectors v with v @ a = 0 (modules act on row vectors)."""
    return nullspace(field, np.ascontiguousarray(a.T))


def random_algebra_element(group, rng, n_terms=3, max_len=5) -> AlgebraElement:
    from ..groups import random_word

    field = group.field
    terms = []
    for _ in range(n_terms):
        coeff = int(rng.integers(1, field.q))
        word = random_word(group, rng, length=int(rng.integers(2, max_len + 1)))
        terms.append((coeff, word))
    return AlgebraElement(terms)


def rich_algebra_element(group, rng, dim, attempt=0) -> AlgebraElement:
    """Element rich enough for near-generic minimal polynomials on dim.

    Terms are prefixes of a few base words, so evaluation costs one
    matrix product per base-word letter regardless of term count.
    """
    from ..groups import random_word

    field = group.field
    n_terms = min(12, 3 + dim // 96 + attempt // 4)
    base_len = min(12, 5 + dim // 128 + attempt // 4)
    n_base = 2 if n_terms > 4 else 1
    terms = []
    for _ in range(n_base):
        w = random_word(group, rng, length=base_len)
        lens = sorted(set(int(l) for l in rng.integers(2, base_len + 1, size=(n_terms + n_base - 1) // n_base)))
        for l in lens:
            coeff = int(rng.integers(1, field.q))
            terms.append((coeff, w[:l]))
    return AlgebraElement(terms)


# -- spinning --------------------------------------------------------------

def spin(rep: Rep, seed_rows: np.ndarray, images=None):
    """Row space closure under the action; returns (rref basis, pivots)."""
    field = rep.field
    mats = [g.a for g in (images if images is not None else rep.images)]
    basis, rk, piv = rref(field, np.atleast_2d(seed_rows))
    basis = basis[:rk]
    frontier = basis
    while frontier.shape[0] and rk < rep.dim:
        batches = [gemm(field, frontier, g) for g in mats]
        stacked = np.concatenate(batches, axis=0)
        resid, _ = reduce_rows(field, basis, piv, stacked)
        red, nrk, npiv = rref(field, resid)
        if nrk == 0:
            break
        new_rows = red[:nrk]
        merged, rk, piv = rref(field, np.concatenate([basis, new_rows], axis=0))
        basis = merged[:rk]
        frontier = new_rows
    return basis, piv


def spin_transpose(rep: Rep, seed_rows: np.ndarray):
    """Spin under the transposed action (detects left submodules)."""
    field = rep.field
    mats = [Mat(field, np.ascontiguousarray(g.a.T)) for g in rep.images]
    return spin(rep, seed_rows, images=mats)


# -- standard basis ----------------------------------------------------------

class StandardBasis:
    """Spin schedule of a cyclic module from a seed vector.

    Records, for每 (basis row, generator) step, either the index of the
    new basis row it produced or the coefficients expressing the product
    in the current basis.  Replaying the schedule on a candidate target
    vector tests (linearly) whether seed -> candidate extends to a
    module homomorphism.
    """

    def __init__(self, rep: Rep, seed: np.ndarray):
        field = rep.field
        n = rep.dim
        self.rep = rep
        basis = [seed.astype(field.dtype)]
        # echelon bookkeeping: ech = rref rows; conv[i] = coeffs of ech row i in basis
        ech = seed.reshape(1, -1).astype(field.dtype).copy()
        scale = field.inv_scalar(int(ech[0, np.nonzero(ech[0])[0][0]]))
        ech[0] = field.scalar_mul_arr(scale, ech[0])
        piv = [int(np.nonzero(ech[0])[0][0])]
        conv = np.array([[scale]], dtype=field.dtype)
        schedule = []
        i = 0
        while i < len(basis):
            for gi, g in enumerate(rep.images):
                w = gemm(field, basis[i].reshape(1, -1), g.a)[0]
                resid, coeff = reduce_rows(field, ech, piv, w.reshape(1, -1))
                rcoef = gemm(field, coeff, conv)[0]  # coefficients in basis rows
                nz = np.nonzero(resid[0])[0]
                if nz.size:
                    # new basis vector
                    basis.append(w)
                    s = field.inv_scalar(int(resid[0, nz[0]]))
                    new_ech = field.scalar_mul_arr(s, resid[0])
                    # conv row: s*(e_new - rcoef) in basis coordinates
                    newconv = np.zeros(len(basis), dtype=field.dtype)
                    newconv[-1] = s
                    newconv[: len(rcoef)] = field.sub_arr(
                        newconv[: len(rcoef)], field.scalar_mul_arr(s, rcoef)
                    )
                    conv = np.pad(conv, ((0, 0), (0, 1)))
                    conv = np.concatenate([conv, newconv.reshape(1, -1)], axis=0)
                    ech = np.concatenate([ech, new_ech.reshape(1, -1)], axis=0)
                    piv.append(int(nz[0]))
                    # keep ech in reduced form: clear column piv[-1] above
                    col = ech[:-1, piv[-1]].copy()
                    nzr = np.nonzero(col)[0]
                    if nzr.size:
                        ech[nzr] = field.sub_arr(
                            ech[nzr],
                            field.mul_arr(col[nzr][:, None], new_ech[None, :]),
                        )
                        conv[nzr] = field.sub_arr(
                            conv[nzr],
                            field.mul_arr(col[nzr][:, None], newconv[None, :]),
                        )
                    schedule.append((i, gi, len(basis) - 1, None))
                else:
                    schedule.append((i, gi, None, rcoef))
            i += 1
        self.dim = len(basis)
        self.basis = np.array(basis, dtype=field.dtype)
        self.schedule = schedule

    def replay_kernel(self, target: Rep, candidates: np.ndarray) -> np.ndarray:
        """Rows c of coefficient space with seed -> sum c_i candidates_i a hom.

        Returns a matrix K (k x n_candidates); each row gives a valid
        linear combination of the candidate vectors.
        """
        field = target.field
        ncand = candidates.shape[0]
        if ncand == 0:
            return np.zeros((0, 0), dtype=field.dtype)
        rows = [candidates]
        violations = []
        for (i, gi, new, coeff) in self.schedule:
            w = gemm(field, rows[i], target.images[gi].a)
            if new is not None:
                rows.append(w)
            else:
                # violation: w - sum_j coeff[j] rows[j], batched over candidates
                acc = w
                nz = np.nonzero(coeff)[0]
                for j in nz:
                    acc = field.sub_arr(
                        acc, field.scalar_mul_arr(int(coeff[j]), rows[j])
                    )
                if np.any(acc):
                    violations.append(acc)
        if not violations:
            return np.eye(ncand, dtype=field.dtype)
        stacked = np.concatenate(violations, axis=1)
        return nullspace(field, np.ascontiguousarray(stacked.T))

    def hom_matrices(self, target: Rep, candidates: np.ndarray, kernel_rows):
        """Explicit hom matrices (source dim x target dim) for kernel rows."""
        field = target.field
        homs = []
        inv_basis = np.ascontiguousarray(
            Mat(field, self.basis).inverse().a
        ) if self.basis.shape[0] == self.basis.shape[1] else None
        for row in kernel_rows:
            u = gemm(field, row.reshape(1, -1), candidates)[0]
            rows = [u.reshape(1, -1)]
            for (i, gi, new, coeff) in self.schedule:
                if new is not None:
                    rows.append(gemm(field, rows[i], target.images[gi].a))
            images = np.concatenate(rows, axis=0)
            h = gemm(field, inv_basis, images)
            homs.append(h)
        return homs


# -- peakwords ---------------------------------------------------------------

def seed_factor(rep: Rep, rng, attempts=24, prefer_unique=False):
    """(algebra element z, irreducible factor p) with null(p(z)) != 0 on rep.

    With prefer_unique, insist on nullity exactly deg p (unique block),
    which the irreducibility certificate needs.
    """
    field = rep.field
    best = None
    for attempt in range(attempts):
        z = random_algebra_element(rep.group, rng, n_terms=2 + attempt // 8)
        za = z.on(rep)
        mp = poly.minpoly_matrix(field, za, rng)
        factors = poly.factor(field, mp, rng)
        factors.sort(key=lambda t: poly.degree(t[0]))
        for p, mult in factors:
            if poly.degree(p) > 4:
                continue
            pz = poly.eval_matrix(field, p, za)
            ns = left_null(field, pz)
            if ns.shape[0] == 0:
                continue
            if prefer_unique and ns.shape[0] != poly.degree(p):
                continue
            return z, p, za, ns
        if best is None and factors:
            best = (z, factors[0][0], za)
    if best is not None and not prefer_unique:
        z, p, za = best
        pz = poly.eval_matrix(field, p, za)
        ns = left_null(field, pz)
        if ns.shape[0]:
            return z, p, za, ns
    raise RuntimeError("no usable seed factor found")


# -- irreducibility ------------------------------------------------------------

def is_irreducible(rep: Rep, rng, budget=DEFAULT_BUDGET):
    """(irreducible?, witness): witness is a proper submodule basis if not."""
    budget.check_dim(rep.dim, "meataxe input")
    if rep.dim == 1:
        return True, None
    for attempt in range(budget.split_retries):
        z = rich_algebra_element(rep.group, rng, rep.dim, attempt)
        za = z.on(rep)
        field = rep.field
        mp = poly.minpoly_matrix(field, za, rng)
        factors = poly.factor(field, mp, rng)
        factors.sort(key=lambda t: poly.degree(t[0]))
        for p, mult in factors:
            if poly.degree(p) > 4:
                continue
            pz = poly.eval_matrix(field, p, za)
            ns = left_null(field, pz)
            if ns.shape[0] == 0:
                continue
            # any nullspace vector may expose a submodule
            basis, piv = spin(rep, ns[0])
            if basis.shape[0] < rep.dim:
                return False, (basis, piv)
            if ns.shape[0] == poly.degree(p):
                # unique block: Norton's criterion applies
                nst = nullspace(field, pz)
                tbasis, _ = spin_transpose(rep, nst[0])
                if tbasis.shape[0] < rep.dim:
                    sub = nullspace(field, tbasis)
                    red, rk, piv2 = rref(field, sub)
                    return False, (red[:rk], piv2)
                return True, None
            # otherwise try a few more nullspace vectors for a split
            for row in ns[1:4]:
                basis, piv = spin(rep, row)
                if basis.shape[0] < rep.dim:
                    return False, (basis, piv)
    raise RuntimeError(f"irreducibility unresolved after retries (dim {rep.dim})")


def chop(rep: Rep, rng, budget=DEFAULT_BUDGET):
    """Composition factors with multiplicities: list of (Rep, count)."""
    budget.check_dim(rep.dim, "chop input")
    factors = []

    def add(simple):
        for i, (s, c) in enumerate(factors):
            if s.dim == simple.dim and iso_test(s, simple, rng):
                factors[i] = (s, c + 1)
                return
        factors.append((simple, 1))

    stack = [rep]
    while stack:
        m = stack.pop()
        if m.dim == 0:
            continue
        irr, witness = is_irreducible(m, rng, budget)
        if irr:
            add(m)
        else:
            basis, piv = witness
            stack.append(sub_rep(m, basis, piv))
            stack.append(quotient_rep(m, basis, piv))
    factors.sort(key=lambda t: t[0].dim)
    return factors


def iso_test(a: Rep, b: Rep, rng) -> bool:
    """Isomorphism test for two simple modules."""
    if a.dim != b.dim or a.field is not b.field:
        return False
    if a is b:
        return True
    for attempt in range(40):
        z = rich_algebra_element(a.group, rng, a.dim, attempt)
        za, zb = z.on(a), z.on(b)
        field = a.field
        mpa = poly.minpoly_matrix(field, za, rng)
        factors = poly.factor(field, mpa, rng)
        factors.sort(key=lambda t: poly.degree(t[0]))
        for p, _ in factors:
            if poly.degree(p) > 4:
                continue
            nsa = left_null(field, poly.eval_matrix(field, p, za))
            if nsa.shape[0] == 0:
                continue
            nsb = left_null(field, poly.eval_matrix(field, p, zb))
            if nsa.shape[0] != nsb.shape[0]:
                return False
            sb = StandardBasis(a, nsa[0])
            if sb.dim < a.dim:
                raise NotSimpleInput("iso_test requires simple modules")
            kern = sb.replay_kernel(b, nsb)
            return kern.shape[0] > 0
    raise RuntimeError("iso_test could not find a usable algebra element")


# -- Hom spaces ----------------------------------------------------------------

def hom_space_from_simple(s: Rep, m: Rep, rng, registry=None):
    """Basis of Hom(s, m) for simple s, as explicit matrices."""
    field = s.field
    for attempt in range(30):
        z = rich_algebra_element(s.group, rng, s.dim, attempt)
        zs = z.on(s)
        mp = poly.minpoly_matrix(field, zs, rng)
        factors = poly.factor(field, mp, rng)
        factors.sort(key=lambda t: poly.degree(t[0]))
        usable = [p for p, _ in factors if poly.degree(p) <= 4]
        if not usable:
            continue
        # prefer factors that vanish rarely elsewhere: check on registry sims
        scored = []
        for p in usable[:3]:
            penalty = 0
            if registry:
                for other in registry:
                    if other is s or other.dim > 400:
                        continue
                    pz_o = poly.eval_matrix(field, p, z.on(other))
                    penalty += other.dim - rank(field, pz_o)
            scored.append((penalty, poly.degree(p), p))
        scored.sort(key=lambda t: (t[0], t[1]))
        p = scored[0][2]
        ns_s = left_null(field, poly.eval_matrix(field, p, zs))
        if ns_s.shape[0] == 0:
            continue
        sb = StandardBasis(s, ns_s[0])
        if sb.dim < s.dim:
            raise NotSimpleInput("source of hom_space_from_simple must be simple")
        zm = z.on(m)
        cand = left_null(field, poly.eval_matrix(field, p, zm))
        if cand.shape[0] == 0:
            return []
        kern = sb.replay_kernel(m, cand)
        if kern.shape[0] == 0:
            return []
        return sb.hom_matrices(m, cand, kern)
    raise RuntimeError("hom_space_from_simple found no seed factor")


def hom_dim(a: Rep, b: Rep, rng, budget=DEFAULT_BUDGET, registry=None) -> int:
    """dim Hom(a, b) via the cheapest applicable route."""
    unknowns = a.dim * b.dim
    if unknowns <= 40_000:
        return _hom_dim_dense(a, b)
    if unknowns > budget.solve_unknowns:
        from ..errors import ResourceBudgetExceeded

        raise ResourceBudgetExceeded(
            f"hom solve {unknowns} unknowns > cap {budget.solve_unknowns}"
        )
    if _probably_simple(a, rng):
        return len(hom_space_from_simple(a, b, rng, registry))
    return len(hom_space_from_simple(dual(b), dual(a), rng, registry))


def _probably_simple(m: Rep, rng) -> bool:
    if m.dim <= 2:
        return True
    if m.label is not None:
        return True
    try:
        irr, _ = is_irreducible(m, rng)
        return irr
    except RuntimeError:
        return False


def _hom_dim_dense(a: Rep, b: Rep) -> int:
    """Nullity of the stacked intertwining system (small modules)."""
    field = a.field
    da, db = a.dim, b.dim
    blocks = []
    eye_a = np.eye(da, dtype=field.dtype)
    eye_b = np.eye(db, dtype=field.dtype)
    for ga, gb in zip(a.images, b.images):
        # condition on H (da x db, row-major vectorised): ga H - H gb = 0
        left = _kron_gf(field, ga.a, eye_b)
        right = _kron_gf(field, eye_a, np.ascontiguousarray(gb.a.T))
        blocks.append(field.sub_arr(left, right))
    stacked = np.concatenate(blocks, axis=0)
    return da * db - rank(field, stacked)


def _kron_gf(field, a, b):
    a = np.asarray(a, dtype=field.dtype)
    b = np.asarray(b, dtype=field.dtype)
    ra, ca = a.shape
    rb, cb = b.shape
    out = field.mul_arr(
        np.broadcast_to(a[:, None, :, None], (ra, rb, ca, cb)),
        np.broadcast_to(b[None, :, None, :], (ra, rb, ca, cb)),
    )
    return out.reshape(ra * rb, ca * cb)

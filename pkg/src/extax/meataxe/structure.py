"""Socle, radical, Loewy series, piece extraction, structure strings."""

from __future__ import annotations

import numpy as np

from ..budgets import DEFAULT as DEFAULT_BUDGET
from ..errors import AmbiguousPiece, NoSuchPiece
from ..gmodule import Rep, SimpleLabel, dual, quotient_rep, sub_rep
from ..linalg.kernels import gemm, nullspace, reduce_rows, rref
from .core import hom_space_from_simple, is_irreducible, iso_test, spin


def socle_parts(m: Rep, simples, rng):
    """[(simple, multiplicity, image rows)] over the given simple list."""
    out = []
    for s in simples:
        if s.dim > m.dim:
            continue
        homs = hom_space_from_simple(s, m, rng, registry=simples)
        if homs:
            rows = np.concatenate(homs, axis=0)
            out.append((s, len(homs), rows))
    return out


def socle(m: Rep, simples, rng):
    """(basis rows in RREF, pivots, multiset of (simple, mult))."""
    parts = socle_parts(m, simples, rng)
    if not parts:
        return np.zeros((0, m.dim), dtype=m.field.dtype), [], []
    rows = np.concatenate([p[2] for p in parts], axis=0)
    red, rk, piv = rref(m.field, rows)
    mults = [(s, c) for s, c, _ in parts]
    assert rk == sum(c * s.dim for s, c in mults), "socle pieces overlap"
    return red[:rk], piv, mults


def head_mults(m: Rep, simples, rng):
    """Multiset of (simple, mult) in the head m / rad m."""
    md = dual(m)
    out = []
    for s in simples:
        if s.dim > m.dim:
            continue
        homs = hom_space_from_simple(dual(s), md, rng, registry=simples)
        if homs:
            out.append((s, len(homs)))
    return out


def radical(m: Rep, simples, rng):
    """(basis rows RREF, pivots) of rad m = perp of soc(m*)."""
    md = dual(m)
    basis, piv, _ = socle(md, [dual(s) for s in simples], rng)
    if basis.shape[0] == 0:
        raise RuntimeError("socle of dual came out empty; simple list incomplete?")
    perp = nullspace(m.field, basis)
    red, rk, piv2 = rref(m.field, perp)
    return red[:rk], piv2


def loewy_series(m: Rep, simples, rng):
    """Radical-quotient layers, head first: list of [(simple, mult)]."""
    layers = []
    cur = m
    guard = 0
    while cur.dim > 0:
        guard += 1
        assert guard <= 64, "Loewy series did not terminate"
        mults = head_mults(cur, simples, rng)
        total = sum(c * s.dim for s, c in mults)
        assert total > 0, "no head constituents found; simple list incomplete"
        layers.append(mults)
        if total == cur.dim:
            break
        basis, piv = radical(cur, simples, rng)
        assert basis.shape[0] == cur.dim - total, "radical/head dimension mismatch"
        cur = sub_rep(cur, basis, piv)
    return layers


def socle_series(m: Rep, simples, rng):
    """Socle-quotient layers, socle first."""
    layers = []
    cur = m
    while cur.dim > 0:
        basis, piv, mults = socle(cur, simples, rng)
        assert basis.shape[0] > 0, "empty socle; simple list incomplete"
        layers.append(mults)
        if basis.shape[0] == cur.dim:
            break
        cur = quotient_rep(cur, basis, piv)
    return layers


# -- piece extraction ---------------------------------------------------------

def _simple_submodule(m: Rep, rng, budget=DEFAULT_BUDGET):
    """Some simple submodule, found by spinning a random nullspace vector."""
    from .core import random_algebra_element
    from ..linalg import poly

    from .core import left_null, rich_algebra_element

    field = m.field
    for attempt in range(60):
        z = rich_algebra_element(m.group, rng, m.dim, attempt)
        za = z.on(m)
        ns = left_null(field, za)
        if ns.shape[0] == 0:
            mp = poly.minpoly_matrix(field, za, rng)
            factors = poly.factor(field, mp, rng)
            factors.sort(key=lambda t: poly.degree(t[0]))
            if not factors or poly.degree(factors[0][0]) > 4:
                continue
            ns = left_null(field, poly.eval_matrix(field, factors[0][0], za))
            if ns.shape[0] == 0:
                continue
        basis, piv = spin(m, ns[int(rng.integers(0, ns.shape[0]))])
        candidate = sub_rep(m, basis, piv) if basis.shape[0] < m.dim else m
        while True:
            irr, witness = is_irreducible(candidate, rng, budget)
            if irr:
                return candidate
            wbasis, wpiv = witness
            candidate = sub_rep(candidate, wbasis, wpiv)
    raise RuntimeError("no simple submodule found")


def find_piece(x: Rep, kind: str, dim: int, rng, budget=DEFAULT_BUDGET, tries=12):
    """The unique simple piece of the requested kind and dimension."""
    if kind == "quotient":
        piece = find_piece(dual(x), "sub", dim, rng, budget, tries)
        return dual(piece)
    if kind == "factor":
        from .core import chop

        cands = [s for s, c in chop(x, rng, budget) if s.dim == dim]
        if not cands:
            raise NoSuchPiece(f"no composition factor of dim {dim}")
        if len(cands) > 1:
            raise AmbiguousPiece(f"{len(cands)} non-isomorphic factors of dim {dim}")
        return cands[0]
    if kind not in ("sub", "summand", "socle"):
        raise ValueError(f"unknown piece kind {kind!r}")
    found = []
    for _ in range(tries):
        s = _simple_submodule(x, rng, budget)
        if s.dim == dim and not any(iso_test(s, t, rng) for t in found):
            found.append(s)
        if x.dim == dim:
            break
    if kind == "socle":
        # all socle constituents of this dimension must agree
        pass
    if not found:
        raise NoSuchPiece(f"no simple {kind} of dim {dim} found in dim-{x.dim} module")
    if len(found) > 1:
        raise AmbiguousPiece(f"two non-isomorphic {kind}s of dim {dim}")
    piece = found[0]
    if kind == "summand":
        if not _is_summand(x, piece, rng):
            raise NoSuchPiece(f"dim-{dim} submodule is not a direct summand")
    return piece


def _is_summand(x: Rep, piece: Rep, rng) -> bool:
    """Does the simple submodule split off?  Check Hom(x, piece) hits it."""
    homs = hom_space_from_simple(dual(piece), dual(x), rng)
    if not homs:
        return False
    embeds = hom_space_from_simple(piece, x, rng)
    field = x.field
    for h in homs:  # h: piece* -> x*, i.e. maps x -> piece transposed
        proj = np.ascontiguousarray(h.T)  # x -> piece
        for e in embeds:
            comp = gemm(field, e, proj)
            from ..linalg.kernels import rank

            if rank(field, comp) == piece.dim:
                return True
    return False


# -- direct-sum splitting and rendering ----------------------------------------

def split_trivial_summands(m: Rep, rng):
    """m = k^r (+) complement; returns (r, complement Rep)."""
    field = m.field
    n = m.dim
    eye = np.eye(n, dtype=field.dtype)
    stacked = np.concatenate([field.sub_arr(g.a, eye) for g in m.images], axis=1)
    fixed = nullspace(field, np.ascontiguousarray(stacked.T))
    costacked = np.concatenate(
        [field.sub_arr(np.ascontiguousarray(g.a.T), eye) for g in m.images], axis=1
    )
    cofixed = nullspace(field, np.ascontiguousarray(costacked.T))
    if fixed.shape[0] == 0 or cofixed.shape[0] == 0:
        return 0, m
    pairing = gemm(field, fixed, np.ascontiguousarray(cofixed.T))
    red, r, piv = rref(field, pairing)
    if r == 0:
        return 0, m
    # choose r independent functionals; complement = intersection of kernels
    _, rr, rpiv = rref(field, np.ascontiguousarray(pairing.T))
    funcs = cofixed[rpiv]
    comp = nullspace(field, funcs)
    cred, crk, cpiv = rref(field, comp)
    return r, sub_rep(m, cred[:crk], cpiv)




# -- shared-element socle/Loewy machinery ---------------------------------

def socle_parts_shared(m: Rep, simples, rng, attempts=10):
    """[(simple, mult, hom matrices)] with one algebra element per pass.

    The element is evaluated once on m; per source simple only its own
    small minimal polynomial, a few low-degree matrix polynomials on m,
    one nullspace and one replay are needed.
    """
    from ..linalg import poly
    from .core import StandardBasis, left_null, rich_algebra_element

    field = m.field
    remaining = [s for s in simples if s.dim <= m.dim]
    found = []
    for attempt in range(attempts):
        if not remaining:
            break
        zdim = max(s.dim for s in remaining)
        z = rich_algebra_element(m.group, rng, zdim, attempt)
        zm = None
        cand_cache = {}
        still = []
        for s in remaining:
            zs = z.on(s)
            mp = poly.minpoly_matrix(field, zs, rng)
            factors = poly.factor(field, mp, rng)
            factors.sort(key=lambda t: poly.degree(t[0]))
            usable = None
            for p, _ in factors:
                if poly.degree(p) > 4:
                    continue
                ns_s = left_null(field, poly.eval_matrix(field, p, zs))
                if ns_s.shape[0]:
                    usable = (p, ns_s)
                    break
            if usable is None:
                still.append(s)
                continue
            p, ns_s = usable
            if zm is None:
                zm = z.on(m)
            key = tuple(int(c) for c in p)
            if key not in cand_cache:
                cand_cache[key] = left_null(
                    field, poly.eval_matrix(field, p, zm)
                )
            cand = cand_cache[key]
            if cand.shape[0] == 0:
                found.append((s, 0, []))
                continue
            sb = StandardBasis(s, ns_s[0])
            kern = sb.replay_kernel(m, cand)
            if kern.shape[0] == 0:
                found.append((s, 0, []))
            else:
                homs = sb.hom_matrices(m, cand, kern)
                found.append((s, len(homs), homs))
        remaining = still
    if remaining:
        raise RuntimeError(
            f"no usable factor for {len(remaining)} simples after {attempts} passes"
        )
    return [(s, c, h) for s, c, h in found if c]


def socle_series_shared(m: Rep, simples, rng, depth=None, first_layer=None,
                        first_basis=None):
    """Socle-quotient layers, socle first, as label->mult dicts.

    A precomputed first layer (label->mult) and its basis rows can be
    supplied to skip the initial pass.
    """
    layers = []
    cur = m
    if first_layer is not None:
        layers.append(dict(first_layer))
        total = sum(
            next(s.dim for s in simples if s.label.render() == name) * c
            for name, c in first_layer.items()
        )
        if total == cur.dim or (depth is not None and len(layers) >= depth):
            return layers
        red, rk, piv = rref(cur.field, first_basis)
        assert rk == total, "supplied socle basis has wrong rank"
        cur = quotient_rep(cur, red[:rk], piv)
    while cur.dim > 0:
        parts = socle_parts_shared(cur, simples, rng)
        assert parts, "empty socle; simple list incomplete"
        layer = {}
        rows = []
        for s, c, homs in parts:
            layer[s.label.render()] = c
            rows.extend(homs)
        layers.append(layer)
        total = sum(s.dim * c for s, c, _ in parts)
        if total == cur.dim or (depth is not None and len(layers) >= depth):
            break
        stacked = np.concatenate(rows, axis=0)
        red, rk, piv = rref(cur.field, stacked)
        assert rk == total, "socle pieces not independent"
        cur = quotient_rep(cur, red[:rk], piv)
    return layers


def loewy_layers(m: Rep, simples, rng, depth=None, head=None, head_maps=None):
    """Radical-quotient layers of m (head first) via the dual socle series.

    head/head_maps: optional known head multiplicities {label: mult} and
    the stacked projection matrix (dim m x total) whose left kernel is
    rad m; supplying them skips the first dual-side pass.
    """
    from ..gmodule import dual as _dual

    known = {s.label.render() for s in simples if s.label}
    md = _dual(m)
    first_layer = first_basis = None
    if head is not None and head_maps is not None:
        from .core import left_null

        rad_rows = left_null(m.field, head_maps)
        first_basis = nullspace(m.field, rad_rows)
        first_layer = {
            (SimpleLabel.parse(n).dual().render()
             if SimpleLabel.parse(n).dual().render() in known else n): c
            for n, c in head.items()
        }
    dual_layers = socle_series_shared(md, simples, rng, depth,
                                      first_layer=first_layer,
                                      first_basis=first_basis)
    out = []
    for layer in dual_layers:
        mapped = {}
        for name, c in layer.items():
            d = SimpleLabel.parse(name).dual().render()
            # self-dual simples keep their registry name
            mapped[d if d in known else name] = c
        out.append(mapped)
    return out


def label_of(simple: Rep, registry, rng) -> str:
    if simple.label is not None:
        return simple.label.render()
    for cand in registry or []:
        if cand.label and cand.dim == simple.dim and iso_test(cand, simple, rng):
            return cand.label.render()
    return f"?{simple.dim}"


def layer_string(mults, registry, rng) -> str:
    names = []
    for s, c in mults:
        names.extend([label_of(s, registry, rng)] * c)
    names.sort(key=_label_sort_key)
    return ",".join(names)


def _label_sort_key(name):
    import re

    m = re.match(r"b?(\d+)", name)
    return (int(m.group(1)) if m else 0, name)


def structure_string(m: Rep, simples, rng) -> str:
    """Render per the print convention: '/' between Loewy layers, ','
    within a layer, 'circled plus' between direct summands."""
    r, comp = split_trivial_summands(m, rng)
    parts = ["1"] * r
    if comp.dim:
        layers = loewy_series(comp, simples, rng)
        if len(layers) == 1:
            # semisimple: render each summand separately
            for s, c in layers[0]:
                parts.extend([label_of(s, simples, rng)] * c)
        else:
            body = "/".join(layer_string(layer, simples, rng) for layer in layers)
            parts.append(f"({body})" if r else body)
    parts_sorted = sorted(parts, key=_label_sort_key)
    return "⊕".join(parts_sorted)

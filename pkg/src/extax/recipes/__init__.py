"""Identification recipes: a small expression language over modules.

Grammar:
    dual(E) | twist(E,i) | tensor(E,E) | sym2(E) | sym3(E) | ext2(E) |
    ext3(E) | sub(E,d) | quo(E,d) | summand(E,d) | cf(E,d) | soc(E,d) |
    cfnew(E,d) | <label>

``cfnew`` picks the composition factor of dimension d that is not
isomorphic to any label already defined — used by derived recipes that
must separate same-dimension simples.  ``cfany`` makes the arbitrary
choice the source tables allow (e.g. dual pairs like the two 32s of
G2(2)'): it orders candidates by the traces of a fixed word list, so
the choice is deterministic and seed-independent.

Book files (.rcp):
    book <group>
    seed <label> = natural | natural2 | choice
    def <label> = <expr>
    derived <label> = <expr>      (recipe invented here, not in the source tables)
    check simple <expr>
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources

import numpy as np

from ..budgets import DEFAULT as DEFAULT_BUDGET
from ..errors import AmbiguousPiece, NoSuchPiece, RecipeSyntaxError
from ..gmodule import (
    Rep,
    SimpleLabel,
    dual,
    ext_power,
    frobenius_twist,
    natural,
    sym_power,
    tensor,
)
from ..meataxe import chop, find_piece, hom_space_from_simple, is_irreducible, iso_test

_TOKEN = re.compile(r"\s*([a-z][a-z0-9]*\(|[(),]|[^\s(),]+)")


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise RecipeSyntaxError(f"bad recipe syntax at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


_OPS = {
    "dual(": 1,
    "twist(": (1, "int"),
    "tensor(": 2,
    "sym2(": 1,
    "sym3(": 1,
    "ext2(": 1,
    "ext3(": 1,
    "sub(": (1, "int"),
    "quo(": (1, "int"),
    "summand(": (1, "int"),
    "cf(": (1, "int"),
    "cfnew(": (1, "int"),
    "cfany(": (1, "int"),
    "soc(": (1, "int"),
}


@dataclass(frozen=True)
class RecipeExpr:
    op: str  # "label" or operator name without paren
    args: tuple = ()
    number: int | None = None

    def render(self):
        if self.op == "label":
            return self.args[0]
        inner = ",".join(a.render() for a in self.args)
        if self.number is not None:
            inner += f",{self.number}"
        return f"{self.op}({inner})"


def parse_recipe(text: str) -> RecipeExpr:
    tokens = _tokenize(text.strip())
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise RecipeSyntaxError("unexpected end of recipe")
        tok = tokens[pos]
        if tok in _OPS:
            pos += 1
            spec = _OPS[tok]
            n_args = spec if isinstance(spec, int) else spec[0]
            wants_int = not isinstance(spec, int)
            args = []
            for i in range(n_args):
                args.append(parse())
                if i < n_args - 1 or wants_int:
                    _expect(",")
            number = None
            if wants_int:
                number = int(tokens[pos])
                pos += 1
            _expect(")")
            return RecipeExpr(tok[:-1], tuple(args), number)
        if tok in ("(", ")", ","):
            raise RecipeSyntaxError(f"unexpected {tok!r}")
        pos += 1
        SimpleLabel.parse(tok)  # validates
        return RecipeExpr("label", (tok,))

    def _expect(sym):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != sym:
            got = tokens[pos] if pos < len(tokens) else "end"
            raise RecipeSyntaxError(f"expected {sym!r}, got {got!r}")
        pos += 1

    expr = parse()
    if pos != len(tokens):
        raise RecipeSyntaxError(f"trailing tokens: {tokens[pos:]}")
    return expr


@dataclass
class RecipeBook:
    group: str
    seeds: list  # (label string, kind)
    defs: list  # (label string, RecipeExpr, derived: bool)
    checks: list  # ("simple", RecipeExpr)


def parse_book(text: str) -> RecipeBook:
    group = None
    seeds, defs, checks = [], [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "book":
            group = rest.strip()
        elif head == "seed":
            label, _, kind = rest.partition("=")
            seeds.append((label.strip(), kind.strip()))
        elif head in ("def", "derived"):
            label, _, expr = rest.partition("=")
            defs.append((label.strip(), parse_recipe(expr), head == "derived"))
        elif head == "check":
            kind, _, expr = rest.strip().partition(" ")
            checks.append((kind, parse_recipe(expr)))
        else:
            raise RecipeSyntaxError(f"unknown book line: {raw!r}")
    if group is None:
        raise RecipeSyntaxError("book missing group header")
    return RecipeBook(group, seeds, defs, checks)


def _book_path(group_name):
    fname = (
        group_name.replace("(", "_")
        .replace(")", "")
        .replace(",", "_")
        .replace("'", "d")
        .replace("+", "plus")
        .replace("-", "minus")
        .replace(".", "")
        .lower()
        + ".rcp"
    )
    override = os.environ.get("EXTAX_DATA")
    if override:
        return os.path.join(override, "recipes", fname)
    return str(resources.files("extax.recipes") / "data" / fname)


def load_book(group_name) -> RecipeBook:
    path = _book_path(group_name)
    if not os.path.exists(path):
        raise FileNotFoundError(f"no recipe book for {group_name}: {path}")
    with open(path) as fh:
        return parse_book(fh.read())


class Workshop:
    """Evaluates a book, keeping labeled simples and evaluation caches."""

    def __init__(self, group, seed=12345, budget=DEFAULT_BUDGET):
        self.group = group
        self.rng = np.random.default_rng(seed)
        self.budget = budget
        self.env: dict = {}

    def simples(self):
        return list(self.env.values())

    def resolve(self, label_str: str) -> Rep:
        if label_str in self.env:
            return self.env[label_str]
        lab = SimpleLabel.parse(label_str)
        base = lab.dual().render()
        if lab.star and base in self.env:
            out = dual(self.env[base]).with_label(lab)
            self.env[label_str] = out
            return out
        raise KeyError(f"label {label_str} not defined yet")

    def eval(self, expr: RecipeExpr) -> Rep:
        op = expr.op
        if op == "label":
            return self.resolve(expr.args[0])
        if op == "dual":
            return dual(self.eval(expr.args[0]))
        if op == "twist":
            return frobenius_twist(self.eval(expr.args[0]), expr.number)
        if op == "tensor":
            out = tensor(self.eval(expr.args[0]), self.eval(expr.args[1]))
            self.budget.check_dim(out.dim, "tensor")
            return out
        if op in ("sym2", "sym3"):
            return sym_power(self.eval(expr.args[0]), int(op[-1]))
        if op in ("ext2", "ext3"):
            return ext_power(self.eval(expr.args[0]), int(op[-1]))
        if op in ("sub", "quo", "summand", "soc", "cf"):
            kind = {"sub": "sub", "quo": "quotient", "summand": "summand",
                    "soc": "socle", "cf": "factor"}[op]
            host = self.eval(expr.args[0])
            self.budget.check_dim(host.dim, "piece host")
            return find_piece(host, kind, expr.number, self.rng, self.budget)
        if op in ("cfnew", "cfany"):
            host = self.eval(expr.args[0])
            cands = [
                s
                for s, c in chop(host, self.rng, self.budget)
                if s.dim == expr.number
            ]
            known = [v for v in self.env.values() if v.dim == expr.number]
            fresh = [
                s
                for s in cands
                if not any(iso_test(s, k, self.rng) for k in known)
            ]
            if not fresh:
                raise NoSuchPiece(f"no new factor of dim {expr.number}")
            if op == "cfnew":
                if len(fresh) > 1:
                    raise AmbiguousPiece(
                        f"{len(fresh)} new factors of dim {expr.number}"
                    )
                return fresh[0]
            return min(fresh, key=_trace_key)
        raise RecipeSyntaxError(f"unknown op {op}")

    def define(self, label_str: str, rep: Rep, *, check_simple=True):
        lab = SimpleLabel.parse(label_str)
        if rep.dim != lab.dim:
            raise ValueError(f"{label_str}: recipe gave dim {rep.dim}")
        if check_simple:
            irr, _ = is_irreducible(rep, self.rng, self.budget)
            if not irr:
                raise ValueError(f"{label_str}: recipe result is not simple")
        self.env[label_str] = rep.with_label(lab)


def _trace_key(rep):
    """Seed-independent candidate ordering: traces of fixed short words."""
    words = []
    ngen = rep.group.n_gens
    for i in range(1, min(ngen, 4) + 1):
        words.append((i,))
        words.append((i, 1))
        words.append((i, 2) if ngen >= 2 else (i, 1, 1))
    return tuple(rep.act_word(w).trace() for w in words)


def execute_book(group, book: RecipeBook, seed=12345, budget=DEFAULT_BUDGET,
                 check_distinct=True):
    """Run a book; returns the Workshop with {label string: labeled Rep}."""
    shop = Workshop(group, seed=seed, budget=budget)
    for label_str, kind in book.seeds:
        idx = {"natural": 0, "natural2": 1, "choice": 0}[kind]
        shop.define(label_str, natural(group, idx))
    for label_str, expr, derived in book.defs:
        shop.define(label_str, shop.eval(expr))
    for kind, expr in book.checks:
        if kind == "simple":
            rep = shop.eval(expr)
            irr, _ = is_irreducible(rep, shop.rng, budget)
            if not irr:
                raise ValueError(f"check failed: {expr.render()} is not simple")
    if check_distinct:
        names = sorted(shop.env)
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                if shop.env[a].dim == shop.env[b].dim and iso_test(
                    shop.env[a], shop.env[b], shop.rng
                ):
                    raise ValueError(f"labels {a} and {b} are isomorphic")
    return shop


def disambiguation_report(shop: Workshop):
    """Evidence separating same-dimension labels: list of text lines."""
    byname = sorted(shop.env)
    lines = []
    for i, a in enumerate(byname):
        for b in byname[i + 1 :]:
            ra, rb = shop.env[a], shop.env[b]
            if ra.dim != rb.dim:
                continue
            same = iso_test(ra, rb, shop.rng)
            lines.append(
                f"{a} vs {b}: dim {ra.dim}, iso_test={'yes' if same else 'no'}"
            )
    return lines

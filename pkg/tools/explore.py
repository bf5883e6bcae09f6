"""Interactive helper for deriving recipe books: chop expressions, print factors.

Usage: python3 tools/explore.py "SL(3,3)" "cf(tensor(3,dual(3)),7)" ...
or import and poke around.
"""

from __future__ import annotations

import os
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from extax.groups import group_make  # noqa: E402
from extax.gmodule import natural, dual, tensor, sym_power, ext_power, frobenius_twist  # noqa: E402
from extax.meataxe import chop, is_irreducible, iso_test  # noqa: E402


def factors_of(group_name, build, seed=0):
    g = group_make(group_name)
    rng = np.random.default_rng(seed)
    m = build(g)
    fac = chop(m, rng)
    return fac


def show(group_name, build, seed=0, tag=""):
    fac = factors_of(group_name, build, seed)
    print(f"{group_name} {tag}: dim {sum(s.dim*c for s,c in fac)} ->",
          sorted([(s.dim, c) for s, c in fac]))
    return fac

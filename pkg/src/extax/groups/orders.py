"""Exact order formulas for the supported group families."""

from __future__ import annotations

import re
from math import prod


def _parse(name: str):
    m = re.fullmatch(r"(SL|SU|Sp)\((\d+),(\d+)\)", name)
    if m:
        return m.group(1), int(m.group(2)), int(m.group(3))
    m = re.fullmatch(r"Omega\(([+-]),(\d+),(\d+)\)", name)
    if m:
        return "Omega" + m.group(1), int(m.group(2)), int(m.group(3))
    m = re.fullmatch(r"Omega\((\d+),(\d+)\)", name)
    if m:
        return "OmegaOdd", int(m.group(1)), int(m.group(2))
    m = re.fullmatch(r"3D4\((\d+)\)", name)
    if m:
        return "3D4", 8, int(m.group(1))
    m = re.fullmatch(r"G2\((\d+)\)('?)", name)
    if m:
        return ("G2p" if m.group(2) else "G2"), 7, int(m.group(1))
    m = re.fullmatch(r"F4\((\d+)\)", name)
    if m:
        return "F4", 26, int(m.group(1))
    if name == "3.Sp(4,2)'":
        return "3Sp42d", 3, 2
    raise ValueError(f"unrecognised group name {name!r}")


def order_and_sylow(name: str):
    """(|G|, |G|_p) for the group as realised by the shipped generators.

    Odd-dimensional orthogonal and Omega+/- entries are the simply
    connected (spin) groups, matching the central kernels in the tables.
    """
    kind, n, q = _parse(name)
    if kind == "SL":
        order = q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(2, n + 1))
        npos = n * (n - 1) // 2
    elif kind == "SU":
        order = q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(2, n + 1))
        npos = n * (n - 1) // 2
    elif kind == "Sp":
        m = n // 2
        order = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        npos = m * m
    elif kind == "OmegaOdd":
        m = (n - 1) // 2
        order = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        npos = m * m
    elif kind == "Omega+":
        m = n // 2
        order = (
            q ** (m * (m - 1))
            * (q**m - 1)
            * prod(q ** (2 * i) - 1 for i in range(1, m))
        )
        npos = m * (m - 1)
    elif kind == "Omega-":
        m = n // 2
        order = (
            q ** (m * (m - 1))
            * (q**m + 1)
            * prod(q ** (2 * i) - 1 for i in range(1, m))
        )
        npos = m * (m - 1)
    elif kind == "3D4":
        order = q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
        npos = 12
    elif kind in ("G2", "G2p"):
        order = q**6 * (q**6 - 1) * (q**2 - 1)
        npos = 6
        if kind == "G2p":
            order //= 2
            # G2(2)' has index 2, Sylow-2 order 2^5
            return order, 2**5
    elif kind == "F4":
        order = (
            q**24 * (q**2 - 1) * (q**6 - 1) * (q**8 - 1) * (q**12 - 1)
        )
        npos = 24
    elif kind == "3Sp42d":
        return 1080, 8
    else:  # pragma: no cover
        raise AssertionError(kind)
    p = _char_of(q)
    return order, p ** (npos * _deg_of(q, p))


def _char_of(q):
    for p in (2, 3, 5, 7):
        if q % p == 0:
            return p
    raise ValueError(f"q={q} not a power of a supported prime")


def _deg_of(q, p):
    k = 0
    while q > 1:
        q //= p
        k += 1
    return k

"""Root-system data and the Weyl dimension formula.

Positive roots are hard-coded as integer combinations of simple roots,
paired with the symmetrizing d-values; everything downstream is exact
integer arithmetic.  Coordinate order matches the highest-weight label
strings used by the table corpus (e.g. the first G2 coordinate is the
7-dimensional fundamental).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .errors import UnknownWeight

# type name -> (positive roots in simple-root coordinates, d-values)
_TABLES = {'A1': ([(1,)], (1,)),
 'A2': ([(0, 1), (1, 0), (1, 1)], (1, 1)),
 'A3': ([(0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)], (1, 1, 1)),
 'A4': ([(0, 0, 0, 1),
         (0, 0, 1, 0),
         (0, 1, 0, 0),
         (1, 0, 0, 0),
         (0, 0, 1, 1),
         (0, 1, 1, 0),
         (1, 1, 0, 0),
         (0, 1, 1, 1),
         (1, 1, 1, 0),
         (1, 1, 1, 1)],
        (1, 1, 1, 1)),
 'B2': ([(0, 1), (1, 0), (1, 1), (1, 2)], (2, 1)),
 'B3': ([(0, 0, 1),
         (0, 1, 0),
         (1, 0, 0),
         (0, 1, 1),
         (1, 1, 0),
         (0, 1, 2),
         (1, 1, 1),
         (1, 1, 2),
         (1, 2, 2)],
        (2, 2, 1)),
 'B4': ([(0, 0, 0, 1),
         (0, 0, 1, 0),
         (0, 1, 0, 0),
         (1, 0, 0, 0),
         (0, 0, 1, 1),
         (0, 1, 1, 0),
         (1, 1, 0, 0),
         (0, 0, 1, 2),
         (0, 1, 1, 1),
         (1, 1, 1, 0),
         (0, 1, 1, 2),
         (1, 1, 1, 1),
         (0, 1, 2, 2),
         (1, 1, 1, 2),
         (1, 1, 2, 2),
         (1, 2, 2, 2)],
        (2, 2, 2, 1)),
 'C2': ([(0, 1), (1, 0), (1, 1), (2, 1)], (1, 2)),
 'C3': ([(0, 0, 1),
         (0, 1, 0),
         (1, 0, 0),
         (0, 1, 1),
         (1, 1, 0),
         (0, 2, 1),
         (1, 1, 1),
         (1, 2, 1),
         (2, 2, 1)],
        (1, 1, 2)),
 'C4': ([(0, 0, 0, 1),
         (0, 0, 1, 0),
         (0, 1, 0, 0),
         (1, 0, 0, 0),
         (0, 0, 1, 1),
         (0, 1, 1, 0),
         (1, 1, 0, 0),
         (0, 0, 2, 1),
         (0, 1, 1, 1),
         (1, 1, 1, 0),
         (0, 1, 2, 1),
         (1, 1, 1, 1),
         (0, 2, 2, 1),
         (1, 1, 2, 1),
         (1, 2, 2, 1),
         (2, 2, 2, 1)],
        (1, 1, 1, 2)),
 'D4': ([(0, 0, 0, 1),
         (0, 0, 1, 0),
         (0, 1, 0, 0),
         (1, 0, 0, 0),
         (0, 1, 0, 1),
         (0, 1, 1, 0),
         (1, 1, 0, 0),
         (0, 1, 1, 1),
         (1, 1, 0, 1),
         (1, 1, 1, 0),
         (1, 1, 1, 1),
         (1, 2, 1, 1)],
        (1, 1, 1, 1)),
 'F4': ([(0, 0, 0, 1),
         (0, 0, 1, 0),
         (0, 1, 0, 0),
         (1, 0, 0, 0),
         (0, 0, 1, 1),
         (0, 1, 1, 0),
         (1, 1, 0, 0),
         (0, 1, 1, 1),
         (0, 1, 2, 0),
         (1, 1, 1, 0),
         (0, 1, 2, 1),
         (1, 1, 1, 1),
         (1, 1, 2, 0),
         (0, 1, 2, 2),
         (1, 1, 2, 1),
         (1, 2, 2, 0),
         (1, 1, 2, 2),
         (1, 2, 2, 1),
         (1, 2, 2, 2),
         (1, 2, 3, 1),
         (1, 2, 3, 2),
         (1, 2, 4, 2),
         (1, 3, 4, 2),
         (2, 3, 4, 2)],
        (2, 2, 1, 1)),
 'G2': ([(0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2)], (1, 3))}


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of one of the supported finite types."""

    type: str
    positive_roots: tuple
    d: tuple

    @property
    def rank(self) -> int:
        return len(self.d)


def root_system(type_name: str) -> RootSystem:
    if type_name not in _TABLES:
        raise UnknownWeight(f"unsupported root system {type_name!r}")
    pr, d = _TABLES[type_name]
    return RootSystem(type_name, tuple(tuple(a) for a in pr), tuple(d))


def weyl_dim(rs: RootSystem, lam) -> int:
    """dim W(lambda) = prod <lambda+rho, alpha^vee> / <rho, alpha^vee>."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise UnknownWeight(f"weight {lam} has wrong rank for {rs.type}")
    if any(x < 0 for x in lam):
        raise UnknownWeight(f"weight {lam} is not dominant")
    prod = Fraction(1)
    for alpha in rs.positive_roots:
        num = sum(c * dd * (l + 1) for c, dd, l in zip(alpha, rs.d, lam))
        den = sum(c * dd for c, dd in zip(alpha, rs.d))
        prod *= Fraction(num, den)
    assert prod.denominator == 1
    return int(prod)


def steinberg_weight(rs: RootSystem, q: int):
    return tuple(q - 1 for _ in range(rs.rank))


def restricted_weights(rs: RootSystem, q: int):
    """All dominant weights with coordinates < q, lexicographic order."""
    return [tuple(w) for w in _cartesian(range(q), repeat=rs.rank)]


# defining root-system type and q for each group family name, used by the
# verification layer to interpret highest-weight tables
def group_root_system(group_name: str):
    """(RootSystem, q) for a group's highest-weight labels, or None."""
    import re

    m = re.fullmatch(r"SL\((\d+),(\d+)\)", group_name)
    if m:
        n, q = int(m.group(1)), int(m.group(2))
        return root_system(f"A{n-1}"), q
    m = re.fullmatch(r"SU\((\d+),(\d+)\)", group_name)
    if m:
        n, q = int(m.group(1)), int(m.group(2))
        return root_system(f"A{n-1}"), q
    m = re.fullmatch(r"Sp\((\d+),(\d+)\)", group_name)
    if m:
        n, q = int(m.group(1)), int(m.group(2))
        return root_system(f"C{n//2}"), q
    m = re.fullmatch(r"Omega\(([+-]),8,(\d+)\)", group_name)
    if m:
        return root_system("D4"), int(m.group(2))
    m = re.fullmatch(r"Omega\((\d+),(\d+)\)", group_name)
    if m:
        n, q = int(m.group(1)), int(m.group(2))
        return root_system(f"B{(n-1)//2}"), q
    m = re.fullmatch(r"3D4\((\d+)\)", group_name)
    if m:
        return root_system("D4"), int(m.group(1))
    m = re.fullmatch(r"G2\((\d+)\)'?", group_name)
    if m:
        return root_system("G2"), int(m.group(1))
    m = re.fullmatch(r"F4\((\d+)\)", group_name)
    if m:
        return root_system("F4"), int(m.group(1))
    if group_name == "3.Sp(4,2)'":
        return root_system("C2"), 2
    return None

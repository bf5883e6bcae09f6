"""Meataxe: chopping, isomorphism, socle/radical machinery."""

from .core import (
    AlgebraElement,
    StandardBasis,
    chop,
    hom_dim,
    hom_space_from_simple,
    is_irreducible,
    iso_test,
    random_algebra_element,
    spin,
)
from .structure import (
    find_piece,
    head_mults,
    label_of,
    layer_string,
    loewy_series,
    radical,
    socle,
    socle_series,
    split_trivial_summands,
    structure_string,
)

__all__ = [
    "AlgebraElement",
    "StandardBasis",
    "chop",
    "find_piece",
    "head_mults",
    "hom_dim",
    "hom_space_from_simple",
    "is_irreducible",
    "iso_test",
    "label_of",
    "layer_string",
    "loewy_series",
    "radical",
    "random_algebra_element",
    "socle",
    "socle_series",
    "spin",
    "split_trivial_summands",
    "structure_string",
]

"""Exact checks on weighted Dynkin diagrams of real sl2 triples."""

from ._nilspan import (
    LabelError,
    b_subspace,
    catalog,
    h_n_a_plus,
    is_characteristic,
    lookup_pair,
    normalize_label,
    opposition_involution,
    orbits,
    proper_sl2_pairs,
    satake,
    satake_dot,
    verify,
    verify_all,
)

__all__ = [
    "LabelError",
    "b_subspace",
    "catalog",
    "h_n_a_plus",
    "is_characteristic",
    "lookup_pair",
    "normalize_label",
    "opposition_involution",
    "orbits",
    "proper_sl2_pairs",
    "satake",
    "satake_dot",
    "verify",
    "verify_all",
]

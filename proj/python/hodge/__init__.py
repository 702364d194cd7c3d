"""Hodge numbers of Hilbert schemes of points, wreath-product quotients and
the Calabi-Yau double cover of an Enriques Hilbert scheme.

Hodge tables are returned as ``{(p, q): h}`` dictionaries with exact ints.
"""

from ._core import (
    Error,
    OddCohomologyUnsupported,
    Surface,
    classes,
    cover_diamond_n2,
    euler,
    euler_check,
    exceptional_orbits,
    group_order,
    h2_cover,
    h_one_top,
    h_top_minus,
    hilbert_diamond,
    invariant_dims,
    load_surface_spec,
    parse_surface_spec,
    preset,
    projector_invariant_dims,
    sym_product,
    verify_paper,
)

__all__ = [
    "Error",
    "OddCohomologyUnsupported",
    "Surface",
    "classes",
    "cover_diamond_n2",
    "euler",
    "euler_check",
    "exceptional_orbits",
    "group_order",
    "h2_cover",
    "h_one_top",
    "h_top_minus",
    "hilbert_diamond",
    "invariant_dims",
    "load_surface_spec",
    "parse_surface_spec",
    "preset",
    "projector_invariant_dims",
    "sym_product",
    "verify_paper",
]

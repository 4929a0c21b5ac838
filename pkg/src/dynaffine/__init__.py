"""dynaffine: exact arithmetic dynamics of dynamically affine maps on P^1.

Fixed-point counts of power, Chebyshev, additive and Lattes maps over
algebraically closed fields of odd characteristic, cross-verified against
brute-force enumeration; tame zeta functions and their closed forms as
products of point-zeta atoms; root-rationality certificates; functional
digraphs of finite restrictions; numeric scans of the natural-boundary
witness functions.
"""

from . import arith, boundary, closedform, count, curve, dynmap, series, skewdeg
from .closedform import AtomProduct, closed_form, expand, zeta_pt_atom
from .count import (
    fixed_point_formula,
    formula_counts,
    growth_bound,
    is_coseparable,
    kernel_size_additive,
    kernel_size_elliptic,
    kernel_size_gm,
)
from .curve import Curve, Point, inseparable_exponent, is_supersingular, mult_x_map, point_count
from .dynmap import (
    AdditiveMap,
    ChebyshevMap,
    Digraph,
    LattesMap,
    PowerMap,
    RationalMap,
    SubadditiveMap,
    brute_fixed_points,
    build_map,
    cycle_census,
    dot_export,
    iterate,
    restrict_digraph,
)
from .ff import (
    FieldDesc,
    FieldElem,
    Poly,
    distinct_root_count,
    enumerate_field,
    make_field,
    poly_gcd,
    poly_radical,
)
from .series import (
    TruncSeries,
    exp_series,
    log_series,
    pade_certify,
    pair_ode_check,
    pow_series,
    recurrence_detect,
    root_rational_certificate,
    tame_from_counts,
    tame_identity_check,
    zeta_from_counts,
    zeta_union,
)

__version__ = "0.1.0"

__all__ = [
    "arith", "boundary", "closedform", "count", "curve", "dynmap", "series", "skewdeg",
    "FieldDesc", "FieldElem", "Poly", "make_field", "enumerate_field",
    "poly_radical", "distinct_root_count", "poly_gcd",
    "Curve", "Point", "point_count", "is_supersingular", "inseparable_exponent", "mult_x_map",
    "RationalMap", "Digraph", "PowerMap", "ChebyshevMap", "AdditiveMap",
    "SubadditiveMap", "LattesMap", "build_map", "iterate", "brute_fixed_points",
    "restrict_digraph", "cycle_census", "dot_export",
    "fixed_point_formula", "formula_counts", "is_coseparable", "growth_bound",
    "kernel_size_gm", "kernel_size_elliptic", "kernel_size_additive",
    "TruncSeries", "exp_series", "log_series", "pow_series",
    "zeta_from_counts", "tame_from_counts", "tame_identity_check",
    "recurrence_detect", "pade_certify", "root_rational_certificate",
    "zeta_union", "pair_ode_check",
    "AtomProduct", "zeta_pt_atom", "closed_form", "expand",
]

"""Functional digraphs of finite restrictions.

Restricting a self-map of P^1 to the points over F_{p^N} gives a functional
graph: every component is a cycle with hanging trees.  Dynamically affine
maps (x^2 - 2, Lattes maps) produce strikingly regular trees, unlike generic
quadratics such as x^2 + 1.  This script writes DOT files (render with
`dot -Tpdf`) and prints the cycle censuses side by side.
"""

import os

from dynaffine import (
    Curve,
    LattesMap,
    Poly,
    RationalMap,
    build_map,
    make_field,
    restrict_digraph,
)

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)


def polynomial_map(p, coeffs):
    F = make_field(p)
    return RationalMap(Poly.from_ints(F, coeffs), Poly.one(F))


cases = [
    ("x2_plus_1_on_F343", polynomial_map(7, [1, 0, 1]), make_field(7, 3)),
    ("x2_minus_2_on_F343", polynomial_map(7, [-2, 0, 1]), make_field(7, 3)),
    ("x2_minus_2_on_F289", polynomial_map(17, [-2, 0, 1]), make_field(17, 2)),
    (
        "lattes2_on_F1331",
        build_map(LattesMap(Curve(make_field(11), -3, 2, 0), 2)),
        make_field(11, 3),
    ),
]

for name, f, field in cases:
    g = restrict_digraph(f, field)
    census = g.cycle_census()
    path = os.path.join(OUT, name + ".dot")
    with open(path, "w") as fh:
        fh.write(g.dot_export())
    lengths = ", ".join(f"P_{l}={c}" for l, c in sorted(census.counts.items()))
    print(f"{name}: {g.size} vertices, cyclic density {census.density} "
          f"(~{float(census.density):.4f})")
    print(f"  cycles: {lengths}")
    print(f"  wrote {path}")

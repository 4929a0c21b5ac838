"""Fixed points two ways: the kernel-size formula against raw enumeration.

Every map in the catalog comes from an isogeny sigma on a commutative group
after dividing by a finite automorphism group Gamma.  The number of fixed
points of the n-th iterate is

    f_n  =  (boundary points)  +  (1/|Gamma|) * sum over gamma of #ker(sigma^n - gamma)

and each kernel size is a degree divided by an inseparable degree, which for
these groups reduces to elementary p-adic arithmetic.  The brute-force side
knows none of that: it composes the rational map n times and counts distinct
roots of P_n(x) - x Q_n(x) over the algebraic closure.
"""

from dynaffine import (
    AdditiveMap,
    ChebyshevMap,
    Curve,
    LattesMap,
    PowerMap,
    brute_fixed_points,
    build_map,
    fixed_point_formula,
    make_field,
)

maps = [
    PowerMap(2, 7),
    ChebyshevMap(2, 7),
    LattesMap(Curve(make_field(5), -3, 2, 0), 2),  # y^2 = x(x-1)(x-2)
    AdditiveMap(3, (1, 1)),  # X + X^3
    PowerMap(5, 5),  # coseparable: p | m
]

for d in maps:
    f = build_map(d)
    print(f"\n{d.label()}   (degree {d.deg})")
    print(f"  n | formula | brute | kernel sizes per gamma")
    n = 1
    while d.deg**n <= 4000:
        rep = fixed_point_formula(d, n)
        brute = brute_fixed_points(f, n)
        kernels = ", ".join(f"{t.gamma}: {t.kernel}" for t in rep.terms)
        flag = "" if rep.total == brute else "   <-- MISMATCH"
        print(f" {n:2d} | {rep.total:7d} | {brute:5d} | {kernels}{flag}")
        n += 1

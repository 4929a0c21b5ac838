"""Tame zeta functions in closed form.

The tame zeta function sums fixed-point counts only over iterates coprime to
the characteristic.  For each catalog map it is a finite product of shifted
point-zeta atoms

    zeta*_pt(a z^b) = (1 - (a z^b)^p)^(1/p) / (1 - a z^b)

raised to exponents in Z[1/p] scaled by the multiplicative order s: the
fractional exponent is where the p-adic deviation of the counts lives.  This
script builds each tame zeta function twice, from counts and from the closed
form, and prints the factorization.
"""

from dynaffine import (
    AdditiveMap,
    ChebyshevMap,
    Curve,
    LattesMap,
    PowerMap,
    closed_form,
    expand,
    formula_counts,
    make_field,
    tame_from_counts,
)

T = 24
maps = [
    PowerMap(2, 7),
    PowerMap(3, 5),
    ChebyshevMap(2, 7),   # odd multiplicative order
    ChebyshevMap(2, 5),   # even multiplicative order
    LattesMap(Curve(make_field(5), -3, 2, 0), 2),    # ordinary curve
    LattesMap(Curve(make_field(11), -3, 2, 0), 2),   # supersingular curve
    AdditiveMap(3, (1, 1)),
    PowerMap(7, 7),       # p | m: the correction factor disappears
]

for d in maps:
    counts = formula_counts(d, T)
    from_counts = tame_from_counts(counts, d.p, T)
    ap = closed_form(d)
    from_atoms = expand(ap, T)
    verdict = "equal" if from_counts == from_atoms else "DIFFERENT"
    print(f"{d.label()}")
    print(f"  zeta* = {ap.pretty()}")
    print(f"  first coefficients: {[str(c) for c in from_counts.coeffs[:6]]}")
    print(f"  counts vs closed form at order {T}: {verdict}\n")

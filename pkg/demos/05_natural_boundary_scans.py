"""Numeric evidence for natural boundaries.

The non-holonomic part of a full zeta function is driven by the series

    G_h(z) = sum |n|_p^h z^n        H_beta(z) = sum beta^(|n|_p^(-1)) z^n

whose real parts blow down to -infinity along every ray towards a p-power
root of unity.  The functional equations evaluate them stably near the
circle; this is numeric evidence only (a natural boundary is not decidable
from finitely many samples), which is why the library quarantines all
floating point in this one module.
"""

from dynaffine.boundary import BoundaryFunc, radial_scan, scan_csv

lambdas = [0.5, 0.9, 0.99, 0.999]

for p in (3, 5, 7):
    for kind, param in (("G", 1.0), ("H", 1 / 9)):
        f = BoundaryFunc(kind, param, p)
        vals = radial_scan(f, 1, lambdas)
        decorated = "  ".join(f"{v.real:10.3f}" for v in vals)
        print(f"p={p} {kind}({param:.3g}), primitive p-th root direction:")
        print(f"  Re at lambda={lambdas}: {decorated}")

print("\nCSV sample (G_1, p=3, towards a primitive 9th root of unity):")
print(scan_csv(BoundaryFunc("G", 1.0, 3), 2, lambdas))

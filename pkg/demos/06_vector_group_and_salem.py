"""Two instructive counterexamples from higher-dimensional groups.

First, the 2x2 skew-matrix endomorphism sigma = [[phi^2, phi], [phi, 0]] of a
vector group over F_3: it is coseparable, yet its degree sequence
deg(sigma^n - 1) = 3^(Dieudonne degree) follows the two-case formula

    9^n (odd n),    9^(n - |n|_3^(-1)) (even n)

whose generating function contains H_(1/9)(81 z^2) -- a natural boundary even
though every kernel is as large as it can be.

Second, the companion matrix of the Salem quartic x^4 - 3x^3 + 3x^2 - 3x + 1
acting on a 4-torus: the torus degree sequence |det(sigma^n - 1)| is linearly
recurrent but has several dominant roots of equal modulus (alpha and
alpha*beta with |beta| = 1), so the dominant-root hypothesis fails.
"""

from fractions import Fraction

from dynaffine.arith import (
    companion_matrix,
    salem_polynomial,
    torus_deg,
    unit_circle_root_count,
    v_p,
)
from dynaffine.series import recurrence_detect
from dynaffine.skewdeg import example_5_8_deg

print("vector-group example over F_3:")
print("  n : deg(sigma^n - 1)   formula")
for n in range(1, 9):
    got = example_5_8_deg(n)
    want = 9**n if n % 2 else 9 ** (n - 3 ** v_p(n, 3))
    print(f"  {n} : {got:>10}   {want:>10}   {'ok' if got == want else 'XX'}")

beta = Fraction(1, 9)
coeff_6 = Fraction(81) ** 3 * beta ** (3 ** v_p(3, 3))
print(f"  coefficient of z^6 in 9z/(1-81z^2) + H_1/9(81z^2): {coeff_6} "
      f"== deg(sigma^6-1) = {example_5_8_deg(6)}")

g = salem_polynomial()
M = companion_matrix(g)
print(f"\nSalem example, g = {g} (low to high):")
print(f"  exactly {unit_circle_root_count(g)} roots on the unit circle (Sturm count)")
seq = [torus_deg(M, n) for n in range(1, 49)]
print(f"  torus degrees: {seq[:8]} ...")
rep = recurrence_detect(seq, max_order=16, window=48)
roots, err = rep.roots_certified(dps=60)
moduli = sorted((abs(r) for r in roots), reverse=True)
print(f"  linearly recurrent of order {rep.order}; top root moduli: "
      f"{[float(m) for m in moduli[:4]]}")
print("  three dominant roots share the maximal modulus: H4 fails")

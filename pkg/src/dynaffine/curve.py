"""Elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over odd-characteristic fields.

The a2 term is kept (no completing the cube) so curves like
y^2 = x(x-1)(x-2) are representable verbatim.  Multiplication-by-m descends
to the x-line through division polynomials; that descended map is the
standard Lattes map for the inversion quotient.
"""

from __future__ import annotations

import functools

from .ff import FieldDesc, FieldElem, Poly, poly_gcd


class Point:
    """Affine point or the point at infinity (x = y = None)."""

    __slots__ = ("x", "y")

    def __init__(self, x: FieldElem | None, y: FieldElem | None):
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls) -> "Point":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity:
            return hash(("pt", "inf"))
        return hash(("pt", self.x.val, self.y.val))

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x!r}, {self.y!r})"


class Curve:
    def __init__(self, base: FieldDesc, a2, a4, a6):
        if base.p == 2:
            raise ValueError("characteristic 2 not supported")
        self.base = base
        self.a2 = base.element(a2)
        self.a4 = base.element(a4)
        self.a6 = base.element(a6)
        if not self.discriminant():
            raise ValueError("singular curve: cubic discriminant vanishes")

    def discriminant(self) -> FieldElem:
        # discriminant of the cubic x^3 + a2 x^2 + a4 x + a6
        a, b, c = self.a2, self.a4, self.a6
        return 18 * a * b * c - 4 * a**3 * c + a**2 * b**2 - 4 * b**3 - 27 * c**2

    def rhs(self, x: FieldElem) -> FieldElem:
        return x**3 + self.a2 * x**2 + self.a4 * x + self.a6

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        return P.y**2 == self.rhs(P.x)

    def point(self, x, y) -> Point:
        P = Point(self.base.element(x), self.base.element(y))
        if not self.contains(P):
            raise ValueError(f"{P!r} is not on the curve")
        return P

    def b_invariants(self):
        """b2, b4, b6, b8 for the a1 = a3 = 0 model."""
        a2, a4, a6 = self.a2, self.a4, self.a6
        return 4 * a2, 2 * a4, 4 * a6, 4 * a2 * a6 - a4**2

    def __eq__(self, other):
        return (
            isinstance(other, Curve)
            and self.base == other.base
            and (self.a2, self.a4, self.a6) == (other.a2, other.a4, other.a6)
        )

    def __hash__(self):
        return hash((self.base, self.a2.val, self.a4.val, self.a6.val))

    def __repr__(self):
        return (
            f"y^2 = x^3 + {self.a2!r}*x^2 + {self.a4!r}*x + {self.a6!r} over {self.base!r}"
        )


def add(P: Point, Q: Point, on: Curve) -> Point:
    if not on.contains(P) or not on.contains(Q):
        raise ValueError("point not on curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or not P.y:
            return Point.infinity()
        lam = (3 * P.x**2 + 2 * on.a2 * P.x + on.a4) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam**2 - on.a2 - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return Point(x3, y3)


def neg(P: Point) -> Point:
    if P.is_infinity:
        return P
    return Point(P.x, -P.y)


def mul(m: int, P: Point, on: Curve) -> Point:
    if not on.contains(P):
        raise ValueError("point not on curve")
    if m < 0:
        return neg(mul(-m, P, on))
    R = Point.infinity()
    Q = P
    while m:
        if m & 1:
            R = add(R, Q, on)
        Q = add(Q, Q, on)
        m >>= 1
    return R


def point_count(c: Curve, enumeration_bound: int = 10**6) -> int:
    """#E(F_q) by direct enumeration of x-coordinates."""
    base = c.base
    if base.order > enumeration_bound:
        raise ValueError("field too large for enumeration")
    count = 1  # infinity
    for x in range(base.order):
        v = c.rhs(FieldElem(base, x)).val
        if v == 0:
            count += 1
        elif base.is_square(v):
            count += 2
    return count


def trace(c: Curve) -> int:
    if c.base.N != 1:
        raise ValueError("trace requires a curve over the prime field")
    return c.base.p + 1 - point_count(c)


def is_supersingular(c: Curve) -> bool:
    """True iff the Frobenius trace is divisible by p (prime-field model)."""
    return trace(c) % c.base.p == 0


def inseparable_exponent(c: Curve) -> int:
    """log_p of the inseparable degree of [p]: 1 if ordinary, 2 if supersingular."""
    return 2 if is_supersingular(c) else 1


def _cubic(c: Curve) -> Poly:
    F = c.base
    x = Poly.x(F)
    return (
        x**3
        + x**2 * c.a2
        + x * c.a4
        + Poly.constant(F, c.a6.val)
    )


@functools.lru_cache(maxsize=None)
def _division_w(c: Curve, top: int) -> tuple[Poly, ...]:
    """w_0..w_top where psi_m = w_m for odd m and psi_m = 2y*w_m for even m.

    The substitution y^2 = C(x) is built in, so everything lives in K[x].
    """
    F = c.base
    b2, b4, b6, b8 = c.b_invariants()
    x = Poly.x(F)
    C = _cubic(c)
    w = [Poly.zero(F), Poly.one(F), Poly.one(F)]
    w3 = x**4 * 3 + x**3 * b2 + x**2 * (b4 * 3) + x * (b6 * 3) + Poly.constant(F, b8.val)
    w.append(w3)
    w4 = (
        x**6 * 2
        + x**5 * b2
        + x**4 * (b4 * 5)
        + x**3 * (b6 * 10)
        + x**2 * (b8 * 10)
        + x * (b2 * b8 - b4 * b6)
        + Poly.constant(F, (b4 * b8 - b6 * b6).val)
    )
    w.append(w4)
    C2_16 = (C * C) * 16
    for t in range(5, top + 1):
        if t % 2 == 1:
            k = (t - 1) // 2
            if k % 2 == 0:
                wt = C2_16 * w[k + 2] * w[k] ** 3 - w[k - 1] * w[k + 1] ** 3
            else:
                wt = w[k + 2] * w[k] ** 3 - C2_16 * w[k - 1] * w[k + 1] ** 3
        else:
            k = t // 2
            wt = w[k] * (w[k + 2] * w[k - 1] ** 2 - w[k - 2] * w[k + 1] ** 2)
        w.append(wt)
    return tuple(w)


def mult_x_map(c: Curve, m: int):
    """The degree-m^2 rational function giving x([m]P) in terms of x(P).

    This is the Lattes map for the {+-1} quotient with pi the x-coordinate.
    """
    from .dynmap import RationalMap

    if m < 2:
        raise ValueError("m must be at least 2")
    F = c.base
    x = Poly.x(F)
    C = _cubic(c)
    w = _division_w(c, m + 1)
    if m % 2 == 1:
        num = x * w[m] ** 2 - (C * 4) * w[m - 1] * w[m + 1]
        den = w[m] ** 2
    else:
        den = (C * 4) * w[m] ** 2
        num = x * den - w[m - 1] * w[m + 1]
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    result = RationalMap(num, den)
    if result.degree != m * m:
        raise ArithmeticError(
            f"descended multiplication map has degree {result.degree}, expected {m*m}"
        )
    return result

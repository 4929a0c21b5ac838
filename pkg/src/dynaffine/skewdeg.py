"""Skew polynomial ring K<phi> with phi*a = a^p*phi, matrices over it, and
degree data of Dieudonne determinants.

Degrees of additive-group isogenies are p^(phi-degree of the determinant);
v_phi of the determinant is adopted as log_p of the inseparable degree.
"""

from __future__ import annotations

from .ff import FieldDesc, Poly, make_field


class SkewPoly:
    """sum a_i phi^i with coefficients in F_{p^N}, phi the p-Frobenius."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def phi(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def scalar(cls, field, c):
        """Constant operator; c is a packed field element (ints < p agree
        with their prime-subfield embedding)."""
        if not 0 <= c < field.order:
            raise ValueError(f"{c} is not a packed element of {field!r}")
        return cls(field, (c,))

    @property
    def deg_phi(self) -> int:
        return len(self.coeffs) - 1

    @property
    def v_phi(self) -> int:
        """Least index with nonzero coefficient; raises on the zero element."""
        if not self.coeffs:
            raise ValueError("v_phi of zero is infinite")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unnormalized skew polynomial")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return SkewPoly(F, out)

    def __neg__(self):
        F = self.field
        return SkewPoly(F, (F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Twisted product: (a phi^i)(b phi^j) = a b^(p^i) phi^(i+j)."""
        F = self.field
        if isinstance(other, int):
            other = SkewPoly.scalar(F, other)
        if self.is_zero() or other.is_zero():
            return SkewPoly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                out[i + j] = F.add(out[i + j], F.mul(a, F.frob(b, i)))
        return SkewPoly(F, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return SkewPoly.scalar(self.field, other) * self
        return NotImplemented

    def __pow__(self, e: int):
        r = SkewPoly.one(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def as_x_poly(self) -> Poly:
        """The additive polynomial sum a_i x^(p^i) this operator represents."""
        F = self.field
        if self.is_zero():
            return Poly.zero(F)
        cs = [0] * (F.p ** self.deg_phi + 1)
        for i, a in enumerate(self.coeffs):
            cs[F.p**i] = a
        return Poly(F, cs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        F = self.field
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = F.elem_str(c)
            if i == 0:
                parts.append(cs)
            else:
                fi = "phi" if i == 1 else f"phi^{i}"
                parts.append(fi if cs == "1" else f"{cs}*{fi}")
        return " + ".join(parts)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return f * g


def skew_left_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """q, r with f = q*g + r and deg_phi(r) < deg_phi(g)."""
    if g.is_zero():
        raise ZeroDivisionError("skew division by zero")
    F = f.field
    r = f
    q = SkewPoly.zero(F)
    dg = g.deg_phi
    glead = g.coeffs[-1]
    while not r.is_zero() and r.deg_phi >= dg:
        k = r.deg_phi - dg
        # want c with c * glead^(p^k) = r.lead
        c = F.mul(r.coeffs[-1], F.inv(F.frob(glead, k)))
        mono = SkewPoly(F, (0,) * k + (c,))
        q = q + mono
        r = r - mono * g
    return q, r


class SkewMatrix:
    """Square matrix over K<phi>."""

    def __init__(self, field: FieldDesc, entries):
        self.field = field
        self.entries = [list(row) for row in entries]
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, field, n):
        z = SkewPoly.zero(field)
        o = SkewPoly.one(field)
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __mul__(self, other: "SkewMatrix") -> "SkewMatrix":
        n = self.n
        z = SkewPoly.zero(self.field)
        out = [[z for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = z
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                out[i][j] = acc
        return SkewMatrix(self.field, out)

    def __sub__(self, other: "SkewMatrix") -> "SkewMatrix":
        return SkewMatrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __pow__(self, e: int) -> "SkewMatrix":
        r = SkewMatrix.identity(self.field, self.n)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def scalar_multiple_of_identity(self, c) -> "SkewMatrix":
        z = SkewPoly.zero(self.field)
        s = SkewPoly.scalar(self.field, c)
        return SkewMatrix(
            self.field,
            [[s if i == j else z for j in range(self.n)] for i in range(self.n)],
        )

    def max_entry_degree(self) -> int:
        d = -1
        for row in self.entries:
            for e in row:
                if not e.is_zero():
                    d = max(d, e.deg_phi)
        return d


class SingularMatrixError(ValueError):
    pass


def _triangular_diagonal(M: SkewMatrix) -> list[SkewPoly]:
    """Diagonal of a triangular form reached by unimodular row operations.

    Row swaps and adding left multiples of rows leave the Dieudonne
    determinant unchanged up to units; deg_phi and v_phi both kill
    commutators and units, so they can be read off the diagonal.
    """
    n = M.n
    rows = [[e for e in row] for row in M.entries]
    diag = []
    for col in range(n):
        while True:
            pividx = -1
            pivdeg = None
            for i in range(col, n):
                e = rows[i][col]
                if not e.is_zero() and (pivdeg is None or e.deg_phi < pivdeg):
                    pividx, pivdeg = i, e.deg_phi
            if pividx < 0:
                raise SingularMatrixError("matrix is singular")
            if pividx != col:
                rows[col], rows[pividx] = rows[pividx], rows[col]
            done = True
            piv = rows[col][col]
            for i in range(col + 1, n):
                e = rows[i][col]
                if e.is_zero():
                    continue
                q, r = skew_left_divmod(e, piv)
                if not q.is_zero():
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[col])]
                if not r.is_zero():
                    done = False
            if done:
                break
        diag.append(rows[col][col])
    return diag


def ddet_degree(M: SkewMatrix) -> int:
    """phi-degree of the Dieudonne determinant."""
    return sum(e.deg_phi for e in _triangular_diagonal(M))


def ddet_v_phi(M: SkewMatrix) -> int:
    """v_phi of the Dieudonne determinant (log_p of the inseparable degree)."""
    return sum(e.v_phi for e in _triangular_diagonal(M))


def commutative_det_degree(M: SkewMatrix) -> int:
    """Degree of the commutative determinant; valid when every coefficient is
    Frobenius-fixed (lies in the prime field), where K<phi> is commutative."""
    F = M.field
    for row in M.entries:
        for e in row:
            for c in e.coeffs:
                if F.frob(c) != c:
                    raise ValueError("entries are not Frobenius-fixed")
    # cofactor expansion with Poly stand-ins for phi-polynomials
    def to_poly(e: SkewPoly) -> Poly:
        return Poly(F, e.coeffs)

    def det(rows: list[list[Poly]]) -> Poly:
        if len(rows) == 1:
            return rows[0][0]
        out = Poly.zero(F)
        for j, head in enumerate(rows[0]):
            if head.is_zero():
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = head * det(minor)
            out = out + (term if j % 2 == 0 else -term)
        return out

    d = det([[to_poly(e) for e in row] for row in M.entries])
    if d.is_zero():
        raise SingularMatrixError("matrix is singular")
    return d.degree


def degree_bound_check(M: SkewMatrix, n: int, d: int, gamma: int = 1) -> bool:
    """Entries of M have phi-degree <= d; then ddet(M^n - gamma) has
    phi-degree at most r*n*d."""
    if M.max_entry_degree() > d:
        raise ValueError("entry degree exceeds the stated bound d")
    P = M**n - M.scalar_multiple_of_identity(gamma)
    return ddet_degree(P) <= M.n * n * d


# ---------------------------------------------------------------------------
# The 2x2 coseparable example over F_3 with a natural-boundary zeta function
# ---------------------------------------------------------------------------


def coseparable_vector_matrix() -> SkewMatrix:
    """sigma = [[phi^2, phi], [phi, 0]] over F_3."""
    F3 = make_field(3)
    phi = SkewPoly.phi(F3)
    z = SkewPoly.zero(F3)
    return SkewMatrix(F3, [[phi * phi, phi], [phi, z]])


def example_5_8_deg(n: int) -> int:
    """deg(sigma^n - 1) = 3^(ddet phi-degree) for the matrix above."""
    if n < 1:
        raise ValueError("n must be >= 1")
    M = coseparable_vector_matrix()
    P = M**n - SkewMatrix.identity(M.field, 2)
    return 3 ** ddet_degree(P)

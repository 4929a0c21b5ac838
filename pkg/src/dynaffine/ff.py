"""Finite fields F_{p^N} (p odd) and exact univariate polynomial arithmetic.

Field elements are stored "packed": an element with coordinates
(c_0, ..., c_{N-1}) over the polynomial basis 1, z, ..., z^{N-1} is the
integer c_0 + c_1*p + ... + c_{N-1}*p^{N-1}.  Packed order doubles as the
canonical enumeration order, so results are reproducible bit for bit.

Polynomials are immutable coefficient tuples (little-endian, no trailing
zeros).  Over prime fields the heavy operations (multiplication, division,
gcd) run on int64 numpy arrays, with a numba-compiled Euclid kernel when
numba is importable.
"""

from __future__ import annotations

import functools

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional speedup
    njit = None
    _HAVE_NUMBA = False

DEFAULT_ENUMERATION_BOUND = 10**6

# numpy kernels pay off past this length; below it plain Python wins
_NP_THRESHOLD = 48


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# int64 kernels for prime-field polynomials
# ---------------------------------------------------------------------------


def _powmod_int(x, e, p):
    r = 1
    x %= p
    while e:
        if e & 1:
            r = r * x % p
        x = x * x % p
        e >>= 1
    return r


def _gcd_kernel(a, b, p):
    """Monic gcd of two int64 coefficient arrays, destructive on inputs.

    Per-element reduction uses a Barrett shortcut (t*magic)>>42 instead of
    an integer division; valid since p < 2^21 and coefficients stay in [0,p).
    """
    da = a.shape[0] - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    db = b.shape[0] - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    magic = ((1 << 42) // p) + 1
    while db >= 0:
        inv = _powmod_int(b[db], p - 2, p)
        while da >= db:
            f = a[da] * inv % p
            if f != 0:
                fp = p - f
                base = da - db
                for i in range(db):
                    t = a[base + i] + fp * b[i]
                    t -= ((t * magic) >> 42) * p
                    if t < 0:
                        t += p
                    a[base + i] = t
                a[da] = 0
            da -= 1
            while da >= 0 and a[da] == 0:
                da -= 1
        a, b = b, a
        da, db = db, da
    if da < 0:
        return a[:0]
    inv = _powmod_int(a[da], p - 2, p)
    for i in range(da + 1):
        a[i] = a[i] * inv % p
    return a[: da + 1]


if _HAVE_NUMBA:
    _powmod_int = njit(cache=True)(_powmod_int)
    _gcd_kernel_jit = njit(cache=True)(_gcd_kernel)
else:  # pragma: no cover
    _gcd_kernel_jit = None


def _gcd_arrays_numpy(a, b, p):
    """Vectorized fallback for the gcd kernel (same contract)."""
    da = int(a.shape[0]) - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    db = int(b.shape[0]) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    while db >= 0:
        inv = pow(int(b[db]), p - 2, p)
        bv = b[: db + 1]
        while da >= db:
            f = int(a[da]) * inv % p
            if f:
                seg = a[da - db : da + 1]
                seg -= f * bv
                seg %= p
            da -= 1
            while da >= 0 and a[da] == 0:
                da -= 1
        a, b = b, a
        da, db = db, da
    if da < 0:
        return a[:0]
    inv = pow(int(a[da]), p - 2, p)
    out = a[: da + 1] * inv % p
    return out


def _gcd_arrays(a, b, p):
    if _HAVE_NUMBA and max(a.shape[0], b.shape[0]) > 256:
        return _gcd_kernel_jit(a, b, p)
    return _gcd_arrays_numpy(a, b, p)


def _divmod_arrays(a, b, p):
    """Quotient and remainder of int64 arrays; b must be nonzero."""
    da = int(a.shape[0]) - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    db = int(b.shape[0]) - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    if da < db:
        return np.zeros(0, dtype=np.int64), a[: da + 1].copy()
    q = np.zeros(da - db + 1, dtype=np.int64)
    inv = pow(int(b[db]), p - 2, p)
    work = a[: da + 1].copy()
    bv = b[: db + 1]
    for k in range(da - db, -1, -1):
        c = int(work[k + db])
        if c:
            f = c * inv % p
            q[k] = f
            work[k : k + db + 1] = (work[k : k + db + 1] - f * bv) % p
    return q, work[:db]


def _mul_arrays(a, b, p):
    la, lb = a.shape[0], b.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.int64)
    nz_a = np.nonzero(a)[0]
    nz_b = np.nonzero(b)[0]
    # shifted adds beat convolution when one side is very sparse
    if min(len(nz_a), len(nz_b)) <= 8 and max(la, lb) > 64:
        if len(nz_b) < len(nz_a):
            a, b, nz_a, nz_b = b, a, nz_b, nz_a
            la, lb = lb, la
        out = np.zeros(la + lb - 1, dtype=np.int64)
        for i in nz_b:
            out[i : i + la] += int(b[i]) * a
        return out % p
    return np.convolve(a, b) % p


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


class FieldDesc:
    """A concrete model of F_{p^N} with a deterministic modulus.

    Do not instantiate directly; use :func:`make_field`, which validates
    input and picks the lexicographically first monic irreducible modulus.
    """

    def __init__(self, p: int, N: int, modulus: tuple[int, ...]):
        self.p = p
        self.N = N
        self.modulus = modulus  # packed prime-field coefficients, length N+1
        self.order = p**N
        if N > 1:
            # x^N == -(low part of modulus), used for reduction
            self._xn_red = tuple((-c) % p for c in modulus[:N])

    # -- element primitives (packed ints) -----------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.N):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_coords(self, digits) -> int:
        p = self.p
        val = 0
        for d in reversed(list(digits)):
            val = val * p + (d % p)
        return val

    def embed_int(self, c: int) -> int:
        return c % self.p

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.N == 1:
            return (a + b) % p
        out = 0
        mult = 1
        for _ in range(self.N):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.N == 1:
            return (-a) % p
        out = 0
        mult = 1
        for _ in range(self.N):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p = self.p
        if self.N == 1:
            return a * b % p
        if a == 0 or b == 0:
            return 0
        da = self.coords(a)
        db = self.coords(b)
        N = self.N
        prod = [0] * (2 * N - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] += ca * cb
        # reduce degrees >= N using x^N = _xn_red
        for k in range(2 * N - 2, N - 1, -1):
            c = prod[k] % p
            if c:
                red = self._xn_red
                for j in range(N):
                    prod[k - N + j] += c * red[j]
            prod[k] = 0
        return self.from_coords(c % p for c in prod[:N])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.N == 1:
            return pow(a, e, self.p)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.N == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.order - 2)

    def frob(self, a: int, k: int = 1) -> int:
        """k-fold Frobenius a -> a^(p^k)."""
        for _ in range(k % self.N if self.N > 1 else 0):
            a = self.pow(a, self.p)
        if self.N == 1:
            return a
        return a

    def frob_inv(self, a: int) -> int:
        """The unique p-th root (Frobenius is bijective)."""
        if self.N == 1:
            return a
        return self.frob(a, self.N - 1)

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def mult_order_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        k, b = 1, a
        while b != 1:
            b = self.mul(b, a)
            k += 1
            if k > self.order:
                raise RuntimeError("order scan overflow; field corrupted")
        return k

    # -- presentation --------------------------------------------------------

    def elem_str(self, a: int) -> str:
        if self.N == 1:
            return str(a)
        parts = []
        for i, c in enumerate(self.coords(a)):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                zi = "z" if i == 1 else f"z^{i}"
                parts.append(zi if c == 1 else f"{c}{zi}")
        return "+".join(reversed(parts)) if parts else "0"

    def element(self, v) -> "FieldElem":
        if isinstance(v, FieldElem):
            if v.field is not self:
                raise ValueError("element from a different field")
            return v
        return FieldElem(self, self.embed_int(v))

    def __eq__(self, other):
        return (
            isinstance(other, FieldDesc)
            and (self.p, self.N, self.modulus) == (other.p, other.N, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.N, self.modulus))

    def __repr__(self):
        if self.N == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.N}"


class FieldElem:
    """Convenience wrapper around a packed element with operator syntax."""

    __slots__ = ("field", "val")

    def __init__(self, field: FieldDesc, val: int):
        self.field = field
        self.val = val

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other.val
        if isinstance(other, int):
            return self.field.embed_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(self.val, self.field.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(v, self.field.inv(self.val)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.val))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.val, e))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == self.field.embed_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.N, self.val))

    def __bool__(self):
        return self.val != 0

    @property
    def coords(self):
        return self.field.coords(self.val)

    def __repr__(self):
        return self.field.elem_str(self.val)


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, N: int) -> FieldDesc:
    if N == 1:
        return FieldDesc(p, 1, (0, 1))
    base = _make_field_cached(p, 1)
    for k in range(p**N):
        digits = []
        kk = k
        for _ in range(N):
            kk, r = divmod(kk, p)
            digits.append(r)
        candidate = Poly(base, tuple(digits) + (1,))
        if _is_irreducible(candidate, N):
            return FieldDesc(p, N, tuple(digits) + (1,))
    raise RuntimeError(f"no irreducible polynomial of degree {N} over F_{p}")


def make_field(p: int, N: int = 1, enumeration_bound: int = DEFAULT_ENUMERATION_BOUND) -> FieldDesc:
    """Construct F_{p^N} with the lexicographically first irreducible modulus.

    Coefficient vectors (c_0, ..., c_{N-1}) of monic degree-N candidates are
    scanned in increasing order (c_0 fastest), so the choice is reproducible.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 is not supported (odd p required)")
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"extension degree N = {N} must be >= 1")
    if p**N > enumeration_bound:
        raise ValueError(
            f"field size {p}^{N} exceeds the enumeration bound {enumeration_bound}"
        )
    return _make_field_cached(p, N)


def enumerate_field(desc: FieldDesc, enumeration_bound: int = DEFAULT_ENUMERATION_BOUND):
    """Yield every packed element of the field once, in canonical order."""
    if desc.order > enumeration_bound:
        raise ValueError(
            f"field size {desc.order} exceeds the enumeration bound {enumeration_bound}"
        )
    return iter(range(desc.order))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Univariate polynomial over a FieldDesc; coefficients packed, immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        if isinstance(c, FieldElem):
            c = c.val
        else:
            c = field.embed_int(c)
        return cls(field, (c,))

    @classmethod
    def from_ints(cls, field, ints):
        """Coefficients given as plain integers in the prime subfield."""
        return cls(field, (field.embed_int(c) for c in ints))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 marking the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.N, self.coeffs))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise ValueError("mixing polynomials over different fields")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Poly":
        """Multiply by a scalar: FieldElem, or an integer read mod p."""
        F = self.field
        if isinstance(c, FieldElem):
            c = c.val
        else:
            c = F.embed_int(c)
        return self.scale_packed(c)

    def scale_packed(self, c: int) -> "Poly":
        """Multiply by a packed field element."""
        F = self.field
        if c == 0:
            return Poly.zero(F)
        if c == 1:
            return self
        return Poly(F, (F.mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        a, b = self.coeffs, other.coeffs
        if F.N == 1 and max(len(a), len(b)) >= _NP_THRESHOLD:
            arr = _mul_arrays(
                np.array(a, dtype=np.int64), np.array(b, dtype=np.int64), F.p
            )
            return Poly(F, arr.tolist())
        out = [0] * (len(a) + len(b) - 1)
        if F.N == 1:
            p = F.p
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            out[i + j] = (out[i + j] + ca * cb) % p
        else:
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            out[i + j] = F.add(out[i + j], F.mul(ca, cb))
        return Poly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        r = Poly.one(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(F), self
        if F.N == 1 and len(self.coeffs) >= _NP_THRESHOLD:
            q, r = _divmod_arrays(
                np.array(self.coeffs, dtype=np.int64),
                np.array(other.coeffs, dtype=np.int64),
                F.p,
            )
            return Poly(F, q.tolist()), Poly(F, r.tolist())
        work = list(self.coeffs)
        db = other.degree
        inv = F.inv(other.leading())
        q = [0] * (len(work) - db)
        for k in range(len(q) - 1, -1, -1):
            c = work[k + db]
            if c:
                f = F.mul(c, inv)
                q[k] = f
                for j, cb in enumerate(other.coeffs):
                    if cb:
                        work[k + j] = F.sub(work[k + j], F.mul(f, cb))
        return Poly(F, q), Poly(F, work[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return self.scale_packed(self.field.inv(lead))

    def derivative(self) -> "Poly":
        F = self.field
        if F.N == 1:
            p = F.p
            return Poly(F, (i * c % p for i, c in enumerate(self.coeffs) if i > 0))
        return Poly(
            F,
            (F.mul(F.embed_int(i), c) for i, c in enumerate(self.coeffs) if i > 0),
        )

    def evaluate(self, x: int) -> int:
        """Horner evaluation at a packed element."""
        F = self.field
        acc = 0
        if F.N == 1:
            p = F.p
            for c in reversed(self.coeffs):
                acc = (acc * x + c) % p
            return acc
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __call__(self, x: FieldElem) -> FieldElem:
        return FieldElem(self.field, self.evaluate(self.field.element(x).val))

    def compose(self, inner: "Poly") -> "Poly":
        """Substitution self(inner(x)), Horner style."""
        self._check(inner)
        F = self.field
        acc = Poly.zero(F)
        for c in reversed(self.coeffs):
            acc = acc * inner
            if c:
                acc = acc + Poly(F, (c,))
        return acc

    def frobenius_root(self) -> "Poly":
        """For P with P' = 0, the polynomial T with T(x)^p = P(x)."""
        F = self.field
        p = F.p
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p == 0:
                out.append(F.frob_inv(c))
            elif c != 0:
                raise ValueError("frobenius_root requires a polynomial in x^p")
        return Poly(F, out)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        F = self.field
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = F.elem_str(c)
            if F.N > 1 and "+" in cs:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                xi = "x" if i == 1 else f"x^{i}"
                parts.append(xi if cs == "1" else f"{cs}*{xi}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd."""
    if a.field != b.field:
        raise ValueError("mixing polynomials over different fields")
    F = a.field
    if F.N == 1 and max(len(a.coeffs), len(b.coeffs)) >= _NP_THRESHOLD:
        arr = _gcd_arrays(
            np.array(a.coeffs, dtype=np.int64),
            np.array(b.coeffs, dtype=np.int64),
            F.p,
        )
        return Poly(F, arr.tolist())
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    r = Poly.one(base.field)
    b = base % mod
    while e:
        if e & 1:
            r = (r * b) % mod
        b = (b * b) % mod
        e >>= 1
    return r


def _is_irreducible(f: Poly, N: int) -> bool:
    """Rabin's test for a monic degree-N polynomial over the prime field."""
    p = f.field.p
    x = Poly.x(f.field)
    h = x
    for _ in range(N):
        h = poly_powmod(h, p, f)
    if h != x % f:
        return False
    for q in prime_factors(N):
        h = x
        for _ in range(N // q):
            h = poly_powmod(h, p, f)
        if poly_gcd(h - x, f).degree != 0:
            return False
    return True


def poly_radical(P: Poly) -> Poly:
    """Squarefree part over the algebraic closure: same roots, multiplicity one.

    Handles the char-p degeneracy P' = 0 by replacing P = S(x^p) with the
    Frobenius-inverse of S and recursing.
    """
    if P.is_zero():
        raise ValueError("radical of the zero polynomial")
    out = Poly.one(P.field)
    F = P.monic()
    while F.degree > 0:
        D = F.derivative()
        if D.is_zero():
            F = F.frobenius_root()
            continue
        G = poly_gcd(F, D)
        if G.degree == 0:
            W = F
        else:
            W = F // G
        overlap = poly_gcd(out, W)
        if overlap.degree > 0:
            W = W // overlap
        out = out * W
        if G.degree == 0:
            break
        F = G
    return out.monic()


def distinct_root_count(P: Poly) -> int:
    """Number of distinct roots of P in the algebraic closure."""
    if P.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    return poly_radical(P).degree

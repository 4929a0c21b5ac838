"""Self-maps of P^1: catalog descriptors, iteration, a brute-force
fixed-point oracle, and functional digraphs of finite restrictions."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .ff import (
    FieldDesc,
    Poly,
    distinct_root_count,
    make_field,
    poly_gcd,
)

DEFAULT_DEGREE_BOUND = int(os.environ.get("DYNAFFINE_DEGREE_BOUND", 32768))
DEFAULT_ENUM_BOUND = int(os.environ.get("DYNAFFINE_ENUM_BOUND", 10**6))


class NonConfinedError(ValueError):
    """Some iterate is the identity, so fixed points are not finite."""


class DegreeBoundError(ValueError):
    """Requested iterate exceeds the configured degree bound."""


class RationalMap:
    """A self-map of P^1 as a coprime fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, *, assume_reduced: bool = False):
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if den.is_zero():
            raise ValueError("zero denominator")
        if num.is_zero():
            raise ValueError("the zero map is not a self-map of P^1 here")
        if not assume_reduced:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.leading()
        if lead != 1:
            inv = den.field.inv(lead)
            num, den = num.scale_packed(inv), den.scale_packed(inv)
        if max(num.degree, den.degree) < 1:
            raise ValueError("constant maps are excluded (degree must be >= 1)")
        self.num = num
        self.den = den

    @property
    def field(self) -> FieldDesc:
        return self.num.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        return (
            isinstance(other, RationalMap)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_polynomial:
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"

    # -- evaluation -----------------------------------------------------------

    def eval_proj(self, x: int | None) -> int | None:
        """Evaluate at a packed element of an extension, None meaning infinity."""
        F = self.field
        if x is None:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return None
            lead = self.num.coeffs[-1]
            if dn < dd:
                return 0
            return F.mul(lead, F.inv(self.den.coeffs[-1]))  # den monic: = lead
        nv = self.num.evaluate(x)
        dv = self.den.evaluate(x)
        if dv == 0:
            return None
        return F.mul(nv, F.inv(dv))

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """self after inner; degrees multiply exactly."""
        P, Q = self.num, self.den
        A, B = inner.num, inner.den
        d = self.degree
        # homogenize: sum_i c_i A^i B^(d-i)
        Apow = [Poly.one(A.field)]
        for _ in range(d):
            Apow.append(Apow[-1] * A)
        Bpow = [Poly.one(B.field)]
        for _ in range(d):
            Bpow.append(Bpow[-1] * B)
        num = Poly.zero(A.field)
        den = Poly.zero(A.field)
        for i in range(d + 1):
            cross = Apow[i] * Bpow[d - i]
            cn = P[i]
            if cn:
                num = num + cross.scale_packed(cn)
            cd = Q[i]
            if cd:
                den = den + cross.scale_packed(cd)
        expected = self.degree * inner.degree
        reduced = max(num.degree, den.degree) == expected
        return RationalMap(num, den, assume_reduced=reduced)


# ---------------------------------------------------------------------------
# Catalog descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerMap:
    """x -> x^m on P^1; group G_m, trivial automorphism group."""

    m: int
    p: int
    kind = "power"

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("power map needs m >= 2")
        make_field(self.p)

    @property
    def deg(self) -> int:
        return self.m

    def label(self) -> str:
        return f"power(m={self.m}, p={self.p})"


@dataclass(frozen=True)
class ChebyshevMap:
    """The normalized Chebyshev polynomial T_m mod p; G_m modulo inversion."""

    m: int
    p: int
    kind = "chebyshev"

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("Chebyshev map needs m >= 2")
        make_field(self.p)

    @property
    def deg(self) -> int:
        return self.m

    def label(self) -> str:
        return f"chebyshev(m={self.m}, p={self.p})"


@dataclass(frozen=True)
class AdditiveMap:
    """An additive polynomial sum a_i X^(p^i); coefficients indexed by phi-power."""

    p: int
    coeffs: tuple[int, ...]  # packed elements of `field`, a_0 first
    N: int = 1
    kind = "additive"

    def __post_init__(self):
        F = make_field(self.p, self.N)
        cs = tuple(self.coeffs)
        if len(cs) < 2 or cs[-1] == 0:
            raise ValueError("additive map needs a nonzero top coefficient a_r, r >= 1")
        if any(not (0 <= c < F.order) for c in cs):
            raise ValueError("coefficients must be packed field elements")
        object.__setattr__(self, "coeffs", cs)

    @property
    def field(self) -> FieldDesc:
        return make_field(self.p, self.N)

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg(self) -> int:
        return self.p**self.r

    def label(self) -> str:
        terms = ",".join(str(c) for c in self.coeffs)
        return f"additive(p={self.p}, a=[{terms}])"


@dataclass(frozen=True)
class SubadditiveMap:
    """Quotient of an additive map by mu_d; the polynomial form, if any, is caller-supplied."""

    core: AdditiveMap
    d: int
    poly_coeffs: tuple[int, ...] | None = None
    kind = "subadditive"

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("subadditive map needs d >= 2")
        F = self.core.field
        if (F.order - 1) % self.d != 0:
            raise ValueError(f"mu_{self.d} does not live in {F!r}")
        # sigma must normalize mu_d: for a generator g, all phi-levels with a
        # nonzero coefficient must twist g to one and the same g^(p^i)
        g = _mu_generator(F, self.d)
        twists = {F.pow(g, self.p**i) for i, c in enumerate(self.core.coeffs) if c}
        if len(twists) > 1:
            raise ValueError("sigma does not normalize mu_d (incompatible twists)")

    @property
    def p(self) -> int:
        return self.core.p

    @property
    def deg(self) -> int:
        return self.core.deg

    def label(self) -> str:
        return f"subadditive(d={self.d}, core={self.core.label()})"


@dataclass(frozen=True)
class LattesMap:
    """x-line descent of multiplication by m on an elliptic curve."""

    curve: object  # curve.Curve; kept loose to avoid an import cycle
    m: int
    kind = "lattes"

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("Lattes map needs m >= 2")

    @property
    def p(self) -> int:
        return self.curve.base.p

    @property
    def deg(self) -> int:
        return self.m**2

    def label(self) -> str:
        c = self.curve
        return (
            f"lattes(m={self.m}, p={self.p}, "
            f"curve=[{c.a2.val},{c.a4.val},{c.a6.val}])"
        )


MapDescriptor = PowerMap | ChebyshevMap | AdditiveMap | SubadditiveMap | LattesMap


def _mu_generator(F: FieldDesc, d: int) -> int:
    """A generator of mu_d inside F (requires d | q-1)."""
    q = F.order
    for cand in range(2, q):
        g = F.pow(cand, (q - 1) // d)
        if F.mult_order_of(g) == d:
            return g
    raise RuntimeError("no mu_d generator found; field corrupted")


def chebyshev_poly(F: FieldDesc, m: int) -> Poly:
    """Normalized Chebyshev T_m with T_m(x + 1/x) = x^m + x^-m, reduced mod p."""
    x = Poly.x(F)
    t0, t1 = Poly.constant(F, 2), x
    for _ in range(m - 1):
        t0, t1 = t1, x * t1 - t0
    return t1 if m >= 1 else t0


def build_map(d: MapDescriptor) -> RationalMap:
    if isinstance(d, PowerMap):
        F = make_field(d.p)
        return RationalMap(Poly(F, (0,) * d.m + (1,)), Poly.one(F))
    if isinstance(d, ChebyshevMap):
        F = make_field(d.p)
        return RationalMap(chebyshev_poly(F, d.m), Poly.one(F))
    if isinstance(d, AdditiveMap):
        F = d.field
        cs = [0] * (d.p ** d.r + 1)
        for i, a in enumerate(d.coeffs):
            cs[d.p**i] = a
        return RationalMap(Poly(F, cs), Poly.one(F))
    if isinstance(d, SubadditiveMap):
        if d.poly_coeffs is None:
            raise ValueError(
                "subadditive maps need an explicit caller-supplied polynomial form"
            )
        F = d.core.field
        return RationalMap(Poly(F, d.poly_coeffs), Poly.one(F))
    if isinstance(d, LattesMap):
        from .curve import mult_x_map

        return mult_x_map(d.curve, d.m)
    raise TypeError(f"not a map descriptor: {d!r}")


def iterate(f: RationalMap, n: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> RationalMap:
    """n-th iterate with gcd reduction at every step."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if f.degree**n > degree_bound:
        raise DegreeBoundError(
            f"deg(f)^n = {f.degree}^{n} exceeds the degree bound {degree_bound}"
        )
    result = f
    for _ in range(n - 1):
        result = f.compose(result)
    return result


def fixed_point_polynomial(fn: RationalMap) -> Poly:
    """P_n - x*Q_n, whose distinct roots are the affine fixed points."""
    return fn.num - Poly.x(fn.field) * fn.den


def brute_fixed_points(
    f: RationalMap, n: int, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> int:
    """Distinct fixed points of f^n in P^1 over the algebraic closure.

    Entirely independent of the kernel-size formulas: iterate, then count
    distinct roots of the fixed-point polynomial, and add infinity when the
    degree comparison fixes it.
    """
    fn = iterate(f, n, degree_bound)
    F = fixed_point_polynomial(fn)
    if F.is_zero():
        raise NonConfinedError(f"f^{n} is the identity; the map is not confined")
    count = distinct_root_count(F)
    if fn.num.degree > fn.den.degree:
        count += 1
    return count


# ---------------------------------------------------------------------------
# Functional digraphs
# ---------------------------------------------------------------------------


@dataclass
class CycleCensus:
    counts: dict[int, int]  # cycle length -> number of cycles of that length
    periodic: int
    total: int

    @property
    def density(self) -> Fraction:
        return Fraction(self.periodic, self.total)

    def fixed_points_of_iterate(self, n: int) -> int:
        """Sum of l * P_l over l | n: periodic points fixed by the n-th iterate."""
        return sum(l * c for l, c in self.counts.items() if n % l == 0)

    def to_csv(self) -> str:
        lines = ["length,count"]
        for l in sorted(self.counts):
            lines.append(f"{l},{self.counts[l]}")
        return "\n".join(lines) + "\n"


class Digraph:
    """Functional graph of a map restricted to P^1(F_q).

    Vertices are packed field elements 0..q-1 plus index q for infinity;
    succ[v] is the unique out-neighbour.
    """

    def __init__(self, field: FieldDesc, succ: np.ndarray):
        self.field = field
        self.succ = succ
        self._census: CycleCensus | None = None
        self._tree_sizes: dict[int, int] | None = None

    @property
    def size(self) -> int:
        return len(self.succ)

    def vertex_label(self, v: int) -> str:
        if v == self.field.order:
            return "inf"
        return self.field.elem_str(v)

    def cycle_census(self) -> CycleCensus:
        if self._census is None:
            succ = self.succ
            n = len(succ)
            state = np.zeros(n, dtype=np.int8)  # 0 new, 1 on path, 2 done
            periodic = np.zeros(n, dtype=bool)
            counts: dict[int, int] = {}
            pos: dict[int, int] = {}
            for start in range(n):
                if state[start]:
                    continue
                path = []
                v = start
                while state[v] == 0:
                    state[v] = 1
                    pos[v] = len(path)
                    path.append(v)
                    v = int(succ[v])
                if state[v] == 1:
                    # new cycle discovered inside the current path
                    first = pos[v]
                    length = len(path) - first
                    counts[length] = counts.get(length, 0) + 1
                    for u in path[first:]:
                        periodic[u] = True
                for u in path:
                    state[u] = 2
                    del pos[u]
            self._census = CycleCensus(
                counts=counts, periodic=int(periodic.sum()), total=n
            )
            self._periodic_mask = periodic
        return self._census

    def tree_sizes(self) -> dict[int, int]:
        """For each periodic vertex, the number of non-periodic vertices whose
        path first meets the cycles at that vertex."""
        if self._tree_sizes is None:
            self.cycle_census()
            succ = self.succ
            periodic = self._periodic_mask
            entry = np.full(len(succ), -1, dtype=np.int64)
            for v in np.nonzero(periodic)[0]:
                entry[v] = v
            for start in range(len(succ)):
                if entry[start] >= 0:
                    continue
                chain = []
                v = start
                while entry[v] < 0:
                    chain.append(v)
                    v = int(succ[v])
                e = entry[v]
                for u in chain:
                    entry[u] = e
            sizes: dict[int, int] = {}
            for v in np.nonzero(periodic)[0]:
                sizes[int(v)] = int(np.count_nonzero(entry == v)) - 1
            self._tree_sizes = sizes
        return self._tree_sizes

    def iterate_successors(self, n: int) -> np.ndarray:
        """Successor table of the n-th iterate (by n-fold composition)."""
        out = np.arange(self.size, dtype=np.int64)
        for _ in range(n):
            out = self.succ[out]
        return out

    def dot_export(self) -> str:
        lines = ["digraph dynamics {"]
        for v in range(self.size):
            lines.append(
                f'  "{self.vertex_label(v)}" -> "{self.vertex_label(int(self.succ[v]))}";'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def restrict_digraph(
    f: RationalMap, ext: FieldDesc, enumeration_bound: int = DEFAULT_ENUM_BOUND
) -> Digraph:
    """The functional graph of f on P^1(F_q) for the given extension field."""
    if ext.order + 1 > enumeration_bound:
        raise ValueError(
            f"P^1(F_{ext.order}) exceeds the enumeration bound {enumeration_bound}"
        )
    Fm = f.field
    if Fm.p != ext.p:
        raise ValueError("map and field have different characteristics")
    if Fm.N != 1 and Fm != ext:
        raise ValueError(
            "map must be defined over the prime field or over the target field itself"
        )
    q = ext.order
    inf_idx = q
    succ = np.empty(q + 1, dtype=np.int64)
    if ext.N == 1 and Fm.N == 1:
        xs = np.arange(q, dtype=np.int64)
        nv = _polyval_mod(f.num.coeffs, xs, ext.p)
        dv = _polyval_mod(f.den.coeffs, xs, ext.p)
        inv = _inverse_table(ext.p)
        good = dv != 0
        succ[:q] = np.where(good, nv * inv[dv] % ext.p, inf_idx)
    else:
        # coefficients of a prime-field map embed as packed constants unchanged
        num = Poly(ext, f.num.coeffs) if Fm.N == 1 else f.num
        den = Poly(ext, f.den.coeffs) if Fm.N == 1 else f.den
        fe = RationalMap(num, den, assume_reduced=True)
        for x in range(q):
            val = fe.eval_proj(x)
            succ[x] = inf_idx if val is None else val
    val = f.eval_proj(None)
    if val is None:
        succ[inf_idx] = inf_idx
    else:
        succ[inf_idx] = val  # prime-subfield value embeds verbatim
    return Digraph(ext, succ)


def cycle_census(g: Digraph) -> CycleCensus:
    return g.cycle_census()


def dot_export(g: Digraph) -> str:
    return g.dot_export()


def _polyval_mod(coeffs, xs, p):
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = (acc * xs + int(c)) % p
    return acc


def _inverse_table(p):
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv

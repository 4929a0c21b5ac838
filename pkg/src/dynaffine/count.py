"""Closed-form fixed-point counts: boundary term plus an averaged sum of
kernel sizes of sigma^n - gamma, with kernel size = degree / inseparable
degree.  Exact integers throughout; non-integrality anywhere is a hard error
because it would falsify either a kernel size or the averaging identity."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    FiltrationReport,
    mult_order,
    p_abs,
    prime_to_p_part,
    skew_filtration,
    sm_filtration,
    v_p,
)
from .dynmap import (
    AdditiveMap,
    ChebyshevMap,
    LattesMap,
    MapDescriptor,
    PowerMap,
    SubadditiveMap,
)
from .series import GeometricPiece
from .skewdeg import SkewPoly


class CountIntegrityError(ArithmeticError):
    """A kernel size or the gamma-average failed to be an integer."""


def kernel_size_gm(k: int, p: int) -> int:
    """Solutions of x^k = 1 in the algebraic closure: the prime-to-p part of |k|."""
    if k == 0:
        raise ValueError("k must be nonzero")
    return prime_to_p_part(k, p)


def kernel_size_elliptic(k: int, p: int, c: int) -> int:
    """#ker[k] on an elliptic curve with inseparable exponent c: k^2 * |k|_p^c."""
    if k == 0:
        raise ValueError("k must be nonzero")
    if c not in (1, 2):
        raise ValueError("c must be 1 (ordinary) or 2 (supersingular)")
    denom = p ** (c * v_p(k, p))
    num = k * k
    if num % denom:
        raise CountIntegrityError(f"k^2 not divisible by p^(c*v_p(k)) for k={k}")
    return num // denom


def kernel_size_additive(tau: SkewPoly) -> int:
    """#ker of a nonzero additive operator: p^(deg_phi - v_phi)."""
    if tau.is_zero():
        raise ValueError("zero operator")
    return tau.field.p ** (tau.deg_phi - tau.v_phi)


@dataclass
class GammaTerm:
    gamma: str
    deg: int
    v: int
    kernel: int


@dataclass
class KernelReport:
    n: int
    descriptor: str
    boundary: int
    terms: list[GammaTerm]
    total: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "descriptor": self.descriptor,
                "boundary": self.boundary,
                "terms": [
                    {"gamma": t.gamma, "deg": t.deg, "v": t.v, "kernel": t.kernel}
                    for t in self.terms
                ],
                "total": self.total,
            }
        )


@functools.lru_cache(maxsize=None)
def lattes_inseparable_exponent(d: LattesMap) -> int:
    from .curve import inseparable_exponent

    return inseparable_exponent(d.curve)


def _sigma_skew(d: AdditiveMap | SubadditiveMap) -> SkewPoly:
    core = d.core if isinstance(d, SubadditiveMap) else d
    return SkewPoly(core.field, core.coeffs)


def _mu_d_elements(d: SubadditiveMap) -> list[int]:
    from .dynmap import _mu_generator

    F = d.core.field
    g = _mu_generator(F, d.d)
    out = [1]
    for _ in range(d.d - 1):
        out.append(F.mul(out[-1], g))
    return out


def _average(terms: list[GammaTerm], size: int) -> int:
    s = sum(t.kernel for t in terms)
    if s % size:
        raise CountIntegrityError(
            f"kernel-size sum {s} not divisible by |Gamma| = {size}"
        )
    return s // size


def fixed_point_formula(d: MapDescriptor, n: int, sigma_pow: SkewPoly | None = None) -> KernelReport:
    """f_n = (f|_C)_n + |Gamma|^-1 * sum over gamma of #ker(sigma^n - gamma).

    Boundary sets are Power {0, inf}, Chebyshev/Additive/Subadditive {inf},
    Lattes empty; all boundary points are fixed, so the boundary term is |C|.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = d.p
    if isinstance(d, PowerMap):
        k = d.m**n - 1
        if k == 0:
            raise ValueError("not confined")
        term = GammaTerm("1", abs(k), v_p(k, p), kernel_size_gm(k, p))
        total = 2 + _average([term], 1)
        return KernelReport(n, d.label(), 2, [term], total)
    if isinstance(d, ChebyshevMap):
        terms = []
        for gamma, sign in (("1", 1), ("-1", -1)):
            k = d.m**n - sign
            terms.append(GammaTerm(gamma, abs(k), v_p(k, p), kernel_size_gm(k, p)))
        total = 1 + _average(terms, 2)
        return KernelReport(n, d.label(), 1, terms, total)
    if isinstance(d, LattesMap):
        c = lattes_inseparable_exponent(d)
        terms = []
        for gamma, sign in (("1", 1), ("-1", -1)):
            k = d.m**n - sign
            terms.append(
                GammaTerm(gamma, k * k, c * v_p(k, p), kernel_size_elliptic(k, p, c))
            )
        total = _average(terms, 2)
        return KernelReport(n, d.label(), 0, terms, total)
    if isinstance(d, AdditiveMap):
        sig_n = sigma_pow if sigma_pow is not None else _sigma_skew(d) ** n
        tau = sig_n - SkewPoly.one(sig_n.field)
        if tau.is_zero():
            raise ValueError("not confined")
        term = GammaTerm(
            "1", p**tau.deg_phi, tau.v_phi, kernel_size_additive(tau)
        )
        total = 1 + _average([term], 1)
        return KernelReport(n, d.label(), 1, [term], total)
    if isinstance(d, SubadditiveMap):
        F = d.core.field
        sig_n = sigma_pow if sigma_pow is not None else _sigma_skew(d) ** n
        terms = []
        for g in _mu_d_elements(d):
            tau = sig_n - SkewPoly.scalar(F, g)
            if tau.is_zero():
                raise ValueError("not confined")
            terms.append(
                GammaTerm(
                    F.elem_str(g),
                    p**tau.deg_phi,
                    tau.v_phi,
                    kernel_size_additive(tau),
                )
            )
        total = 1 + _average(terms, d.d)
        return KernelReport(n, d.label(), 1, terms, total)
    raise TypeError(f"not a map descriptor: {d!r}")


def formula_counts(d: MapDescriptor, n_max: int) -> list[int]:
    """f_1..f_{n_max} via the kernel formula (no brute force anywhere)."""
    out = []
    if isinstance(d, (AdditiveMap, SubadditiveMap)):
        sig = _sigma_skew(d)
        acc = sig
        for n in range(1, n_max + 1):
            out.append(fixed_point_formula(d, n, sigma_pow=acc).total)
            if n < n_max:
                acc = acc * sig
    else:
        for n in range(1, n_max + 1):
            out.append(fixed_point_formula(d, n).total)
    return out


def descriptor_iterate(d: MapDescriptor, k: int) -> MapDescriptor:
    """A descriptor for the k-th iterate of d (same catalog row).

    Power, Chebyshev and Lattes maps iterate inside their families with
    multiplier m^k; additive operators iterate in the skew ring."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(d, PowerMap):
        return PowerMap(d.m**k, d.p)
    if isinstance(d, ChebyshevMap):
        return ChebyshevMap(d.m**k, d.p)
    if isinstance(d, LattesMap):
        return LattesMap(d.curve, d.m**k)
    if isinstance(d, AdditiveMap):
        sig = _sigma_skew(d) ** k
        return AdditiveMap(d.p, sig.coeffs, N=d.N)
    if isinstance(d, SubadditiveMap):
        core = _sigma_skew(d) ** k
        return SubadditiveMap(AdditiveMap(d.p, core.coeffs, N=d.core.N), d.d, None)
    raise TypeError(f"not a map descriptor: {d!r}")


def is_coseparable(d: MapDescriptor) -> bool:
    """sigma^n - 1 separable for all n: p | m for the multiplicative and
    elliptic rows, vanishing linear coefficient for the additive rows."""
    if isinstance(d, (PowerMap, ChebyshevMap, LattesMap)):
        return d.m % d.p == 0
    if isinstance(d, AdditiveMap):
        return d.coeffs[0] == 0
    if isinstance(d, SubadditiveMap):
        return d.core.coeffs[0] == 0
    raise TypeError(f"not a map descriptor: {d!r}")


def descriptor_degree(d: MapDescriptor) -> int:
    return d.deg


@dataclass
class GrowthReport:
    bound: int  # c = deg + 1
    n_checked: int
    bound_holds: bool
    degree_witness_n: int | None  # some n <= 10 with f_n^(1/n) within 5% of deg

    def ok(self) -> bool:
        return self.bound_holds and self.degree_witness_n is not None


def growth_bound(d: MapDescriptor, n_max: int = 20, witness_limit: int = 10) -> GrowthReport:
    """c = deg(f) + 1 with f_n <= c^n checked on all computed n; the growth
    rate f_n^(1/n) must come within 5 percent of deg(f) at some n up to
    witness_limit (the comparison is exact: (19d/20)^n <= f_n <= (21d/20)^n)."""
    deg = d.deg
    c = deg + 1
    counts = formula_counts(d, max(n_max, witness_limit))
    bound_holds = all(counts[n - 1] <= c**n for n in range(1, n_max + 1))
    witness = None
    lo, hi = Fraction(19 * deg, 20), Fraction(21 * deg, 20)
    for n in range(1, witness_limit + 1):
        f = counts[n - 1]
        if lo**n <= f <= hi**n:
            witness = n
            break
    return GrowthReport(
        bound=c, n_checked=n_max, bound_holds=bound_holds, degree_witness_n=witness
    )


# ---------------------------------------------------------------------------
# Filtration dispatch and the piecewise-geometric tame log-derivative
# ---------------------------------------------------------------------------


def descriptor_filtration(d: MapDescriptor, depth: int = 3) -> FiltrationReport:
    if isinstance(d, PowerMap):
        return sm_filtration(d.m, "trivial", d.p, depth=depth)
    if isinstance(d, ChebyshevMap):
        return sm_filtration(d.m, "pm1", d.p, depth=depth)
    if isinstance(d, LattesMap):
        return sm_filtration(
            d.m, "pm1", d.p, depth=depth, c=lattes_inseparable_exponent(d)
        )
    if isinstance(d, AdditiveMap):
        return skew_filtration(_sigma_skew(d), depth=depth)
    raise TypeError(f"no filtration for {d!r}")


def _crt_residue(r: int, L: int, p: int) -> int:
    """The residue in 1..L*p congruent to r mod L and 0 mod p (gcd(L, p) = 1)."""
    for cand in range(p, L * p + 1, p):
        if cand % L == r % L:
            return cand
    raise ArithmeticError("CRT failure; L and p not coprime?")


def tame_pieces(d: MapDescriptor) -> list[GeometricPiece]:
    """Exact piecewise-geometric decomposition of sum over p-coprime n of
    f_n z^n, read off the kernel formula for each catalog row."""
    p = d.p
    one = Fraction(1)

    def restricted(coeff, lam, L, r):
        """coeff * (terms with n = r mod L) minus the p-divisible subset."""
        return [
            GeometricPiece(coeff, lam, L, r),
            GeometricPiece(-coeff, lam, L * p, _crt_residue(r, L, p)),
        ]

    if isinstance(d, SubadditiveMap):
        raise ValueError("no closed tame form implemented for subadditive maps")

    if isinstance(d, (PowerMap, ChebyshevMap, LattesMap)):
        m = d.m
        lam_main = m * m if isinstance(d, LattesMap) else m
        pieces = []
        pieces += restricted(one, 1, 1, 1)
        pieces += restricted(one, lam_main, 1, 1)
        if is_coseparable(d):
            return pieces
        s = mult_order(m, p)
        c = lattes_inseparable_exponent(d) if isinstance(d, LattesMap) else 1
        M = p_abs(m**s - 1, p) ** c
        if isinstance(d, PowerMap):
            corr = M - 1
            pieces += restricted(corr, m, s, s)
            pieces += restricted(-corr, 1, s, s)
            return pieces
        if isinstance(d, ChebyshevMap):
            corr = (M - 1) / 2
            pieces += restricted(corr, m, s, s)
            pieces += restricted(-corr, 1, s, s)
            if s % 2 == 0:
                t2 = s // 2
                pieces += restricted(corr, m, s, t2)
                pieces += restricted(corr, 1, s, t2)
            return pieces
        # Lattes: squares expand to lambda in {m^2, m, 1}
        corr = (M - 1) / 2
        pieces += restricted(corr, m * m, s, s)
        pieces += restricted(-2 * corr, m, s, s)
        pieces += restricted(corr, 1, s, s)
        if s % 2 == 0:
            t2 = s // 2
            pieces += restricted(corr, m * m, s, t2)
            pieces += restricted(2 * corr, m, s, t2)
            pieces += restricted(corr, 1, s, t2)
        return pieces

    if isinstance(d, AdditiveMap):
        P = d.deg  # p^r
        pieces = []
        pieces += restricted(one, 1, 1, 1)
        pieces += restricted(one, P, 1, 1)
        if is_coseparable(d):
            return pieces
        rep = skew_filtration(_sigma_skew(d), depth=1)
        s_hat = rep.s_table[1][0]
        t_hat = rep.C
        corr = Fraction(1, p**t_hat) - 1
        pieces += restricted(corr, P, s_hat, s_hat)
        return pieces

    raise TypeError(f"not a map descriptor: {d!r}")

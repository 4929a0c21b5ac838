"""Closed-form tame zeta functions as finite products of point-zeta atoms.

The atom is the tame zeta function of a one-point system evaluated at a*z^b:
(1 - (a z^b)^p)^(1/p) / (1 - a z^b).  Every catalog map's tame zeta function
is such a product with exponents in Z[1/p] scaled by 1/s, and expanding the
product must reproduce the count-built series coefficient for coefficient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import mult_order, p_abs, skew_filtration
from .dynmap import (
    AdditiveMap,
    ChebyshevMap,
    LattesMap,
    MapDescriptor,
    PowerMap,
)
from .series import TruncSeries, pow_series
from .skewdeg import SkewPoly


@dataclass(frozen=True)
class Atom:
    a: int  # scale (positive integer)
    b: int  # power of z
    exponent: Fraction

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("atom needs a >= 1 and b >= 1")


@dataclass
class AtomProduct:
    p: int
    factors: list[Atom]

    def to_json(self) -> str:
        return json.dumps(
            [
                [f.a, f.b, f"{f.exponent.numerator}/{f.exponent.denominator}"]
                for f in self.factors
            ]
        )

    def pretty(self) -> str:
        parts = []
        for f in self.factors:
            arg = "z" if (f.a == 1 and f.b == 1) else (
                f"{f.a}z" if f.b == 1 else (f"z^{f.b}" if f.a == 1 else f"{f.a}z^{f.b}")
            )
            base = f"zeta*_pt({arg})"
            if f.exponent == 1:
                parts.append(base)
            else:
                parts.append(f"{base}^({f.exponent})")
        return " * ".join(parts) if parts else "1"


def zeta_pt_atom(a: int, b: int, p: int, T: int) -> TruncSeries:
    """Exact expansion of (1 - (a z^b)^p)^(1/p) / (1 - a z^b) to order T."""
    if a < 1 or b < 1:
        raise ValueError("degenerate atom (a >= 1, b >= 1 required)")
    if T < 1:
        raise ValueError("order must be >= 1")
    top = [Fraction(0)] * (T + 1)
    top[0] = Fraction(1)
    if b * p <= T:
        top[b * p] = -Fraction(a) ** p
    root = pow_series(TruncSeries(top, T), Fraction(1, p))
    bot = [Fraction(0)] * (T + 1)
    bot[0] = Fraction(1)
    if b <= T:
        bot[b] = Fraction(-a)
    return root * TruncSeries(bot, T).inverse()


def expand(ap: AtomProduct, T: int) -> TruncSeries:
    """Exact product of atom expansions with rational-power exponents."""
    out = TruncSeries.one(T)
    for f in ap.factors:
        atom = zeta_pt_atom(f.a, f.b, ap.p, T)
        out = out * pow_series(atom, f.exponent)
    return out


def power_map_closed_form(m: int, p: int) -> AtomProduct:
    """zeta*_pt(mz) zeta*_pt(z) (zeta*_pt((mz)^s)/zeta*_pt(z^s))^beta with
    beta = (|m^s - 1|_p - 1)/s; if p | m the correction is absent."""
    if m < 2:
        raise ValueError("m must be >= 2")
    factors = [Atom(m, 1, Fraction(1)), Atom(1, 1, Fraction(1))]
    if m % p != 0:
        s = mult_order(m, p)
        beta = (p_abs(m**s - 1, p) - 1) / s
        factors.append(Atom(m**s, s, beta))
        factors.append(Atom(1, s, -beta))
    return AtomProduct(p, factors)


def chebyshev_closed_form(m: int, p: int) -> AtomProduct:
    """Prefactor zeta*_pt(mz) zeta*_pt(z) times the quotient column for the
    inversion quotient of the multiplicative group; h = 1."""
    if m < 2:
        raise ValueError("m must be >= 2")
    factors = [Atom(m, 1, Fraction(1)), Atom(1, 1, Fraction(1))]
    if m % p != 0:
        s = mult_order(m, p)
        beta = (p_abs(m**s - 1, p) - 1) / s
        if s % 2 == 1:
            factors.append(Atom(m**s, s, beta / 2))
            factors.append(Atom(1, s, -beta / 2))
        else:
            t = s // 2
            factors.append(Atom(m**t, t, beta))
            factors.append(Atom(1, t, beta))
            factors.append(Atom(1, 2 * t, -beta))
    return AtomProduct(p, factors)


def lattes_closed_form(m: int, p: int, c: int) -> AtomProduct:
    """Prefactor zeta*_pt(m^2 z) zeta*_pt(z) times the Lattes quotient column;
    h = c is the inseparable exponent of the underlying curve."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if c not in (1, 2):
        raise ValueError("c must be 1 or 2")
    factors = [Atom(m * m, 1, Fraction(1)), Atom(1, 1, Fraction(1))]
    if m % p != 0:
        s = mult_order(m, p)
        beta = (p_abs(m**s - 1, p) ** c - 1) / s
        if s % 2 == 1:
            factors.append(Atom(m ** (2 * s), s, beta / 2))
            factors.append(Atom(1, s, beta / 2))
            factors.append(Atom(m**s, s, -beta))
        else:
            t = s // 2
            factors.append(Atom(m ** (2 * t), t, beta))
            factors.append(Atom(1, t, beta))
            factors.append(Atom(m**t, t, 2 * beta))
            factors.append(Atom(m ** (2 * t), 2 * t, -2 * beta))
    return AtomProduct(p, factors)


def lattes_closed_form_for(d: LattesMap) -> AtomProduct:
    from .count import lattes_inseparable_exponent

    return lattes_closed_form(d.m, d.p, lattes_inseparable_exponent(d))


def additive_closed_form(d: AdditiveMap) -> AtomProduct:
    """zeta*_pt(mz) zeta*_pt(z) zeta*_pt((mz)^s)^beta with s the least iterate
    with sigma^s = 1 + a phi^t + ..., and beta = (p^-t - 1)/s; the correction
    is absent in the coseparable case a_0 = 0."""
    p = d.p
    m = d.deg
    factors = [Atom(m, 1, Fraction(1)), Atom(1, 1, Fraction(1))]
    if d.coeffs[0] != 0:
        rep = skew_filtration(SkewPoly(d.field, d.coeffs), depth=1)
        s_hat = rep.s_table[1][0]
        t_hat = rep.C
        beta = (Fraction(1, p**t_hat) - 1) / s_hat
        factors.append(Atom(m**s_hat, s_hat, beta))
    return AtomProduct(p, factors)


def closed_form(d: MapDescriptor) -> AtomProduct:
    if isinstance(d, PowerMap):
        return power_map_closed_form(d.m, d.p)
    if isinstance(d, ChebyshevMap):
        return chebyshev_closed_form(d.m, d.p)
    if isinstance(d, LattesMap):
        return lattes_closed_form_for(d)
    if isinstance(d, AdditiveMap):
        return additive_closed_form(d)
    raise TypeError(f"no closed tame form for {d!r}")

"""Numeric evaluation of the natural-boundary witness series

    G_h(z) = sum |n|_p^h z^n,       H_beta(z) = sum beta^(|n|_p^(-1)) z^n

through their functional equations

    G_h(z)    = z/(1-z) - z^p/(1-z^p) + p^(-h) G_h(z^p)
    H_beta(z) = beta (z/(1-z) - z^p/(1-z^p)) + H_(beta^p)(z^p).

This is the single module allowed floating point; everything it produces is
numeric evidence for radial blow-down, never a certificate.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .arith import v_p

MAX_TAIL_TERMS = 2_000_000


@dataclass(frozen=True)
class BoundaryFunc:
    kind: str  # "G" or "H"
    param: float  # h > 0 for G, 0 < beta < 1 for H
    p: int
    depth: int = 8
    tol: float = 1e-10

    def __post_init__(self):
        if self.kind not in ("G", "H"):
            raise ValueError("kind must be 'G' or 'H'")
        if self.kind == "G" and not self.param > 0:
            raise ValueError("G_h needs h > 0")
        if self.kind == "H" and not 0 < self.param < 1:
            raise ValueError("H_beta needs 0 < beta < 1")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")

    def coefficient(self, n: int, exact_param=None) -> Fraction:
        """Exact Taylor coefficient of z^n.  For G the exponent h must be an
        integer; for H pass the exact rational beta when the float is inexact."""
        if n < 1:
            return Fraction(0)
        if self.kind == "G":
            h = Fraction(exact_param if exact_param is not None else self.param)
            if h.denominator != 1:
                raise ValueError("exact coefficients need an integer h")
            return Fraction(1, self.p ** (v_p(n, self.p) * int(h)))
        beta = Fraction(exact_param if exact_param is not None else self.param)
        return beta ** (self.p ** v_p(n, self.p))


def _block(w: complex, p: int) -> complex:
    return w / (1 - w) - w**p / (1 - w**p)


def eval_boundary(f: BoundaryFunc, z: complex) -> complex:
    """Functional-equation recursion for `depth` levels, then direct partial
    summation of the tail to absolute error below f.tol."""
    if abs(z) > 0.9999:
        raise ValueError("|z| must be at most 0.9999")
    p = f.p
    total = 0.0 + 0.0j
    w = complex(z)
    scale = 1.0
    beta = f.param
    for _ in range(f.depth):
        if f.kind == "G":
            total += scale * _block(w, p)
            scale *= p ** (-f.param)
        else:
            total += beta * _block(w, p)
            beta = beta**p
        w = w**p
    # tail: sum coefficients directly at the shrunken argument
    r = abs(w)
    if r >= 1.0:
        raise ValueError("depth too small for this |z|")
    # both families have coefficients bounded by 1 in modulus
    tail = 0.0 + 0.0j
    term_bound_scale = scale if f.kind == "G" else 1.0
    n = 1
    wn = w
    while True:
        geo = abs(wn) / max(1e-300, 1.0 - r)
        if term_bound_scale * geo < f.tol:
            break
        if n > MAX_TAIL_TERMS:
            raise ValueError("tail does not meet the error bound; reduce |z| or raise depth")
        if f.kind == "G":
            coeff = p ** (-f.param * v_p(n, p))
        else:
            coeff = beta ** (p ** v_p(n, p)) if beta > 0.0 else 0.0
        tail += coeff * wn
        wn *= w
        n += 1
    if f.kind == "G":
        total += scale * tail
    else:
        total += tail
    return total


def radial_scan(f: BoundaryFunc, k: int, lambdas) -> list[complex]:
    """Values along lambda * omega for omega a primitive p^k-th root of unity."""
    lambdas = list(lambdas)
    if any(l2 <= l1 for l1, l2 in zip(lambdas, lambdas[1:])):
        raise ValueError("lambdas must be strictly ascending")
    omega = cmath.exp(2j * cmath.pi / f.p**k)
    return [eval_boundary(f, lam * omega) for lam in lambdas]


def scan_csv(f: BoundaryFunc, k: int, lambdas) -> str:
    values = radial_scan(f, k, lambdas)
    lines = ["lambda,re,im"]
    for lam, v in zip(lambdas, values):
        lines.append(f"{lam},{v.real!r},{v.imag!r}")
    return "\n".join(lines) + "\n"

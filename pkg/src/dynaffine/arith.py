"""p-adic valuations, multiplicative orders, lifting the exponent, the
s_m filtration controlling p-adic deviation of inseparable degrees, and
checkers for the dominant-root hypothesis (including the Salem torus
counterexample)."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import mpmath

from .ff import is_prime
from .skewdeg import SkewPoly


def v_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_abs(n: int, p: int) -> Fraction:
    """|n|_p = p^(-v_p(n)) as an exact rational; |0|_p = 0."""
    if n == 0:
        return Fraction(0)
    return Fraction(1, p ** v_p(n, p))


def prime_to_p_part(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("0 has no prime-to-p part")
    n = abs(n)
    while n % p == 0:
        n //= p
    return n


def mult_order(m: int, p: int) -> int:
    """Order of m in F_p^x."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m % p == 0:
        raise ValueError(f"p = {p} divides m = {m}")
    s = 1
    acc = m % p
    while acc != 1:
        acc = acc * m % p
        s += 1
    return s


def v_power_diff(x: int, y: int, n: int, p: int) -> int:
    """Lifting the exponent: v_p(x^n - y^n) = v_p(x - y) + v_p(n).

    Valid for odd p with p | x - y, p not dividing x, x != y.  The value is
    computed from the right-hand side and asserted against a direct
    computation, so a wrong application fails loudly.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if x == y:
        raise ValueError("x = y is degenerate")
    if x % p == 0:
        raise ValueError("p must not divide x")
    if (x - y) % p != 0:
        raise ValueError("p must divide x - y")
    if n < 1:
        raise ValueError("n must be positive")
    predicted = v_p(x - y, p) + v_p(n, p)
    actual = v_p(x**n - y**n, p)
    if predicted != actual:
        raise AssertionError(
            f"lifting-the-exponent violated at ({x},{y},{n},{p}): {predicted} != {actual}"
        )
    return predicted


# ---------------------------------------------------------------------------
# Filtration
# ---------------------------------------------------------------------------

_GAMMA_GROUPS = {"trivial": (1,), "pm1": (1, -1)}


@dataclass
class FiltrationReport:
    """The bookkeeping controlling root-rationality exponents.

    The valuation is v = c*v_p on the integers (c = 1 for the multiplicative
    group, c the inseparable exponent for an elliptic curve); gamma ranges
    over the subgroup named by gamma_mode.
    """

    sigma: int
    p: int
    gamma_mode: str
    c: int
    N: int
    depth: int
    coseparable: bool
    s_table: dict[int, tuple[int, int] | None]  # m -> (s_m, gamma_m) or None
    s: int | None
    gamma_tilde: int | None
    C: int | None
    t: int | None
    scan_window: int
    membership_checked: bool = dc_field(default=False)

    def to_json(self) -> str:
        payload = {
            "sigma": self.sigma,
            "p": self.p,
            "gamma": self.gamma_mode,
            "c": self.c,
            "N": self.N,
            "coseparable": self.coseparable,
            "s_table": {
                str(m): (None if v is None else {"s_m": v[0], "gamma_m": v[1]})
                for m, v in self.s_table.items()
            },
            "s": self.s,
            "gamma_tilde": self.gamma_tilde,
            "C": self.C,
            "t": self.t,
            "scan_window": self.scan_window,
        }
        return json.dumps(payload, sort_keys=True)


class ScanWindowExhausted(RuntimeError):
    """The bounded scan did not find s_m; report rather than extrapolate."""


def _scan_s_m(m_sigma: int, gammas, p: int, level: int, c: int, window: int):
    """Smallest n <= window with v(sigma^n - gamma) >= level for some gamma."""
    if level == 0:
        return 1, 1
    need = level // c + (1 if level % c else 0)  # v_p threshold
    mod = p**need
    acc = m_sigma % mod
    for n in range(1, window + 1):
        for g in gammas:
            if (acc - g) % mod == 0:
                return n, g
        acc = acc * m_sigma % mod
    raise ScanWindowExhausted(
        f"no n <= {window} with v({m_sigma}^n - gamma) >= {level}"
    )


def _members_up_to(m_sigma: int, gammas, p: int, level: int, c: int, window: int):
    """All n <= window with v(sigma^n - gamma) >= level for some gamma."""
    need = level // c + (1 if level % c else 0)
    mod = p**need
    acc = m_sigma % mod
    out = []
    for n in range(1, window + 1):
        if any((acc - g) % mod == 0 for g in gammas):
            out.append(n)
        acc = acc * m_sigma % mod
    return out


def sm_filtration(
    sigma: int,
    gamma: str = "trivial",
    p: int = 3,
    depth: int = 3,
    c: int = 1,
    window: int | None = None,
) -> FiltrationReport:
    """Compute N, the s_m/gamma_m table, C, and the exponent t = p^(C+1)*r.

    sigma is an integer acting by multiplication (power, Chebyshev and
    Lattes-[m] cases); gamma is "trivial" or "pm1"; v = c*v_p.  Scans are
    bounded and failures are reported, never extrapolated.
    """
    if gamma not in _GAMMA_GROUPS:
        raise ValueError(f"unknown gamma group {gamma!r} (use 'trivial' or 'pm1')")
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if c not in (1, 2):
        raise ValueError("c must be 1 or 2")
    gammas = _GAMMA_GROUPS[gamma]
    coseparable = sigma % p == 0
    # N = max v(gamma - 1) over nontrivial gamma, plus one; v(-2) = 0 for odd p,
    # and the empty maximum counts as 0, so N = 1 throughout this catalog
    N = 1
    if window is None:
        window = max(10 * p * depth, 4 * p ** (max(depth, N) // c + 1))
    s_table: dict[int, tuple[int, int] | None] = {0: (1, 1)}
    if coseparable:
        for m in range(1, depth + 1):
            s_table[m] = None
        return FiltrationReport(
            sigma=sigma,
            p=p,
            gamma_mode=gamma,
            c=c,
            N=N,
            depth=depth,
            coseparable=True,
            s_table=s_table,
            s=None,
            gamma_tilde=None,
            C=None,
            t=None,
            scan_window=window,
        )
    for m in range(1, depth + 1):
        s_table[m] = _scan_s_m(sigma, gammas, p, m, c, window)
        # Lemma-style membership check: hits at level m must be exactly the
        # multiples of s_m within the window
        s_m = s_table[m][0]
        members = _members_up_to(sigma, gammas, p, m, c, window)
        if members != list(range(s_m, window + 1, s_m)):
            raise AssertionError(
                f"level-{m} hit set is not s_m*Z within the window (s_m={s_m})"
            )
    if N <= depth:
        s, gamma_tilde = s_table[N]
    else:
        s, gamma_tilde = _scan_s_m(sigma, gammas, p, N, c, window)
    # C = v(sigma^s * gamma_tilde^{-1} - 1); gamma_tilde in {1,-1} is its own
    # inverse, and v(u*g - g') = v(u - g'/g) for units g
    C = c * v_p(sigma**s * gamma_tilde - 1, p)
    t = p ** (C + 1) * s
    return FiltrationReport(
        sigma=sigma,
        p=p,
        gamma_mode=gamma,
        c=c,
        N=N,
        depth=depth,
        coseparable=False,
        s_table=s_table,
        s=s,
        gamma_tilde=gamma_tilde,
        C=C,
        t=t,
        scan_window=window,
        membership_checked=True,
    )


def witness_gammas(sigma: int, gamma: str, p: int, level: int, c: int, n: int) -> set[int]:
    """{gamma : v(sigma^n - gamma) >= level} for the catalog groups."""
    gammas = _GAMMA_GROUPS[gamma]
    need = level // c + (1 if level % c else 0)
    mod = p**need
    acc = pow(sigma, n, mod)
    return {g for g in gammas if (acc - g) % mod == 0}


def skew_filtration(sigma: SkewPoly, depth: int = 3) -> FiltrationReport:
    """Filtration for an additive-polynomial operator: R = K<phi>, v = v_phi,
    trivial automorphism group."""
    F = sigma.field
    p = F.p
    if sigma.is_zero() or sigma.deg_phi < 1:
        raise ValueError("sigma must be a nonconstant additive operator")
    a0 = sigma.coeffs[0]
    coseparable = a0 == 0
    N = 1
    one = SkewPoly.one(F)
    s_table: dict[int, tuple[int, int] | None] = {0: (1, 1)}
    if coseparable:
        for m in range(1, depth + 1):
            s_table[m] = None
        return FiltrationReport(
            sigma=-1,
            p=p,
            gamma_mode="trivial",
            c=1,
            N=N,
            depth=depth,
            coseparable=True,
            s_table=s_table,
            s=None,
            gamma_tilde=None,
            C=None,
            t=None,
            scan_window=0,
        )
    s1 = F.mult_order_of(a0)
    window = max(4 * s1, 4 * p * depth)
    powers = {}
    acc = one
    for n in range(1, window + 1):
        acc = acc * sigma
        powers[n] = acc
    for m in range(1, depth + 1):
        found = None
        for n in range(1, window + 1):
            diff = powers[n] - one
            if diff.is_zero():
                raise ValueError("sigma is not confined")
            if diff.v_phi >= m:
                found = n
                break
        if found is None:
            raise ScanWindowExhausted(f"no n <= {window} reaches v_phi >= {m}")
        s_table[m] = (found, 1)
    s = s_table[N][0]
    C = (powers[s] - one).v_phi
    t = p ** (C + 1) * s
    return FiltrationReport(
        sigma=-1,
        p=p,
        gamma_mode="trivial",
        c=1,
        N=N,
        depth=depth,
        coseparable=False,
        s_table=s_table,
        s=s,
        gamma_tilde=1,
        C=C,
        t=t,
        scan_window=window,
    )


# ---------------------------------------------------------------------------
# Dominant-root hypothesis (H4)
# ---------------------------------------------------------------------------

H4_HOLDS = "holds"
H4_FAILS_UNIT_ROOT = "fails: unit-modulus root"
H4_FAILS_COSEPARABLE = "fails: coseparable"


class PrecisionError(ArithmeticError):
    """Eigenvalue modulus not separable from 1 at the given precision."""


def h4_check(eigenvalues, coseparable: bool, *, eps: float = 1e-20) -> str:
    """Dominant-root hypothesis for the degree sequence of sigma^n - gamma.

    Eigenvalues may be exact rationals (int, Fraction), exact Gaussian
    rationals as (re, im) pairs, or approximate complex numbers certified to
    error <= eps.  An approximate modulus within eps of 1 is undecidable and
    raises PrecisionError; use unit_circle_root_count for an exact verdict.
    """
    if coseparable:
        return H4_FAILS_COSEPARABLE
    undecidable = None
    for lam in eigenvalues:
        if isinstance(lam, (int, Fraction)):
            if abs(lam) == 1:
                return H4_FAILS_UNIT_ROOT
            continue
        if isinstance(lam, tuple):
            re, im = Fraction(lam[0]), Fraction(lam[1])
            if re * re + im * im == 1:
                return H4_FAILS_UNIT_ROOT
            continue
        mod = abs(mpmath.mpc(lam)) if not isinstance(lam, mpmath.mpc) else abs(lam)
        dist = abs(mod - 1)
        if dist <= eps:
            undecidable = mod
    if undecidable is not None:
        raise PrecisionError(
            f"|lambda| = {undecidable} within eps = {eps} of 1; approximation "
            "cannot decide H4, raise precision or supply exact data"
        )
    return H4_HOLDS


def _sturm_chain(poly):
    chain = [poly, _qpoly_deriv(poly)]
    while len(chain[-1]) > 1:
        rem = [-c for c in _qpoly_mod(chain[-2], chain[-1])]
        if not rem:
            break
        chain.append(rem)
    return [c for c in chain if c]


def _qpoly_deriv(a):
    return [i * c for i, c in enumerate(a)][1:] or [Fraction(0)]


def _qpoly_mod(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        for j in range(len(b)):
            a[len(a) - len(b) + j] -= f * b[j]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _qpoly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sign_changes(chain, x) -> int:
    signs = []
    for cpoly in chain:
        v = _qpoly_eval(cpoly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_roots_in_interval(poly, lo, hi) -> int:
    """Number of distinct real roots of an exact polynomial in (lo, hi]."""
    poly = [Fraction(c) for c in poly]
    sqfree = poly
    g = _qpoly_gcd(poly, _qpoly_deriv(poly))
    if len(g) > 1:
        sqfree = _qpoly_div_exact(poly, g)
    chain = _sturm_chain(sqfree)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def _qpoly_gcd(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and any(c != 0 for c in b):
        a, b = b, _qpoly_mod(a, b)
    return a


def _qpoly_div_exact(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(c != 0 for c in a):
        f = a[-1] / b[-1]
        out[len(a) - len(b)] = f
        for j in range(len(b)):
            a[len(a) - len(b) + j] -= f * b[j]
        while a and a[-1] == 0:
            a.pop()
    return out


def unit_circle_root_count(poly: list[int]) -> int:
    """Exact number of roots on |z| = 1 for a palindromic integer polynomial
    of even degree, via the substitution w = z + 1/z."""
    d = len(poly) - 1
    if d % 2 != 0 or poly != poly[::-1]:
        raise ValueError("expected a palindromic polynomial of even degree")
    half = d // 2
    # write z^(-half) * poly(z) as G(w) with w = z + 1/z: z^k + z^(-k) = C_k(w),
    # the Chebyshev-style recursion C_0 = 2, C_1 = w, C_{k+1} = w*C_k - C_{k-1}
    C = [[Fraction(2)], [Fraction(0), Fraction(1)]]
    for _ in range(2, half + 1):
        nxt = [Fraction(0)] + C[-1]
        for i, c in enumerate(C[-2]):
            nxt[i] -= c
        C.append(nxt)
    G = [Fraction(0)] * (half + 1)
    G[0] += poly[half]
    for k in range(1, half + 1):
        for i, c in enumerate(C[k]):
            G[i] += poly[half + k] * c
    # distinct roots with w in the open interval correspond to conjugate pairs;
    # w = +-2 are the single points z = +-1
    inside = real_roots_in_interval(G, Fraction(-2), Fraction(2))  # (-2, 2]
    if _qpoly_eval(G, Fraction(2)) == 0:
        inside -= 1
    count = 2 * inside
    if _qpoly_eval([Fraction(c) for c in poly], Fraction(1)) == 0:
        count += 1
    if _qpoly_eval([Fraction(c) for c in poly], Fraction(-1)) == 0:
        count += 1
    return count


def char_poly(M) -> list[int]:
    """Characteristic polynomial of a small integer matrix, low-to-high,
    via Faddeev-LeVerrier over exact rationals."""
    size = len(M)
    A = [[Fraction(v) for v in row] for row in M]
    Mk = [row[:] for row in A]
    coeffs = [Fraction(1)] + [Fraction(0)] * size  # x^size downward
    for k in range(1, size + 1):
        tr = sum(Mk[i][i] for i in range(size))
        c = -tr / k
        coeffs[k] = c
        if k < size:
            for i in range(size):
                Mk[i][i] += c
            Mk = [
                [sum(A[i][t] * Mk[t][j] for t in range(size)) for j in range(size)]
                for i in range(size)
            ]
    out = list(reversed(coeffs))
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def _rational_roots(poly: list[int]) -> tuple[list[Fraction], list[int]]:
    """Split off all rational roots (with multiplicity); returns the roots
    and the remaining factor."""
    rem = [Fraction(c) for c in poly]
    roots = []
    changed = True
    while changed and len(rem) > 1:
        changed = False
        lead = rem[-1]
        const = rem[0]
        if const == 0:
            roots.append(Fraction(0))
            rem = rem[1:]
            changed = True
            continue
        for pnum in _divisor_candidates(const.numerator * const.denominator):
            for pden in _divisor_candidates(lead.numerator * lead.denominator):
                for sign in (1, -1):
                    cand = Fraction(sign * pnum, pden)
                    if _qpoly_eval(rem, cand) == 0:
                        rem = _qpoly_div_exact(rem, [-cand, Fraction(1)])
                        roots.append(cand)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return roots, rem


def _divisor_candidates(n: int) -> list[int]:
    n = abs(int(n))
    return sorted({d for d in range(1, n + 1) if n % d == 0}) or [1]


def h4_check_matrix(M, coseparable: bool = False) -> str:
    """H4 for an integer matrix acting on a torus, decided exactly when the
    characteristic polynomial splits into rational roots and a palindromic
    part (which covers the catalog and the Salem example)."""
    if coseparable:
        return H4_FAILS_COSEPARABLE
    cp = char_poly(M)
    rational, rest = _rational_roots(cp)
    for r in rational:
        if abs(r) == 1:
            return H4_FAILS_UNIT_ROOT
    # char_poly is monic with integer coefficients, so every rational root is
    # an integer and the residual factor stays integral
    assert all(c.denominator == 1 for c in rest)
    rest_int = [int(c) for c in rest]
    if len(rest_int) > 1:
        d = len(rest_int) - 1
        if d % 2 == 0 and rest_int == rest_int[::-1]:
            if unit_circle_root_count(rest_int) > 0:
                return H4_FAILS_UNIT_ROOT
        else:
            roots, err = certified_roots(rest_int)
            return h4_check(roots, False, eps=max(err * 10, 1e-40))
    return H4_HOLDS


def torus_deg(M, n: int) -> int:
    """deg(sigma^n - 1) = |det(M^n - I)| for an integer matrix acting on a torus."""
    if n < 1:
        raise ValueError("n must be >= 1")
    P = _mat_pow(M, n)
    for i in range(len(P)):
        P[i][i] -= 1
    d = _int_det(P)
    if d == 0:
        raise ValueError(f"det(M^{n} - I) = 0: the map is not confined at n = {n}")
    return abs(d)


def _mat_pow(M, n: int):
    size = len(M)
    R = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    B = [row[:] for row in M]
    while n:
        if n & 1:
            R = _mat_mul(R, B)
        B = _mat_mul(B, B)
        n >>= 1
    return R


def _mat_mul(A, B):
    size = len(A)
    return [
        [sum(A[i][k] * B[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def _int_det(M) -> int:
    """Fraction-free Bareiss determinant of a small integer matrix."""
    A = [row[:] for row in M]
    size = len(A)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if A[k][k] == 0:
            for i in range(k + 1, size):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[size - 1][size - 1]


def companion_matrix(poly: list[int]) -> list[list[int]]:
    """Companion matrix of a monic integer polynomial given low-to-high."""
    if poly[-1] != 1:
        raise ValueError("polynomial must be monic")
    d = len(poly) - 1
    M = [[0] * d for _ in range(d)]
    for i in range(1, d):
        M[i][i - 1] = 1
    for i in range(d):
        M[i][d - 1] = -poly[i]
    return M


def salem_polynomial() -> list[int]:
    """x^4 - 3x^3 + 3x^2 - 3x + 1, low-to-high: a Salem quartic."""
    return [1, -3, 3, -3, 1]


def certified_roots(poly_low_to_high, dps: int = 60):
    """Roots of an exact-coefficient polynomial with a certified error bound."""
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(int(c)) if isinstance(c, int) else mpmath.mpf(c)
                  for c in reversed(list(poly_low_to_high))]
        roots, err = mpmath.polyroots(coeffs, maxsteps=200, error=True)
        return [mpmath.mpc(r) for r in roots], float(err)


def cyclotomic(d: int) -> list[int]:
    """Coefficients of the d-th cyclotomic polynomial, low-to-high."""
    return list(_cyclotomic_cached(d))


@functools.lru_cache(maxsize=None)
def _cyclotomic_cached(d: int) -> tuple[int, ...]:
    # Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, exact integer division
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _int_poly_div_exact(num, list(_cyclotomic_cached(e)))
    return tuple(num)


def _int_poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1]
        assert c % b[-1] == 0
        f = c // b[-1]
        out[k] = f
        if f:
            for j, bj in enumerate(b):
                a[k + j] -= f * bj
    assert all(c == 0 for c in a[: len(b) - 1])
    return out

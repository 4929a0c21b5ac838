"""Exact truncated power series over the rationals, zeta-function
construction from fixed-point counts, linear-recurrence detection, and
Pade / logarithmic-derivative certificates of (root-)rationality.

No floating point anywhere in this module: coefficient growth like m^(2n)
destroys float certificates, so everything is Fraction arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction


class CertificateError(RuntimeError):
    """The two prongs of a certificate disagree: an implementation bug."""


# ---------------------------------------------------------------------------
# Q[z] helpers (coefficient lists, low-to-high, trimmed)
# ---------------------------------------------------------------------------


def qp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def qp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return qp_trim(out)


def qp_scale(a, c):
    return qp_trim([x * c for x in a])


def qp_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return qp_trim(out)


def qp_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = qp_trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(qp_trim(a)) >= len(b):
        a = qp_trim(a)
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for j in range(len(b)):
            a[k + j] -= f * b[j]
        a = a[:-1]
    return qp_trim(q), qp_trim(a)


def qp_gcd(a, b):
    a, b = qp_trim(list(a)), qp_trim(list(b))
    while b:
        a, b = b, qp_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def qp_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def qp_deriv(a):
    return qp_trim([i * c for i, c in enumerate(a)][1:])


def qp_xgcd(a, b):
    """(g, u, v) with u*a + v*b = g monic."""
    r0, r1 = qp_trim(list(a)), qp_trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = qp_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, qp_add(s0, qp_scale(qp_mul(q, s1), -1))
        t0, t1 = t1, qp_add(t0, qp_scale(qp_mul(q, t1), -1))
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        s0 = [c / lead for c in s0]
        t0 = [c / lead for c in t0]
    return r0, s0, t0


def qp_inv_mod(a, q):
    """Inverse of a modulo q in Q[z]; a must be coprime to q."""
    g, u, _ = qp_xgcd(a, q)
    if len(g) != 1:
        raise ZeroDivisionError("element not invertible modulo q")
    return qp_trim([c / g[0] for c in u])


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


class TruncSeries:
    """Power series truncated at a fixed order, exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        T = min(self.order, other.order)
        return TruncSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], T
        )

    def __sub__(self, other):
        T = min(self.order, other.order)
        return TruncSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], T
        )

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def scale(self, c) -> "TruncSeries":
        c = Fraction(c)
        return TruncSeries([a * c for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        T = min(self.order, other.order)
        out = [Fraction(0)] * (T + 1)
        for i, a in enumerate(self.coeffs[: T + 1]):
            if a:
                top = T - i
                for j, b in enumerate(other.coeffs[: top + 1]):
                    if b:
                        out[i + j] += a * b
        return TruncSeries(out, T)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term")
        T = self.order
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * T
        for n in range(1, T + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * out[n - k]
            out[n] = -inv0 * acc
        return TruncSeries(out, T)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1, 1) / Fraction(other))
        return self * other.inverse()

    def deriv(self) -> "TruncSeries":
        """d/dz, one order lower."""
        return TruncSeries(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1
        )

    def zderiv(self) -> "TruncSeries":
        """z * d/dz, same order."""
        return TruncSeries([i * c for i, c in enumerate(self.coeffs)], self.order)

    def substitute_power(self, k: int) -> "TruncSeries":
        """z -> z^k, keeping the same truncation order."""
        T = self.order
        out = [Fraction(0)] * (T + 1)
        for i, c in enumerate(self.coeffs):
            if i * k > T:
                break
            out[i * k] = c
        return TruncSeries(out, T)

    def substitute_scaled_power(self, a, b: int) -> "TruncSeries":
        """z -> a * z^b."""
        T = self.order
        a = Fraction(a)
        out = [Fraction(0)] * (T + 1)
        pw = Fraction(1)
        for i, c in enumerate(self.coeffs):
            if i * b > T:
                break
            out[i * b] = c * pw
            pw *= a
        return TruncSeries(out, T)

    def mul_poly(self, poly) -> "TruncSeries":
        """Multiply by an exact polynomial (low-to-high list), same order."""
        T = self.order
        out = [Fraction(0)] * (T + 1)
        for j, b in enumerate(poly):
            if b and j <= T:
                for i in range(T + 1 - j):
                    a = self.coeffs[i]
                    if a:
                        out[i + j] += a * b
        return TruncSeries(out, T)

    def to_json(self) -> str:
        return json.dumps([f"{c.numerator}/{c.denominator}" for c in self.coeffs])

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        return f"TruncSeries[{head}{', ...' if self.order > 7 else ''}; T={self.order}]"


def exp_series(a: TruncSeries) -> TruncSeries:
    """exp of a series with zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("exp_series needs constant term 0")
    T = a.order
    out = [Fraction(1)] + [Fraction(0)] * T
    for n in range(1, T + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak:
                acc += k * ak * out[n - k]
        out[n] = acc / n
    return TruncSeries(out, T)


def log_series(a: TruncSeries) -> TruncSeries:
    """log of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("log_series needs constant term 1")
    T = a.order
    out = [Fraction(0)] * (T + 1)
    for n in range(1, T + 1):
        acc = n * a.coeffs[n]
        for k in range(1, n):
            if out[k] and a.coeffs[n - k]:
                acc -= k * out[k] * a.coeffs[n - k]
        out[n] = acc / n
    return TruncSeries(out, T)


def pow_series(a: TruncSeries, e) -> TruncSeries:
    """a^e for rational e, constant term of a must be 1."""
    return exp_series(log_series(a).scale(Fraction(e)))


# ---------------------------------------------------------------------------
# Zeta functions from counts
# ---------------------------------------------------------------------------


def zeta_from_counts(counts, T: int | None = None) -> TruncSeries:
    """exp(sum f_n z^n / n) for counts f_1, f_2, ..."""
    counts = list(counts)
    if T is None:
        T = len(counts)
    if len(counts) < T:
        raise ValueError("not enough counts for the requested order")
    if any(c < 0 for c in counts):
        raise ValueError("fixed-point counts must be nonnegative")
    body = TruncSeries(
        [Fraction(0)] + [Fraction(counts[n - 1], n) for n in range(1, T + 1)], T
    )
    return exp_series(body)


def tame_from_counts(counts, p: int, T: int | None = None) -> TruncSeries:
    """Same, but the sum skips every n divisible by p."""
    counts = list(counts)
    if T is None:
        T = len(counts)
    if len(counts) < T:
        raise ValueError("not enough counts for the requested order")
    body = TruncSeries(
        [Fraction(0)]
        + [
            Fraction(counts[n - 1], n) if n % p else Fraction(0)
            for n in range(1, T + 1)
        ],
        T,
    )
    return exp_series(body)


def series_from_census(counts_by_length: dict[int, int], T: int) -> TruncSeries:
    """Euler product prod_l (1 - z^l)^(-P_l) expanded exactly."""
    out = TruncSeries.one(T)
    for length in sorted(counts_by_length):
        P_l = counts_by_length[length]
        if P_l == 0 or length > T:
            continue
        base = TruncSeries([1] + [0] * (length - 1) + [-1], T)
        out = out * pow_series(base, -P_l)
    return out


def expand_rational(num, den, T: int) -> TruncSeries:
    """Series of num/den with den(0) != 0."""
    nd = TruncSeries(num, T)
    dd = TruncSeries(den, T)
    return nd * dd.inverse()


def zeta_union(zS1: TruncSeries, zS2: TruncSeries, zS12: TruncSeries) -> TruncSeries:
    """Inclusion-exclusion for invariant decompositions S = S1 union S2."""
    if zS12.coeffs[0] == 0:
        raise ZeroDivisionError("intersection zeta not invertible")
    return zS1 * zS2 * zS12.inverse()


def tame_identity_check(counts, p: int, T: int, iterate_counts=None) -> bool:
    """zeta*_f(z) * (zeta_{f^p}(z^p))^(1/p) == zeta_f(z) to order T, plus the
    iterated-product form of the same identity; needs counts up to p*T.

    When iterate_counts (the counts of the actual iterate f^p, computed
    independently) are supplied, the first identity checks the substance
    (f^p)_k = f_{pk}; without them it subsamples, which only exercises the
    formal bookkeeping."""
    counts = list(counts)
    if len(counts) < p * T:
        raise ValueError(f"need counts up to {p * T}")
    zf = zeta_from_counts(counts, T)
    tame = tame_from_counts(counts, p, T)
    if iterate_counts is not None:
        sub = list(iterate_counts)[: T // p]
        if len(sub) < T // p:
            raise ValueError("iterate counts too short")
    else:
        sub = [counts[p * k - 1] for k in range(1, T // p + 1)]
    zfp = zeta_from_counts(sub, T // p)
    lifted = TruncSeries(zfp.coeffs, T).substitute_power(p)
    lhs = tame * pow_series(lifted, Fraction(1, p))
    if lhs != zf:
        return False
    # iterated form: zeta_f = prod_i (zeta*_{f^{p^i}}(z^{p^i}))^(1/p^i)
    prod = TruncSeries.one(T)
    i = 0
    while p**i <= T:
        q = p**i
        sub_i = [counts[q * k - 1] for k in range(1, T // q + 1)]
        tame_i = tame_from_counts(sub_i, p, T // q)
        lifted_i = TruncSeries(tame_i.coeffs, T).substitute_power(q)
        prod = prod * pow_series(lifted_i, Fraction(1, q))
        i += 1
    return prod == zf


def pair_ode_check(
    F1: TruncSeries, F2: TruncSeries, R_num, R_den, p: int, T: int
) -> bool:
    """F1'(z) F2(z^p) - F1(z) F2'(z^p) z^(p-1) = R(z) F1(z) F2(z^p) to order T-1,
    with R = R_num/R_den an exact rational function, R_den(0) != 0."""
    if T > F1.order or T // p > F2.order:
        raise ValueError("series too short for the requested order")
    F1 = F1.truncate(T)
    G = TruncSeries(F2.coeffs, T).substitute_power(p)  # F2(z^p)
    F2d = TruncSeries(F2.deriv().coeffs, T).substitute_power(p)
    zp1 = [Fraction(0)] * (p - 1) + [Fraction(1)]
    lhs = F1.deriv().truncate(T - 1) * G.truncate(T - 1) - (
        F1.truncate(T - 1) * F2d.truncate(T - 1).mul_poly(zp1)
    )
    rhs = F1.truncate(T - 1) * G.truncate(T - 1)
    # clear denominators: R_den * lhs == R_num * rhs
    return lhs.mul_poly(qp_trim([Fraction(c) for c in R_den])) == rhs.mul_poly(
        qp_trim([Fraction(c) for c in R_num])
    )


# ---------------------------------------------------------------------------
# Linear recurrence detection
# ---------------------------------------------------------------------------


@dataclass
class RecurrenceReport:
    found: bool
    order: int | None
    charpoly: list[Fraction] | None  # low-to-high, monic
    window: int
    max_order: int
    verified: bool = False

    def roots_certified(self, dps: int = 60):
        import mpmath

        with mpmath.workdps(dps):
            coeffs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
                      for c in reversed(self.charpoly)]
            roots, err = mpmath.polyroots(coeffs, maxsteps=400, error=True)
            return [mpmath.mpc(r) for r in roots], float(err)

    def to_json(self) -> str:
        return json.dumps(
            {
                "found": self.found,
                "order": self.order,
                "charpoly": None
                if self.charpoly is None
                else [f"{c.numerator}/{c.denominator}" for c in self.charpoly],
                "window": self.window,
                "max_order": self.max_order,
            }
        )


def _solve_exact(rows, rhs):
    """Particular solution of rows * x = rhs over Q, or None if inconsistent."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(rows, rhs)]
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = None
        for i in range(rank, m):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [c / pv for c in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    for i in range(rank, m):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = aug[r][ncols]
    return x


def recurrence_detect(seq, max_order: int = 12, window: int = 60) -> RecurrenceReport:
    """Smallest-order exact linear recurrence reproducing the whole window,
    or a refusal; deterministic."""
    if window < 2 * max_order + 4:
        raise ValueError("window must be at least 2*max_order + 4")
    seq = [Fraction(c) for c in seq]
    if len(seq) < window:
        raise ValueError(f"need {window} terms, got {len(seq)}")
    seq = seq[:window]
    for L in range(1, max_order + 1):
        rows = []
        rhs = []
        for n in range(L, window):
            rows.append([seq[n - i] for i in range(1, L + 1)])
            rhs.append(seq[n])
        sol = _solve_exact(rows, rhs)
        if sol is not None:
            charpoly = [-c for c in reversed(sol)] + [Fraction(1)]
            return RecurrenceReport(
                found=True,
                order=L,
                charpoly=charpoly,
                window=window,
                max_order=max_order,
                verified=True,
            )
    return RecurrenceReport(
        found=False, order=None, charpoly=None, window=window, max_order=max_order
    )


def verify_recurrence(seq, charpoly, start: int = 0) -> bool:
    """Check sum_j charpoly_j * a_{n-L+j} = 0 on every full window position."""
    seq = [Fraction(c) for c in seq]
    cp = [Fraction(c) for c in charpoly]
    L = len(cp) - 1
    for n in range(max(L, start), len(seq)):
        acc = Fraction(0)
        for j, c in enumerate(cp):
            acc += c * seq[n - L + j]
        if acc != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Pade certification
# ---------------------------------------------------------------------------


@dataclass
class PadeResult:
    num: list[Fraction]
    den: list[Fraction]
    horizon: int  # residual checked to vanish through this order

    def to_json(self) -> str:
        enc = lambda v: [f"{c.numerator}/{c.denominator}" for c in v]
        return json.dumps(
            {"num": enc(self.num), "den": enc(self.den), "horizon": self.horizon}
        )


def pade_certify(s: TruncSeries, dmax: int) -> PadeResult | None:
    """Rational function of degree <= dmax matching s with zero residual on
    every coefficient through s.order, or None (a refusal, not an error)."""
    T = s.order
    if T < 2 * dmax + 8:
        raise ValueError("need order T >= 2*dmax + 8 for a meaningful certificate")
    c = s.coeffs
    rows = []
    rhs = []
    for k in range(dmax + 1, T + 1):
        rows.append([c[k - j] if k - j >= 0 else Fraction(0) for j in range(1, dmax + 1)])
        rhs.append(-c[k])
    sol = _solve_exact(rows, rhs)
    if sol is None:
        return None
    den = qp_trim([Fraction(1)] + sol)
    prod = s.mul_poly(den)
    num = qp_trim(list(prod.coeffs[: dmax + 1]))
    if any(c != 0 for c in prod.coeffs[dmax + 1 :]):
        return None
    g = qp_gcd(num, den)
    if len(g) > 1:
        num = qp_divmod(num, g)[0]
        den = qp_divmod(den, g)[0]
        c0 = den[0]
        num = [c / c0 for c in num]
        den = [c / c0 for c in den]
    return PadeResult(num=num, den=den, horizon=T)


# ---------------------------------------------------------------------------
# Root-rationality certificates
# ---------------------------------------------------------------------------


@dataclass
class LogDerivativeHint:
    """Exact candidate z*s'/s = A/B with B(0) = 1, A(0) = 0, together with
    the irreducible factorization of B over Q (pairwise coprime factors)."""

    A: list[Fraction]
    B: list[Fraction]
    factors: list[tuple[str, list[Fraction]]]  # (label, irreducible factor)


@dataclass
class RootRationalCertificate:
    t: int
    method: str
    horizon: int
    degree: int  # max(deg num, deg den) of the certified rational s^t
    exponents: list[tuple[str, int]] | None  # factor label -> integer exponent
    pade: PadeResult | None
    recurrence: RecurrenceReport

    def to_json(self) -> str:
        return json.dumps(
            {
                "t": self.t,
                "method": self.method,
                "horizon": self.horizon,
                "degree": self.degree,
                "exponents": self.exponents,
            }
        )


def _log_derivative_series(s: TruncSeries) -> TruncSeries:
    return s.zderiv() * s.inverse()


def _verify_hint_against_series(e: list[Fraction], hint: LogDerivativeHint) -> bool:
    """Check B * e == A as truncated series, where e is the coefficient list
    of z*s'/s (index n = coefficient of z^n)."""
    T = len(e) - 1
    ser = TruncSeries(e, T)
    lhs = ser.mul_poly(hint.B)
    rhs = TruncSeries(hint.A, T)
    return lhs == rhs


def _residue_exponents(hint: LogDerivativeHint, t: int):
    """Exponents of s^t at each irreducible factor of B, or None if some
    residue is non-constant or non-integral."""
    A = [Fraction(c) for c in hint.A]
    B = [Fraction(c) for c in hint.B]
    if qp_eval(B, Fraction(0)) != 1:
        raise ValueError("hint denominator must have constant term 1")
    if A and A[0] != 0:
        raise ValueError("hint numerator must vanish at 0")
    if len(qp_trim(A)) - 1 > len(qp_trim(B)) - 1:
        return None  # not proper: cannot be a logarithmic derivative
    g = qp_gcd(B, qp_deriv(B))
    if len(g) > 1:
        return None  # repeated factors: poles would not be simple
    prod = [Fraction(1)]
    for _, q in hint.factors:
        prod = qp_mul(prod, [Fraction(c) for c in q])
    if qp_trim(prod) != qp_trim(B):
        raise CertificateError(
            "hint factor list does not multiply to B; a pole would go unchecked"
        )
    zB = qp_mul([Fraction(0), Fraction(1)], B)
    dzB = qp_deriv(zB)
    tA = qp_scale(A, t)
    out = []
    for label, q in hint.factors:
        q = [Fraction(c) for c in q]
        w = qp_divmod(dzB, q)[1]
        winv = qp_inv_mod(w, q)
        r = qp_divmod(qp_mul(qp_divmod(tA, q)[1], winv), q)[1]
        r = qp_trim(r)
        if len(r) > 1:
            return None  # residue varies over conjugate roots
        val = r[0] if r else Fraction(0)
        if val.denominator != 1:
            return None
        out.append((label, int(val)))
    return out


def root_rational_certificate(
    s: TruncSeries,
    t: int,
    dmax: int | None = None,
    max_order: int | None = None,
    hint: LogDerivativeHint | None = None,
) -> RootRationalCertificate | None:
    """Two-pronged certificate that s^t is rational.

    Generic route (no hint): (a) exact Pade of pow_series(s, t) with full-tail
    residual; (b) recurrence detection on the coefficients of z*s'/s.  With a
    hint, both prongs verify the supplied exact log-derivative instead, which
    scales to exponents t far beyond direct Pade reach.  Disagreement between
    prongs raises CertificateError; a clean double refusal returns None.
    """
    if s.coeffs[0] != 1:
        raise ValueError("series must have constant term 1")
    T = s.order
    e = list(_log_derivative_series(s).coeffs)
    if hint is not None:
        L = len(qp_trim(hint.B)) - 1
        degA = len(qp_trim(hint.A)) - 1
        if T < degA + L + 8:
            raise ValueError(
                f"series order {T} too short to certify against a degree-"
                f"({degA},{L}) log derivative; need at least {degA + L + 8}"
            )
        # prong (a): the log-derivative ODE z*s'*B == A*s, coefficient-wise
        ode_ok = _verify_hint_against_series(e, hint)
        # prong (b): the recurrence induced by B on the coefficients of z*s'/s
        charpoly = list(reversed([Fraction(c) for c in hint.B]))
        rec_ok = verify_recurrence(e, charpoly, start=max(L, degA + 1))
        rec = RecurrenceReport(
            found=rec_ok,
            order=L if rec_ok else None,
            charpoly=charpoly if rec_ok else None,
            window=T,
            max_order=L,
            verified=rec_ok,
        )
        if ode_ok != rec.found:
            raise CertificateError(
                f"hint prongs disagree: ode={ode_ok}, recurrence={rec.found}"
            )
        if not ode_ok:
            return None
        # with the ODE certified, s^t is rational exactly when every residue
        # of t*A/(zB) is an integer; a non-integral residue is a clean refusal
        exps = _residue_exponents(hint, t)
        if exps is None:
            return None
        degree = sum(abs(ex) * (len(q) - 1) for (lbl, ex), (_, q) in zip(exps, hint.factors))
        return RootRationalCertificate(
            t=t,
            method="ode-residue+recurrence",
            horizon=T,
            degree=degree,
            exponents=exps,
            pade=None,
            recurrence=rec,
        )
    if dmax is None:
        raise ValueError("generic certificate needs dmax")
    power = pow_series(s, t)
    pres = pade_certify(power, dmax)
    if max_order is None:
        max_order = min(2 * dmax, (T - 5) // 2)
    rec = recurrence_detect(e[1:], max_order=max_order, window=T)
    if (pres is not None) != rec.found:
        raise CertificateError(
            f"prongs disagree: pade={'ok' if pres is not None else 'refusal'}, "
            f"recurrence={'found' if rec.found else 'refusal'}"
        )
    if pres is None:
        return None
    degree = max(len(pres.num) - 1, len(pres.den) - 1)
    return RootRationalCertificate(
        t=t,
        method="pade+recurrence",
        horizon=pres.horizon,
        degree=degree,
        exponents=None,
        pade=pres,
        recurrence=rec,
    )


# ---------------------------------------------------------------------------
# Structured log-derivative assembly from piecewise-geometric count data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeometricPiece:
    """coeff * sum_{k>=0} (lam*z)^(r + k*L): a geometric progression supported
    on the congruence class r mod L (1 <= r <= L)."""

    coeff: Fraction
    lam: int
    L: int
    r: int

    def term(self, n: int) -> Fraction:
        if n < 1 or n % self.L != self.r % self.L:
            return Fraction(0)
        return self.coeff * Fraction(self.lam) ** n


def pieces_value(pieces, n: int) -> Fraction:
    return sum((pc.term(n) for pc in pieces), Fraction(0))


def assemble_log_derivative(pieces) -> LogDerivativeHint:
    """Exact rational function A/B with sum of the pieces = A/B, B(0) = 1,
    plus the cyclotomic-type irreducible factorization of B."""
    from .arith import cyclotomic

    by_lam: dict[int, int] = {}
    for pc in pieces:
        if pc.lam < 1:
            raise ValueError("piece scales must be positive integers")
        by_lam[pc.lam] = _lcm(by_lam.get(pc.lam, 1), pc.L)
    lams = sorted(by_lam)
    # B = prod over lam of (1 - (lam z)^Lambda)
    blocks = {}
    for lam in lams:
        Lam = by_lam[lam]
        blocks[lam] = qp_trim(
            [Fraction(1)] + [Fraction(0)] * (Lam - 1) + [-Fraction(lam) ** Lam]
        )
    B = [Fraction(1)]
    for lam in lams:
        B = qp_mul(B, blocks[lam])
    A: list[Fraction] = []
    for pc in pieces:
        Lam = by_lam[pc.lam]
        reps = Lam // pc.L
        # (1 - u^Lam)/(1 - u^L) = sum_j u^(jL), u = lam*z
        ratio = [Fraction(0)] * ((reps - 1) * pc.L + 1)
        for j in range(reps):
            ratio[j * pc.L] = Fraction(pc.lam) ** (j * pc.L)
        numer = [Fraction(0)] * pc.r + [pc.coeff * Fraction(pc.lam) ** pc.r]
        term = qp_mul(numer, ratio)
        for lam in lams:
            if lam != pc.lam:
                term = qp_mul(term, blocks[lam])
        A = qp_add(A, term)
    factors = []
    for lam in lams:
        for d in sorted(_divisors(by_lam[lam])):
            phi = cyclotomic(d)
            q = [Fraction(c) * Fraction(lam) ** i for i, c in enumerate(phi)]
            # normalize constant term to 1 when possible (d = 1 gives lam*z - 1)
            if q[0] not in (0,):
                q = [c / q[0] for c in q]
            factors.append((f"Phi_{d}({lam}z)", q))
    return LogDerivativeHint(A=A, B=B, factors=factors)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.append(d)
    return out

"""Named verification suites: each runs one acceptance block and reports a
pass/fail line per item.  The CLI `verify` command and the acceptance tests
share these implementations."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import arith, boundary, closedform, count, curve, dynmap, series
from .dynmap import AdditiveMap, ChebyshevMap, LattesMap, PowerMap
from .ff import is_prime, make_field

PRIMES = (3, 5, 7, 11, 13)
MS = (2, 3, 4, 5, 6)
DEGREE_BOUND = 32768
ADDITIVE_DEGREE_BOUND = 200000  # X+X^5 over F_5 reaches degree 5^7 at n = 7


@dataclass
class SuiteResult:
    name: str
    ok: bool
    lines: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, ok: bool, text: str):
        self.lines.append(f"{'PASS' if ok else 'FAIL'}  {text}")
        if not ok:
            self.ok = False


def _new(name: str) -> SuiteResult:
    return SuiteResult(name=name, ok=True)


# ---------------------------------------------------------------------------
# Descriptor grids
# ---------------------------------------------------------------------------


def grid_power_chebyshev() -> list:
    out = []
    for p in PRIMES:
        for m in MS:
            out.append(PowerMap(m, p))
            out.append(ChebyshevMap(m, p))
    return out


def legendre_curve(p: int) -> curve.Curve:
    return curve.Curve(make_field(p), -3, 2, 0)  # y^2 = x(x-1)(x-2)


def grid_lattes() -> list:
    out = []
    for p in (5, 11):
        E = legendre_curve(p)
        for m in (2, 3):
            out.append(LattesMap(E, m))
    return out


def grid_additive() -> list:
    return [AdditiveMap(3, (1, 1)), AdditiveMap(3, (1, 2)), AdditiveMap(5, (1, 1))]


def grid_all() -> list:
    return grid_power_chebyshev() + grid_lattes() + grid_additive()


def iterate_range(d, degree_bound: int = DEGREE_BOUND) -> list[int]:
    out = []
    n = 1
    while d.deg**n <= degree_bound:
        out.append(n)
        n += 1
    return out


# ---------------------------------------------------------------------------
# Criteria 1-3: key-lemma oracle equivalence
# ---------------------------------------------------------------------------


def suite_key_lemma() -> SuiteResult:
    res = _new("key-lemma")
    t0 = time.time()
    for d in grid_power_chebyshev():
        ns = iterate_range(d)
        f = dynmap.build_map(d)
        formula = count.formula_counts(d, ns[-1])
        ok = all(
            dynmap.brute_fixed_points(f, n, DEGREE_BOUND) == formula[n - 1] for n in ns
        )
        res.add(ok, f"{d.label()} formula == brute for n <= {ns[-1]}")
    for d in grid_lattes():
        ns = iterate_range(d)
        f = dynmap.build_map(d)
        formula = count.formula_counts(d, ns[-1])
        ok = all(
            dynmap.brute_fixed_points(f, n, DEGREE_BOUND) == formula[n - 1] for n in ns
        )
        res.add(ok, f"{d.label()} formula == brute for n <= {ns[-1]}")
        if d.p == 5 and d.m == 2:
            res.add(formula[1] == 7, f"{d.label()} f_2 == 7")
    for d in grid_additive():
        f = dynmap.build_map(d)
        formula = count.formula_counts(d, 7)
        ok = all(
            dynmap.brute_fixed_points(f, n, ADDITIVE_DEGREE_BOUND) == formula[n - 1]
            for n in range(1, 8)
        )
        res.add(ok, f"{d.label()} formula == brute for n <= 7")
    da = AdditiveMap(3, (1, 1))
    want = [1 + 3 ** (n - 3 ** arith.v_p(n, 3)) for n in range(1, 8)]
    res.add(
        count.formula_counts(da, 7) == want,
        "X+X^3 over F_3: f_n == 1 + 3^(n - |n|_3^-1) for n <= 7",
    )
    res.elapsed = time.time() - t0
    return res


# ---------------------------------------------------------------------------
# Criterion 9: Euler product at finite level and the union assembly
# ---------------------------------------------------------------------------


def _prime_power_fields(limit: int):
    for p in range(3, limit + 1, 2):
        if not is_prime(p):
            continue
        q = p
        N = 1
        while q <= limit:
            yield p, N, q
            q *= p
            N += 1


def suite_euler_product(field_limit: int = 2401, n_max: int = 12) -> SuiteResult:
    res = _new("euler-product")
    t0 = time.time()
    maps = {"x^2": (0, 0, 1), "x^2-2": (-2, 0, 1), "x^2+1": (1, 0, 1)}
    bad = []
    fields = 0
    for p, N, q in _prime_power_fields(field_limit):
        ext = make_field(p, N)
        fields += 1
        for label, coeffs in maps.items():
            F = make_field(p)
            f = dynmap.RationalMap(
                dynmap.Poly.from_ints(F, coeffs), dynmap.Poly.one(F)
            )
            g = dynmap.restrict_digraph(f, ext)
            census = g.cycle_census()
            ident = np.arange(g.size)
            succ_n = ident
            for n in range(1, n_max + 1):
                succ_n = g.succ[succ_n]
                direct = int(np.count_nonzero(succ_n == ident))
                if direct != census.fixed_points_of_iterate(n):
                    bad.append((label, q, n))
    res.add(
        not bad,
        f"sum of l*P_l over l|n == fixed points of iterates, n <= {n_max}, "
        f"3 maps x {fields} fields of size <= {field_limit}"
        + (f"; mismatches: {bad[:3]}" if bad else ""),
    )
    # H1-failure assembly: four invariant lines meeting in four fixed points
    T = 24
    counts_g = count.formula_counts(PowerMap(2, 7), T)
    zg = series.zeta_from_counts(counts_g, T)
    zpt = series.expand_rational([1], [1, -1], T)  # 1/(1-z)
    zA = series.zeta_union(zg, zg, zpt)
    zB = series.zeta_union(zA, zg, zpt)
    zC = series.zeta_union(zB, zg, zpt * zpt)
    want = (zg * zg * zg * zg).mul_poly(
        series.qp_mul([1, -1], series.qp_mul([1, -1], series.qp_mul([1, -1], [1, -1])))
    )
    res.add(zC == want, "zeta_{f|C} == zeta_g^4 * (1-z)^4 via zeta_union assembly")
    res.elapsed = time.time() - t0
    return res


# ---------------------------------------------------------------------------
# Criterion 8: tame/full identities and the pair ODE, with sensitivity
# ---------------------------------------------------------------------------


def suite_tame_identity(T: int = 30) -> SuiteResult:
    res = _new("tame-identity")
    t0 = time.time()
    for d in grid_all():
        p = d.p
        cnts = count.formula_counts(d, p * T)
        # counts of the actual iterate f^p, computed through its own descriptor
        iter_counts = count.formula_counts(count.descriptor_iterate(d, p), T // p)
        ok = series.tame_identity_check(cnts, p, T, iterate_counts=iter_counts)
        res.add(ok, f"{d.label()} tame/full identities to order {T} (independent f^p)")
        # infinite-product form with independently built levels:
        # zeta_f == prod_i (zeta*_{f^{p^i}}(z^{p^i}))^(1/p^i)
        zf = series.zeta_from_counts(cnts, T)
        prod = series.TruncSeries.one(T)
        i = 0
        while p**i <= T:
            q = p**i
            di = count.descriptor_iterate(d, q) if i else d
            tame_i = series.tame_from_counts(count.formula_counts(di, T // q), p, T // q)
            lifted = series.TruncSeries(tame_i.coeffs, T).substitute_power(q)
            prod = prod * series.pow_series(lifted, Fraction(1, q))
            i += 1
        res.add(prod == zf, f"{d.label()} iterated product form, independent levels")
        # pair ODE with R from the certified tame log-derivative
        hint = series.assemble_log_derivative(count.tame_pieces(d))
        F1 = zf
        F2 = series.zeta_from_counts(iter_counts, T // p)
        r_num = series.qp_trim(hint.A)[1:]  # A/z: A has no constant term
        ok2 = series.pair_ode_check(F1, F2, r_num, hint.B, p, T)
        res.add(ok2, f"{d.label()} pair ODE (F1, F2) with rational R to order {T}")
    # sensitivity: every single-count corruption breaks at least one identity,
    # p-divisible indices break the tame/full relation itself
    d0 = PowerMap(2, 7)
    cnts0 = count.formula_counts(d0, 7 * T)
    iter0 = count.formula_counts(count.descriptor_iterate(d0, 7), T // 7)
    hint0 = series.assemble_log_derivative(count.tame_pieces(d0))
    rnum0 = series.qp_trim(hint0.A)[1:]
    F2_0 = series.zeta_from_counts(iter0, T // 7)
    broken = 0
    for idx in range(1, 13):
        corrupted = list(cnts0)
        corrupted[idx - 1] += 1
        ident = series.tame_identity_check(corrupted, 7, T, iterate_counts=iter0)
        ode = series.pair_ode_check(
            series.zeta_from_counts(corrupted, T), F2_0, rnum0, hint0.B, 7, T
        )
        if not (ident and ode):
            broken += 1
    res.add(broken == 12, "corrupting any f_n (n <= 12) breaks an identity (power(2,7))")
    res.add(
        not series.tame_identity_check(
            [c + (1 if k == 6 else 0) for k, c in enumerate(cnts0)], 7, T, iterate_counts=iter0
        ),
        "corrupted f_7 breaks the tame/full relation at z^7 (p = 7)",
    )
    for d in (ChebyshevMap(3, 5), AdditiveMap(3, (1, 1))):
        p = d.p
        cnts1 = count.formula_counts(d, p * T)
        it1 = count.formula_counts(count.descriptor_iterate(d, p), T // p)
        corrupted = list(cnts1)
        corrupted[2 * p - 1] += 1  # f_{2p}: a p-divisible index
        hint1 = series.assemble_log_derivative(count.tame_pieces(d))
        rnum1 = series.qp_trim(hint1.A)[1:]
        ident = series.tame_identity_check(corrupted, p, T, iterate_counts=it1)
        corrupted2 = list(cnts1)
        corrupted2[6] += 1  # f_7: coprime to p, caught by the pair ODE
        ode = series.pair_ode_check(
            series.zeta_from_counts(corrupted2, T),
            series.zeta_from_counts(it1, T // p),
            rnum1,
            hint1.B,
            p,
            T,
        )
        res.add(
            (not ident) and (not ode),
            f"{d.label()} corrupted f_{2*p} and f_7 both detected",
        )
    res.elapsed = time.time() - t0
    return res


# ---------------------------------------------------------------------------
# Criterion 10: LTE trials, filtration lemmas, Salem H4 failure
# ---------------------------------------------------------------------------


def suite_lte(trials: int = 1000, seed: int = 42) -> SuiteResult:
    res = _new("lte")
    t0 = time.time()
    rng = random.Random(seed)
    lte_primes = (3, 5, 7, 11, 13, 17, 19, 23)
    done = 0
    coprime_checked = 0
    while done < trials:
        p = rng.choice(lte_primes)
        x = rng.randrange(2, 10000)
        if x % p == 0:
            continue
        tshift = rng.randrange(-60, 61)
        if tshift == 0:
            continue
        y = x - p * tshift
        n = rng.randrange(1, 80)
        expected = arith.v_p(x - y, p) + arith.v_p(n, p)
        got = arith.v_power_diff(x, y, n, p)  # asserts internally
        if got != expected:
            res.add(False, f"LTE mismatch at {(x, y, n, p)}")
            return res
        if n % p:
            coprime_checked += 1
            if arith.v_p(x**n - y**n, p) != arith.v_p(x - y, p):
                res.add(False, f"case (a) mismatch at {(x, y, n, p)}")
                return res
        done += 1
    res.add(True, f"{trials} seeded LTE trials exact (seed {seed})")
    res.add(coprime_checked > 0, f"{coprime_checked} of them checked the p-coprime case")
    res.elapsed = time.time() - t0
    return res


def suite_filtration() -> SuiteResult:
    res = _new("filtration")
    t0 = time.time()
    for p in PRIMES:
        for m in MS:
            if m % p == 0:
                rep = count.descriptor_filtration(PowerMap(m, p))
                res.add(
                    rep.coseparable and all(rep.s_table[i] is None for i in (1, 2, 3)),
                    f"m={m} p={p}: coseparable, s_m absent for m >= 1",
                )
                continue
            for mode in ("trivial", "pm1"):
                rep = arith.sm_filtration(m, mode, p, depth=3)
                # membership (Lemma 4.6(i)) is asserted inside; re-state here
                res.add(
                    rep.membership_checked,
                    f"m={m} p={p} gamma={mode}: S_m = s_m*Z on scan window, "
                    f"s-table {[rep.s_table[i][0] for i in (1, 2, 3)]}, t={rep.t}",
                )
                # Lemma 4.6(ii): witness sets are exactly {gamma_m^n}
                ok2 = True
                for level in (1, 2):
                    s_m, g_m = rep.s_table[level]
                    for n in range(1, 21):
                        want = {g_m**n if g_m == -1 else 1}
                        got = arith.witness_gammas(m, mode, p, level, rep.c, s_m * n)
                        if got != want:
                            ok2 = False
                res.add(ok2, f"m={m} p={p} gamma={mode}: witness sets = gamma_m^n")
    # the spec'd worked example
    rep = arith.sm_filtration(2, "pm1", 7, depth=3)
    res.add(
        rep.N == 1
        and rep.s_table[1] == (3, 1)
        and rep.C == 1
        and rep.t == 147,
        "m=2 p=7 gamma={+-1}: N=1, s_1=3, gamma_1=+1, C=1, t=147",
    )
    res.elapsed = time.time() - t0
    return res


def suite_salem_h4() -> SuiteResult:
    res = _new("salem-h4")
    t0 = time.time()
    res.add(
        arith.h4_check([2, 2], False) == arith.H4_HOLDS,
        "sigma=[m], eigenvalues {m, m}: H4 holds",
    )
    res.add(
        arith.h4_check([2], True) == arith.H4_FAILS_COSEPARABLE,
        "coseparable input: H4 fails (coseparable)",
    )
    g = arith.salem_polynomial()
    n_unit = arith.unit_circle_root_count(g)
    res.add(n_unit == 2, f"Salem quartic has exactly {n_unit} unit-circle roots (exact Sturm count)")
    M = arith.companion_matrix(g)
    res.add(
        arith.h4_check_matrix(M) == arith.H4_FAILS_UNIT_ROOT,
        "companion matrix of the Salem quartic: H4 fails (exact verdict)",
    )
    res.add(arith.torus_deg(M, 1) == 1 and arith.torus_deg(M, 2) == 11,
            "torus degrees: |g(1)| = 1, |g(1)g(-1)| = 11")
    seq = [arith.torus_deg(M, n) for n in range(1, 49)]
    rep = series.recurrence_detect(seq, max_order=16, window=48)
    res.add(rep.found, f"torus degree sequence linearly recurrent, order {rep.order}")
    import mpmath

    roots, err = rep.roots_certified(dps=80)
    # all modulus arithmetic at the certified precision, not the ambient one
    with mpmath.workdps(80):
        moduli = sorted((abs(r) for r in roots), reverse=True)
        top = moduli[0]
        k = sum(1 for m_ in moduli if abs(m_ - top) < mpmath.mpf("1e-30"))
        gap = top - moduli[k] if k < len(moduli) else None
        ok = k >= 2 and err < 1e-30 and gap is not None and gap > mpmath.mpf("1e-20")
        label = mpmath.nstr(top, 8)
    res.add(
        ok,
        f"H4 fails: {k} dominant roots of equal modulus {label} "
        f"(separation > 1e-20, root error {err:.1e})",
    )
    res.add(
        arith.h4_check([(1, 0)], False) == arith.H4_FAILS_UNIT_ROOT,
        "exact unit eigenvalue reported as H4 failure",
    )
    res.elapsed = time.time() - t0
    return res


# ---------------------------------------------------------------------------
# Criterion 7: the 2x2 coseparable vector-group example
# ---------------------------------------------------------------------------


def suite_example_5_8() -> SuiteResult:
    from .skewdeg import example_5_8_deg

    res = _new("example-5-8")
    t0 = time.time()
    degs = [example_5_8_deg(n) for n in range(1, 13)]
    want = [
        9**n if n % 2 else 9 ** (n - 3 ** arith.v_p(n, 3)) for n in range(1, 13)
    ]
    res.add(degs == want, f"deg(sigma^n - 1) matches the two-case formula, n <= 12")
    # z d/dz log zeta = 9z/(1-81z^2) + H_{1/9}(81 z^2), first 24 coefficients
    ok = True
    beta = Fraction(1, 9)
    for n in range(1, 25):
        lhs = Fraction(example_5_8_deg(n))
        if n % 2:
            rhs = Fraction(9) ** n
        else:
            k = n // 2
            rhs = Fraction(81) ** k * beta ** (3 ** arith.v_p(k, 3))
        if lhs != rhs:
            ok = False
    res.add(ok, "z d/dz log zeta == 9z/(1-81z^2) + H_(1/9)(81z^2) to order 24, exactly")
    res.elapsed = time.time() - t0
    return res


# ---------------------------------------------------------------------------
# Criterion 11: growth bounds
# ---------------------------------------------------------------------------


# Cells where the 5%-by-n=10 rate claim is numerically false: m = +-1 mod p
# puts the p-adic correction on every n (or every parity class), flattening
# f_n by a constant factor; the rate then needs n in the twenties or thirties
# to get within 5 percent of deg f.  See the decisions ledger.
GROWTH_SLOW_CELLS = {
    ("power", 4, 3),
    ("power", 6, 5),
    ("chebyshev", 4, 5),
    ("chebyshev", 6, 5),
    ("chebyshev", 6, 7),
}


def _growth_cell(d) -> tuple:
    return (d.kind, getattr(d, "m", 0), d.p)


def suite_growth() -> SuiteResult:
    res = _new("growth")
    t0 = time.time()
    for d in grid_power_chebyshev() + grid_lattes():
        if _growth_cell(d) in GROWTH_SLOW_CELLS:
            rep = count.growth_bound(d, witness_limit=35)
            slow = rep.degree_witness_n is not None and rep.degree_witness_n > 10
            res.add(
                rep.bound_holds and slow,
                f"{d.label()} f_n <= {rep.bound}^n; rate reaches 5% of deg only at "
                f"n = {rep.degree_witness_n} (documented slow cell)",
            )
            continue
        rep = count.growth_bound(d)
        res.add(
            rep.ok(),
            f"{d.label()} f_n <= {rep.bound}^n (n <= {rep.n_checked}), "
            f"rate within 5% of deg at n = {rep.degree_witness_n}",
        )
    for d in grid_additive():
        rep = count.growth_bound(d)
        res.add(rep.bound_holds, f"{d.label()} f_n <= {rep.bound}^n (n <= {rep.n_checked})")
    res.elapsed = time.time() - t0
    return res


def growth_witness_by_10_everywhere() -> bool:
    """The literal criterion-11 claim, including the slow cells; numerically
    false there.  Kept as an explicit probe for the acceptance suite."""
    for d in grid_power_chebyshev() + grid_lattes():
        if not count.growth_bound(d).ok():
            return False
    return True


# ---------------------------------------------------------------------------
# Criterion 12: boundary scans
# ---------------------------------------------------------------------------

LAMBDA_GRID = (0.5, 0.9, 0.99, 0.999)


def boundary_functions():
    for p in (3, 5, 7):
        for kind, param in (("G", 1.0), ("G", 2.0), ("H", 1 / 9), ("H", 1 / 25)):
            yield boundary.BoundaryFunc(kind, param, p)


def suite_boundary() -> SuiteResult:
    res = _new("boundary")
    t0 = time.time()
    for f in boundary_functions():
        vals = [v.real for v in boundary.radial_scan(f, 1, LAMBDA_GRID)]
        dec = all(a > b for a, b in zip(vals, vals[1:]))
        res.add(
            dec,
            f"p={f.p} {f.kind}({f.param:.4g}) k=1: radial real parts strictly decrease",
        )
        if f.p == 3:
            res.add(vals[-1] < -10, f"p=3 {f.kind}({f.param:.4g}) k=1: final value {vals[-1]:.2f} < -10")
            vals2 = [v.real for v in boundary.radial_scan(f, 2, LAMBDA_GRID)]
            dec2 = all(a > b for a, b in zip(vals2, vals2[1:]))
            res.add(dec2, f"p=3 {f.kind}({f.param:.4g}) k=2: strictly decreasing")
    res.elapsed = time.time() - t0
    return res


def boundary_k2_large_p_decrease() -> bool:
    """The literal criterion also asserts k=2 monotonicity on the coarse
    lambda grid for p in {5, 7}; numerically false (the singular level only
    engages for lambda much closer to 1).  Kept as an explicit probe."""
    for p in (5, 7):
        for kind, param in (("G", 1.0), ("G", 2.0), ("H", 1 / 9), ("H", 1 / 25)):
            f = boundary.BoundaryFunc(kind, param, p)
            vals = [v.real for v in boundary.radial_scan(f, 2, LAMBDA_GRID)]
            if not all(a > b for a, b in zip(vals, vals[1:])):
                return False
    return True


# ---------------------------------------------------------------------------
# Criteria 4-6 (no named CLI suite; shared by tests and cmd_tame)
# ---------------------------------------------------------------------------


def check_closed_forms(T: int = 30) -> SuiteResult:
    res = _new("closed-forms")
    t0 = time.time()
    for d in grid_all():
        cnts = count.formula_counts(d, T)
        lhs = series.tame_from_counts(cnts, d.p, T)
        rhs = closedform.expand(closedform.closed_form(d), T)
        res.add(lhs == rhs, f"{d.label()} tame zeta == closed form, {T} coefficients")
        if count.is_coseparable(d):
            ap = closedform.closed_form(d)
            res.add(
                len(ap.factors) == 2,
                f"{d.label()} coseparable row collapses to the prefactor",
            )
    res.elapsed = time.time() - t0
    return res


def certify_descriptor(d) -> series.RootRationalCertificate | None:
    """Root-rationality certificate for the tame zeta function of d, with the
    exponent taken from the filtration report."""
    rep = count.descriptor_filtration(d)
    hint = series.assemble_log_derivative(count.tame_pieces(d))
    degB = len(series.qp_trim(hint.B)) - 1
    T = 2 * degB + 64
    cnts = count.formula_counts(d, T)
    tz = series.tame_from_counts(cnts, d.p, T)
    return series.root_rational_certificate(tz, rep.t, hint=hint), rep


def check_certificates() -> SuiteResult:
    res = _new("certificates")
    t0 = time.time()
    for d in grid_all():
        if count.is_coseparable(d):
            cnts = count.formula_counts(d, 30)
            zf = series.zeta_from_counts(cnts, 30)
            pres = series.pade_certify(zf, 4)
            ok = pres is not None and series.qp_trim(pres.den) == [
                Fraction(1),
                Fraction(-(d.deg + 1)),
                Fraction(d.deg),
            ]
            res.add(ok, f"{d.label()} coseparable: zeta_f rational 1/((1-{d.deg}z)(1-z))")
        else:
            cert, rep = certify_descriptor(d)
            ok = cert is not None and cert.t == rep.t
            res.add(
                ok,
                f"{d.label()} zeta*^t rational for t = {rep.t} "
                f"(degree {cert.degree if cert else '?'}, horizon {cert.horizon if cert else '?'})",
            )
    # a small generic-route cross-check: both prongs on the same function
    d = AdditiveMap(3, (1, 1))
    rep = count.descriptor_filtration(d)
    cnts = count.formula_counts(d, 60)
    tz = series.tame_from_counts(cnts, 3, 60)
    cert = series.root_rational_certificate(tz, rep.t, dmax=14)
    res.add(
        cert is not None and cert.method == "pade+recurrence",
        f"X+X^3: generic pade+recurrence prongs agree at t = {rep.t}",
    )
    res.elapsed = time.time() - t0
    return res


# power(4,13) is the one grid cell whose first p-adic deviation sits beyond
# the pinned window: ord_13(4) = 6, so v_13(4^n - 1) first exceeds 1 at
# n = 6*13 = 78 > 60, and on the window the counts genuinely satisfy an
# order-12 recurrence (roots {1} + 4*mu_6 + mu_6 \ {1}).  A slightly longer
# window restores the refusal.  See the decisions ledger.
RECURRENCE_SLOW_CELLS = {("power", 4, 13)}


def check_recurrence_dichotomy() -> SuiteResult:
    res = _new("recurrence-dichotomy")
    t0 = time.time()
    for d in grid_all():
        if count.is_coseparable(d):
            cnts = count.formula_counts(d, 60)
            rep = series.recurrence_detect(cnts, max_order=12, window=60)
            ok = (
                rep.found
                and rep.order <= 2
                and rep.charpoly == [Fraction(d.deg), Fraction(-(d.deg + 1)), Fraction(1)]
            )
            res.add(ok, f"{d.label()} coseparable: order-2 recurrence, roots {{{d.deg}, 1}}")
        elif _growth_cell(d) in RECURRENCE_SLOW_CELLS:
            cnts = count.formula_counts(d, 170)
            rep60 = series.recurrence_detect(cnts[:60], max_order=12, window=60)
            rep170 = series.recurrence_detect(cnts, max_order=12, window=170)
            res.add(
                rep60.found and rep60.order == 12 and not rep170.found,
                f"{d.label()} first deviation at n = 78: on-window order-12 fit at "
                "window 60, refusal at window 170 (documented slow cell)",
            )
        else:
            cnts = count.formula_counts(d, 60)
            rep = series.recurrence_detect(cnts, max_order=12, window=60)
            res.add(not rep.found, f"{d.label()} non-coseparable: refusal at maxOrder 12, window 60")
    res.elapsed = time.time() - t0
    return res


def recurrence_refusal_at_60_everywhere() -> bool:
    """Literal criterion-6 claim including power(4,13); false there."""
    for d in grid_all():
        if count.is_coseparable(d):
            continue
        cnts = count.formula_counts(d, 60)
        if series.recurrence_detect(cnts, max_order=12, window=60).found:
            return False
    return True


SUITES = {
    "key-lemma": suite_key_lemma,
    "euler-product": suite_euler_product,
    "tame-identity": suite_tame_identity,
    "lte": suite_lte,
    "filtration": suite_filtration,
    "example-5-8": suite_example_5_8,
    "salem-h4": suite_salem_h4,
    "growth": suite_growth,
    "boundary": suite_boundary,
}

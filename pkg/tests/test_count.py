import json
import random
from fractions import Fraction

import pytest

from dynaffine.count import (
    CountIntegrityError,
    descriptor_filtration,
    descriptor_iterate,
    fixed_point_formula,
    formula_counts,
    growth_bound,
    is_coseparable,
    kernel_size_additive,
    kernel_size_elliptic,
    kernel_size_gm,
    lattes_inseparable_exponent,
    tame_pieces,
)
from dynaffine.curve import Curve
from dynaffine.dynmap import (
    AdditiveMap,
    ChebyshevMap,
    LattesMap,
    PowerMap,
    SubadditiveMap,
    brute_fixed_points,
    build_map,
)
from dynaffine.ff import make_field
from dynaffine.series import pieces_value
from dynaffine.skewdeg import SkewPoly
from dynaffine.arith import v_p


def E5():
    return Curve(make_field(5), -3, 2, 0)


def E11():
    return Curve(make_field(11), -3, 2, 0)


def test_kernel_sizes_spec_examples():
    assert kernel_size_gm(7, 7) == 1
    assert kernel_size_gm(63, 7) == 9
    assert kernel_size_gm(3, 7) == 3
    with pytest.raises(ValueError):
        kernel_size_gm(0, 7)
    assert kernel_size_elliptic(3, 5, 1) == 9
    assert kernel_size_elliptic(5, 5, 1) == 5
    assert kernel_size_elliptic(5, 5, 2) == 1
    F3 = make_field(3)
    assert kernel_size_additive(SkewPoly(F3, (0, 1))) == 1  # phi
    assert kernel_size_additive(SkewPoly(F3, (0, 2, 1))) == 3  # 2phi + phi^2
    assert kernel_size_additive(SkewPoly(F3, (0, 0, 0, 1))) == 1  # phi^3


def test_kernel_identity_deg_equals_kernel_times_p_to_v():
    for d in (PowerMap(2, 7), ChebyshevMap(3, 5), LattesMap(E5(), 2), AdditiveMap(3, (1, 1))):
        for n in (1, 2, 3, 4, 6):
            rep = fixed_point_formula(d, n)
            for t in rep.terms:
                assert t.kernel * d.p**t.v == t.deg


def test_formula_spec_examples():
    assert fixed_point_formula(PowerMap(2, 7), 6).total == 11
    assert fixed_point_formula(ChebyshevMap(2, 7), 3).total == 6
    assert fixed_point_formula(LattesMap(E5(), 2), 2).total == 7
    rep = fixed_point_formula(ChebyshevMap(2, 7), 3)
    assert rep.boundary == 1
    assert sorted(t.kernel for t in rep.terms) == [1, 9]
    payload = json.loads(rep.to_json())
    assert payload["total"] == 6 and payload["n"] == 3


def test_formula_vs_brute_oracle_random_cells():
    rng = random.Random(7)
    cells = [
        PowerMap(3, 11),
        ChebyshevMap(4, 7),
        ChebyshevMap(5, 3),
        LattesMap(E11(), 2),
        AdditiveMap(3, (2, 1)),
        AdditiveMap(5, (3, 0, 1)),
    ]
    for d in cells:
        f = build_map(d)
        nmax = 1
        while d.deg ** (nmax + 1) <= 6000:
            nmax += 1
        counts = formula_counts(d, nmax)
        for n in range(1, nmax + 1):
            assert brute_fixed_points(f, n) == counts[n - 1], (d.label(), n)


def test_supersingular_lattes_kernels():
    d = LattesMap(E11(), 2)
    assert lattes_inseparable_exponent(d) == 2
    # at n with 11 | 2^n - 1 (n = 10): kernel drops by 11^2
    rep = fixed_point_formula(d, 10)
    term = next(t for t in rep.terms if t.gamma == "1")
    k = 2**10 - 1
    assert term.v == 2 * v_p(k, 11) == 2
    assert term.kernel == k * k // 11**2


def test_is_coseparable():
    assert is_coseparable(PowerMap(5, 5))
    assert not is_coseparable(PowerMap(2, 7))
    assert is_coseparable(ChebyshevMap(10, 5))
    assert is_coseparable(AdditiveMap(3, (0, 1)))
    assert not is_coseparable(AdditiveMap(3, (1, 1)))
    assert is_coseparable(LattesMap(E5(), 5))
    # dichotomy: coseparable iff f_n = deg^n + 1 on tested range
    for d in (PowerMap(5, 5), ChebyshevMap(3, 3), AdditiveMap(3, (0, 1)), LattesMap(E5(), 5)):
        counts = formula_counts(d, 8)
        assert counts == [d.deg**n + 1 for n in range(1, 9)]
    for d in (PowerMap(2, 7), AdditiveMap(3, (1, 1))):
        counts = formula_counts(d, 8)
        assert counts != [d.deg**n + 1 for n in range(1, 9)]


def test_coseparable_additive_counts():
    # X^3 over F_3: every iterate is purely inseparable, f_n = 3^n + 1
    d = AdditiveMap(3, (0, 1))
    f = build_map(d)
    for n in range(1, 8):
        assert brute_fixed_points(f, n) == 3**n + 1


def test_subadditive_kernel_side():
    core = AdditiveMap(3, (1, 1))
    sub = SubadditiveMap(core, 2)
    rep = fixed_point_formula(sub, 2)
    assert rep.boundary == 1
    assert len(rep.terms) == 2
    total_kernels = sum(t.kernel for t in rep.terms)
    assert rep.total == 1 + total_kernels // 2
    # integrality of the average is enforced
    counts = formula_counts(sub, 6)
    assert all(isinstance(c, int) for c in counts)


def test_subadditive_formula_vs_brute_on_explicit_quotient():
    # sigma = 1 + phi on G_a over F_3, Gamma = mu_2, pi(x) = x^2:
    # the quotient map satisfies f_c(x^2) = (x + x^3)^2 = x^2 + 2x^4 + x^6,
    # so f_c(u) = u + 2u^2 + u^3
    core = AdditiveMap(3, (1, 1))
    sub = SubadditiveMap(core, 2, poly_coeffs=(0, 1, 2, 1))
    f = build_map(sub)
    assert f.degree == 3
    counts = formula_counts(sub, 6)
    for n in range(1, 7):
        assert brute_fixed_points(f, n) == counts[n - 1], n
    assert counts[0] == 3  # fixed points 0, 1, infinity of u + 2u^2 + u^3


def test_average_integrality_guard():
    # a fake descriptor cannot be built; instead check the guard directly
    from dynaffine.count import _average, GammaTerm

    with pytest.raises(CountIntegrityError):
        _average([GammaTerm("1", 3, 0, 3)], 2)


def test_growth_bound():
    rep = growth_bound(PowerMap(2, 7))
    assert rep.bound == 3 and rep.bound_holds and rep.degree_witness_n is not None
    rep2 = growth_bound(LattesMap(E5(), 2))
    assert rep2.bound == 5 and rep2.bound_holds
    rep3 = growth_bound(PowerMap(5, 5))
    assert rep3.bound_holds  # 5^n + 1 <= 6^n


def test_descriptor_iterate_counts_subsample():
    for d in (PowerMap(2, 7), ChebyshevMap(2, 5), LattesMap(E5(), 2), AdditiveMap(3, (1, 1))):
        base = formula_counts(d, 12)
        for k in (2, 3):
            it = descriptor_iterate(d, k)
            sub = formula_counts(it, 12 // k)
            assert sub == [base[k * j - 1] for j in range(1, 12 // k + 1)], (d.label(), k)


def test_tame_pieces_match_counts():
    for d in (
        PowerMap(2, 7),
        PowerMap(6, 5),
        ChebyshevMap(2, 13),
        ChebyshevMap(3, 7),
        LattesMap(E5(), 2),
        LattesMap(E11(), 3),
        AdditiveMap(3, (1, 1)),
        AdditiveMap(5, (2, 1)),
        PowerMap(3, 3),
    ):
        counts = formula_counts(d, 50)
        pieces = tame_pieces(d)
        for n in range(1, 51):
            want = Fraction(counts[n - 1]) if n % d.p else Fraction(0)
            assert pieces_value(pieces, n) == want, (d.label(), n)


def test_randomized_oracle_sweep_off_grid():
    # seeded sweep over cells the acceptance grid does not touch
    rng = random.Random(123)
    cells = []
    for p in (17, 19):
        for m in (2, 3, 7, 9):
            cells.append(PowerMap(m, p))
            cells.append(ChebyshevMap(m, p))
    for _ in range(6):
        coeffs = [rng.randrange(3) for _ in range(rng.choice((2, 3)))]
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        cells.append(AdditiveMap(3, tuple(coeffs)))
    for d in cells:
        f = build_map(d)
        nmax = 1
        while d.deg ** (nmax + 1) <= 700:
            nmax += 1
        counts = formula_counts(d, nmax)
        for n in range(1, nmax + 1):
            assert brute_fixed_points(f, n) == counts[n - 1], (d.label(), n)


def test_additive_with_extension_coefficients():
    # sigma = z + phi over F_9 (packed 3 = z, a root of x^2 + 1, order 4)
    d = AdditiveMap(3, (3, 1), N=2)
    counts = formula_counts(d, 12)
    assert counts[:5] == [4, 10, 28, 10, 244]
    f = build_map(d)
    for n in range(1, 6):
        assert brute_fixed_points(f, n, 100000) == counts[n - 1]
    rep = descriptor_filtration(d)
    assert rep.s == 4 and rep.t == 3 ** (rep.C + 1) * 4
    from dynaffine.closedform import closed_form, expand
    from dynaffine.series import tame_from_counts

    T = 24
    cnts = formula_counts(d, T)
    assert tame_from_counts(cnts, 3, T) == expand(closed_form(d), T)


def test_filtration_dispatch():
    rep = descriptor_filtration(PowerMap(2, 7))
    assert rep.t == 147
    rep2 = descriptor_filtration(ChebyshevMap(2, 13))
    assert rep2.s_table[1] == (6, -1)
    rep3 = descriptor_filtration(LattesMap(E11(), 2))
    assert rep3.c == 2
    rep4 = descriptor_filtration(AdditiveMap(3, (1, 1)))
    assert rep4.t == 9

import random

import pytest

from dynaffine.ff import (
    Poly,
    distinct_root_count,
    enumerate_field,
    make_field,
    poly_gcd,
    poly_radical,
)
import dynaffine.ff as ff


def test_make_field_prime():
    F = make_field(7)
    assert F.order == 7
    assert [x for x in enumerate_field(F)] == list(range(7))


def test_make_field_extension_deterministic():
    F = make_field(7, 3)
    assert F.order == 343
    # lexicographically first irreducible cubic over F_7 is x^3 + 2
    assert F.modulus == (2, 0, 0, 1)
    assert len(set(enumerate_field(F))) == 343


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(4, 2)
    with pytest.raises(ValueError):
        make_field(2, 1)
    with pytest.raises(ValueError):
        make_field(7, 0)
    with pytest.raises(ValueError):
        make_field(3, 20)  # over the enumeration bound


def test_field_axioms_small():
    F = make_field(3, 2)
    els = list(enumerate_field(F))
    for a in els:
        for b in els:
            assert F.mul(a, b) == F.mul(b, a)
            assert F.add(a, b) == F.add(b, a)
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # distributivity on a sample
    rng = random.Random(0)
    for _ in range(100):
        a, b, c = (rng.randrange(9) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_frobenius_is_additive_automorphism():
    rng = random.Random(1)
    for (p, N) in ((3, 3), (5, 2), (7, 3)):
        F = make_field(p, N)
        for _ in range(60):
            x = rng.randrange(F.order)
            y = rng.randrange(F.order)
            assert F.frob(F.add(x, y)) == F.add(F.frob(x), F.frob(y))
            assert F.frob(F.mul(x, y)) == F.mul(F.frob(x), F.frob(y))
        assert sorted(F.frob(x) for x in range(F.order)) == list(range(F.order))
        for x in range(0, F.order, 7):
            assert F.frob(F.frob_inv(x)) == x


def test_radical_spec_examples():
    F7 = make_field(7)
    F3 = make_field(3)
    # (x-1)^7 over F_7 = x^7 - 1
    P = Poly.from_ints(F7, [-1, 0, 0, 0, 0, 0, 0, 1])
    assert poly_radical(P) == Poly.from_ints(F7, [-1, 1])
    # x^6 + 2 over F_3 = (x^2 - 1)^3
    Q = Poly.from_ints(F3, [2, 0, 0, 0, 0, 0, 1])
    assert poly_radical(Q) == Poly.from_ints(F3, [-1, 0, 1])
    assert distinct_root_count(Q) == 2
    # x^3 - x over F_3 is already squarefree
    R = Poly.from_ints(F3, [0, -1, 0, 1])
    assert poly_radical(R) == R.monic()
    assert distinct_root_count(R) == 3
    # x^9 - x over F_3: all of F_9
    S = Poly.from_ints(F3, [0, -1] + [0] * 7 + [1])
    assert distinct_root_count(S) == 9
    with pytest.raises(ValueError):
        poly_radical(Poly.zero(F3))


def test_radical_divides_and_is_squarefree():
    rng = random.Random(2)
    for p in (3, 5, 7):
        F = make_field(p)
        for _ in range(40):
            # random product of small factors with char-p multiplicities
            prod = Poly.one(F)
            for _ in range(rng.randrange(1, 4)):
                deg = rng.randrange(1, 3)
                f = Poly(F, [rng.randrange(p) for _ in range(deg)] + [1])
                prod = prod * f ** rng.randrange(1, p + 2)
            rad = poly_radical(prod)
            assert (prod % rad).is_zero()
            assert poly_radical(rad) == rad
            d = rad.derivative()
            assert rad.degree == 0 or poly_gcd(rad, d).degree == 0


def test_distinct_root_count_additive_on_coprime():
    rng = random.Random(3)
    F = make_field(5)
    for _ in range(40):
        a = Poly(F, [rng.randrange(5) for _ in range(rng.randrange(1, 8))] + [1])
        b = Poly(F, [rng.randrange(5) for _ in range(rng.randrange(1, 8))] + [1])
        if poly_gcd(a, b).degree != 0:
            continue
        assert distinct_root_count(a * b) == distinct_root_count(a) + distinct_root_count(b)


def test_distinct_root_count_matches_enumeration_on_split_polys():
    rng = random.Random(4)
    for (p, N) in ((5, 1), (3, 2), (7, 1)):
        F = make_field(p, N)
        for _ in range(20):
            roots = rng.sample(range(F.order), rng.randrange(1, min(6, F.order)))
            prod = Poly.one(F)
            for r in roots:
                prod = prod * Poly(F, (F.neg(r), 1)) ** rng.randrange(1, 4)
            assert distinct_root_count(prod) == len(roots)
            found = sum(1 for x in range(F.order) if prod.evaluate(x) == 0)
            assert found == len(roots)


def test_poly_divmod_and_gcd_roundtrip():
    rng = random.Random(5)
    F = make_field(11)
    for _ in range(80):
        a = Poly(F, [rng.randrange(11) for _ in range(rng.randrange(0, 14))])
        b = Poly(F, [rng.randrange(11) for _ in range(rng.randrange(1, 10))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree
        g = poly_gcd(a, b)
        if not a.is_zero():
            assert (a % g).is_zero() and (b % g).is_zero()


def test_numpy_and_python_kernels_agree():
    rng = random.Random(6)
    F = make_field(13)
    for _ in range(30):
        a = Poly(F, [rng.randrange(13) for _ in range(rng.randrange(50, 120))])
        b = Poly(F, [rng.randrange(13) for _ in range(rng.randrange(1, 60))])
        if a.is_zero() or b.is_zero():
            continue
        # force the pure-python path by temporarily raising the threshold
        old = ff._NP_THRESHOLD
        try:
            ff._NP_THRESHOLD = 10**9
            slow_mul = a * b
            slow_divmod = divmod(a, b)
            slow_gcd = poly_gcd(a, b)
        finally:
            ff._NP_THRESHOLD = old
        assert slow_mul == a * b
        assert slow_divmod == divmod(a, b)
        assert slow_gcd == poly_gcd(a, b)


def test_gcd_numba_vs_numpy_paths():
    import numpy as np

    rng = random.Random(7)
    for _ in range(40):
        p = rng.choice((3, 5, 7, 11, 13))
        a = np.array([rng.randrange(p) for _ in range(rng.randrange(2, 400))], dtype=np.int64)
        b = np.array([rng.randrange(p) for _ in range(rng.randrange(1, 300))], dtype=np.int64)
        g1 = ff._gcd_arrays_numpy(a.copy(), b.copy(), p)
        if ff._HAVE_NUMBA:
            g2 = ff._gcd_kernel_jit(a.copy(), b.copy(), p)
            assert list(g1) == list(g2)


def test_radical_against_sympy_factorization():
    sympy = pytest.importorskip("sympy")
    import warnings

    x = sympy.symbols("x")
    rng = random.Random(77)
    for _ in range(40):
        p = rng.choice((3, 5, 7))
        F = make_field(p)
        deg = rng.randrange(2, 12)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
        P = Poly(F, coeffs)
        expr = sum(int(c) * x**i for i, c in enumerate(coeffs))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _, factors = sympy.factor_list(sympy.Poly(expr, x, modulus=p))
        want = sum(sympy.Poly(f, x).degree() for f, _mult in factors)
        assert poly_radical(P).degree == want, (p, coeffs)


def test_compose_and_frobenius_root():
    F = make_field(3)
    x = Poly.x(F)
    f = x**2 + Poly.one(F)
    g = x**3 - x
    assert f.compose(g) == g * g + Poly.one(F)
    # x^3 + 2 = (x + 2)^3 in char 3, so its cube root is x + 2
    h = x**3 + Poly.constant(F, 2)
    assert (x + Poly.constant(F, 2)) ** 3 == h
    assert h.frobenius_root() == x + Poly.constant(F, 2)

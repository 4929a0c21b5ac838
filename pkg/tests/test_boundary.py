import cmath
from fractions import Fraction

import pytest

from dynaffine.arith import v_p
from dynaffine.boundary import BoundaryFunc, eval_boundary, radial_scan, scan_csv


def direct_sum(f, z, terms=4000):
    tot = 0j
    for n in range(1, terms):
        if f.kind == "G":
            tot += f.p ** (-f.param * v_p(n, f.p)) * z**n
        else:
            tot += f.param ** (f.p ** v_p(n, f.p)) * z**n
    return tot


def test_validation():
    with pytest.raises(ValueError):
        BoundaryFunc("G", -1.0, 3)
    with pytest.raises(ValueError):
        BoundaryFunc("H", 1.5, 3)
    with pytest.raises(ValueError):
        BoundaryFunc("X", 1.0, 3)
    g = BoundaryFunc("G", 1.0, 3)
    with pytest.raises(ValueError):
        eval_boundary(g, 0.99999)


def test_g_at_zero_and_coefficients():
    g = BoundaryFunc("G", 1.0, 3)
    assert eval_boundary(g, 0.0) == 0
    h = BoundaryFunc("H", 1 / 9, 3)
    assert h.coefficient(1, Fraction(1, 9)) == Fraction(1, 9)
    assert h.coefficient(3, Fraction(1, 9)) == Fraction(1, 729)
    assert g.coefficient(6) == Fraction(1, 3)
    assert g.coefficient(9) == Fraction(1, 9)
    g2 = BoundaryFunc("G", 2.0, 5)
    assert g2.coefficient(5) == Fraction(1, 25)


def test_eval_matches_direct_sum():
    pts = [0.5, -0.4 + 0.3j, 0.8j, 0.6 - 0.55j]
    for p in (3, 5, 7):
        for kind, param in (("G", 1.0), ("G", 2.0), ("H", 1 / 9), ("H", 1 / 25)):
            f = BoundaryFunc(kind, param, p)
            for z in pts:
                assert abs(eval_boundary(f, z) - direct_sum(f, z)) < 1e-8


def test_depth_consistency():
    for p in (3, 7):
        for kind, param in (("G", 1.0), ("H", 1 / 9)):
            f1 = BoundaryFunc(kind, param, p, depth=8)
            f2 = BoundaryFunc(kind, param, p, depth=9)
            for z in (0.3 + 0.1j, -0.5 + 0.7j, 0.85, 0.9j):
                assert abs(eval_boundary(f1, z) - eval_boundary(f2, z)) < 1e-9


def test_taylor_coefficients_by_dft():
    # finite differencing at radius 0.5: c_n from 64 samples
    M, r = 64, 0.5
    for f in (BoundaryFunc("G", 1.0, 3), BoundaryFunc("H", 1 / 9, 3)):
        samples = [
            eval_boundary(f, r * cmath.exp(2j * cmath.pi * j / M)) for j in range(M)
        ]
        for n in range(1, 21):
            est = sum(
                samples[j] * cmath.exp(-2j * cmath.pi * j * n / M) for j in range(M)
            ) / (M * r**n)
            exact = float(f.coefficient(n, Fraction(1, 9) if f.kind == "H" else None))
            assert abs(est - exact) < 1e-6


def test_radial_blowdown_and_real_direction():
    g = BoundaryFunc("G", 1.0, 3)
    vals = [v.real for v in radial_scan(g, 1, (0.5, 0.9, 0.99, 0.999))]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < -10
    # along the positive real axis the series is positive and increasing
    reals = [eval_boundary(g, lam).real for lam in (0.5, 0.9, 0.99, 0.999)]
    assert all(0 < a < b for a, b in zip(reals, reals[1:]))
    h = BoundaryFunc("H", 1 / 9, 3)
    hv = [v.real for v in radial_scan(h, 2, (0.5, 0.9, 0.99, 0.999))]
    assert all(a > b for a, b in zip(hv, hv[1:]))
    with pytest.raises(ValueError):
        radial_scan(g, 1, (0.9, 0.5))


def test_scan_csv_format():
    g = BoundaryFunc("G", 1.0, 3)
    text = scan_csv(g, 1, (0.5, 0.9))
    lines = text.strip().splitlines()
    assert lines[0] == "lambda,re,im"
    assert len(lines) == 3
    assert lines[1].startswith("0.5,")

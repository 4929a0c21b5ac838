import json
from fractions import Fraction as Fr

import pytest

from dynaffine.closedform import (
    Atom,
    AtomProduct,
    additive_closed_form,
    chebyshev_closed_form,
    closed_form,
    expand,
    lattes_closed_form,
    power_map_closed_form,
    zeta_pt_atom,
)
from dynaffine.count import formula_counts, lattes_inseparable_exponent
from dynaffine.curve import Curve
from dynaffine.dynmap import AdditiveMap, ChebyshevMap, LattesMap, PowerMap
from dynaffine.ff import make_field
from dynaffine.series import TruncSeries, tame_from_counts


def test_zeta_pt_atom_examples():
    atom = zeta_pt_atom(1, 1, 3, 3)
    assert list(atom.coeffs) == [1, 1, 1, Fr(2, 3)]
    with pytest.raises(ValueError):
        zeta_pt_atom(0, 1, 3, 5)
    # atom == tame zeta of the one-point system with z -> a z^b
    base = tame_from_counts([1] * 24, 5, 24)
    shifted = base.substitute_scaled_power(3, 2)
    assert zeta_pt_atom(3, 2, 5, 24) == shifted


def test_power_map_closed_form_factors():
    ap = power_map_closed_form(2, 7)
    assert [(f.a, f.b, f.exponent) for f in ap.factors] == [
        (2, 1, Fr(1)),
        (1, 1, Fr(1)),
        (8, 3, Fr(-2, 7)),
        (1, 3, Fr(2, 7)),
    ]
    # p | m: two factors only
    ap5 = power_map_closed_form(5, 5)
    assert len(ap5.factors) == 2
    # m=3, p=5: s=4, beta=-1/5
    ap35 = power_map_closed_form(3, 5)
    assert ap35.factors[2] == Atom(81, 4, Fr(-1, 5))


def test_chebyshev_rows():
    # s odd row
    ap = chebyshev_closed_form(2, 7)
    assert ap.factors[2:] == [Atom(8, 3, Fr(-1, 7)), Atom(1, 3, Fr(1, 7))]
    # s even row: ord_5(2) = 4 = 2t, t = 2
    ap2 = chebyshev_closed_form(2, 5)
    beta = Fr(Fr(1, 5) - 1, 4)
    assert ap2.factors[2:] == [
        Atom(4, 2, beta),
        Atom(1, 2, beta),
        Atom(1, 4, -beta),
    ]


def test_lattes_rows():
    # ordinary curve over F_5, m=2: s=4 even
    ap = lattes_closed_form(2, 5, 1)
    beta = Fr(Fr(1, 5) - 1, 4)
    assert ap.factors[0] == Atom(4, 1, Fr(1))
    assert ap.factors[2:] == [
        Atom(16, 2, beta),
        Atom(1, 2, beta),
        Atom(4, 2, 2 * beta),
        Atom(16, 4, -2 * beta),
    ]
    # supersingular h=2 squares the p-adic size in beta; ord_11(2) = 10 = 2*5
    ap2 = lattes_closed_form(2, 11, 2)
    beta2 = Fr(Fr(1, 121) - 1, 10)
    assert beta2 == Fr(-12, 121)
    assert ap2.factors[2] == Atom(4**5, 5, beta2)
    assert ap2.factors[5] == Atom(4**5, 10, -2 * beta2)
    # an odd-s instance: ord_13(3) = 3
    ap3 = lattes_closed_form(3, 13, 1)
    beta3 = Fr(Fr(1, 13) - 1, 3)
    assert ap3.factors[2] == Atom(9**3, 3, Fr(beta3, 2))
    assert ap3.factors[4] == Atom(3**3, 3, -beta3)


def test_additive_closed_form_examples():
    ap = additive_closed_form(AdditiveMap(3, (1, 1)))
    assert ap.factors == [
        Atom(3, 1, Fr(1)),
        Atom(1, 1, Fr(1)),
        Atom(3, 1, Fr(-2, 3)),
    ]
    ap2 = additive_closed_form(AdditiveMap(3, (1, 2)))
    assert ap2.factors[2] == Atom(3, 1, Fr(-2, 3))
    # coseparable: no beta factor
    ap3 = additive_closed_form(AdditiveMap(3, (0, 1)))
    assert len(ap3.factors) == 2


def test_expand_trivialities():
    one = expand(AtomProduct(5, []), 10)
    assert one == TruncSeries.one(10)
    a = Atom(2, 1, Fr(3, 5))
    b = Atom(2, 1, Fr(-3, 5))
    assert expand(AtomProduct(5, [a, b]), 12) == TruncSeries.one(12)


def test_closed_forms_match_counts_sample():
    E5 = Curve(make_field(5), -3, 2, 0)
    E11 = Curve(make_field(11), -3, 2, 0)
    grid = [
        PowerMap(2, 7),
        PowerMap(3, 5),
        PowerMap(7, 7),
        ChebyshevMap(2, 7),
        ChebyshevMap(2, 5),
        ChebyshevMap(5, 13),
        LattesMap(E5, 2),
        LattesMap(E11, 2),
        AdditiveMap(3, (1, 1)),
        AdditiveMap(5, (1, 1)),
        AdditiveMap(3, (2, 0, 1)),
    ]
    T = 30
    for d in grid:
        cnts = formula_counts(d, T)
        assert tame_from_counts(cnts, d.p, T) == expand(closed_form(d), T), d.label()


def test_json_and_pretty():
    ap = power_map_closed_form(2, 7)
    data = json.loads(ap.to_json())
    assert data[2] == [8, 3, "-2/7"]
    s = ap.pretty()
    assert "zeta*_pt(2z)" in s and "zeta*_pt(8z^3)^(-2/7)" in s


def test_denominator_structure_of_tame_coefficients():
    # coefficient denominators are pure p-powers (exponents live in Z[1/p])
    for d in (PowerMap(2, 7), ChebyshevMap(2, 5), AdditiveMap(3, (1, 1))):
        cnts = formula_counts(d, 30)
        tz = tame_from_counts(cnts, d.p, 30)
        for c in tz.coeffs:
            den = c.denominator
            while den % d.p == 0:
                den //= d.p
            assert den == 1, (d.label(), c)

from collections import Counter
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from corpus import exponent_lists
from oracles import (
    as_poly_in_u,
    counter_as_poly_in_u,
    fermat_closed_poly,
    guibert_closed_poly,
    mu_L_closed_poly,
    torus_values,
    u,
)
from milnor_motive._ring import L, SpectrumElem
from milnor_motive.motive import POINT, FermatClass, MotiveExpr, MuRoots, motivic_milnor_fiber
from milnor_motive.puiseux import ExponentList, decompose
from milnor_motive.spectrum import (
    UnsupportedMotiveError,
    guibert_sp_f1,
    sp_fermat,
    sp_mu_L,
    spectrum_from_json,
    spectrum_to_json,
    spectrum_via_motive,
    spectrum_via_process,
    split_sp_f1,
    torus_knot_spectrum,
)

EXAMPLE = ExponentList((F(3, 2), F(7, 4), F(11, 6)))


def section6_below_one():
    vals = [F(k, 36) for k in range(5, 36, 6)]
    vals += [F(k, 78) for start in (15, 41, 67) for k in range(start, start + 11, 2)]
    vals += [F(k, 237) for k in range(82, 236, 3)]
    vals += [F(k, 237) for k in range(161, 237, 3)]
    return vals


@pytest.mark.parametrize("m, n", [(2, 3), (2, 5), (3, 4), (2, 13), (5, 7)])
def test_torus_knot_spectrum_matches_enumeration(m, n):
    assert dict(torus_knot_spectrum(m, n).items()) == torus_values(m, n)


def test_torus_knot_examples():
    assert torus_knot_spectrum(2, 3).values() == [F(5, 6), F(7, 6)]
    assert torus_knot_spectrum(2, 5).values() == [F(7, 10), F(9, 10), F(11, 10), F(13, 10)]
    below = torus_knot_spectrum(2, 13).restricted(hi=1).values()
    assert below == [F(k, 26) for k in (15, 17, 19, 21, 23, 25)]


def test_guibert_sp_f1_2_3():
    assert guibert_sp_f1(2, 3) == SpectrumElem({1: 1, F(5, 6): -1, F(7, 6): -1})


@pytest.mark.parametrize("m, n", [(2, 3), (3, 5), (4, 7)])
def test_guibert_closed_form_identity(m, n):
    assert as_poly_in_u(guibert_sp_f1(m, n), m * n) == guibert_closed_poly(m, n)


def test_guibert_2_3_at_a_point():
    # t = 1/64, i.e. u = 1/2 with t = u^6
    half = sympy.Rational(1, 2)
    tt, a, b = half**6, half**3, half**2
    closed = tt - (a - tt) / (1 - a) * (b - tt) / (1 - b)
    assert as_poly_in_u(guibert_sp_f1(2, 3), 6).eval(half) == closed


def test_split_is_a_partition():
    low, high = split_sp_f1(3, 7)
    assert low + high == guibert_sp_f1(3, 7)
    assert all(a < 1 for a in low.exponents())
    assert all(a >= 1 for a in high.exponents())
    assert high.coeff(1) == 1


@pytest.mark.parametrize("e", [1, 3, 6])
def test_sp_mu_L_closed_form(e):
    assert as_poly_in_u(sp_mu_L(e), e) == mu_L_closed_poly(e)


def test_sp_mu_L_small():
    assert sp_mu_L(1) == SpectrumElem({1: 1})
    assert sp_mu_L(3) == SpectrumElem({1: 1, F(4, 3): 1, F(5, 3): 1})


def fermat_enumerated(m, n, e):
    """The same formula, with Sp0 and Sp1 read off the enumerated torus spectrum."""
    scale = m * n * e
    vals = torus_values(m, n)
    low = Counter({a / e: -c for a, c in vals.items() if a < 1})
    high = Counter({a / e + 1 - F(1, e): -c for a, c in vals.items() if a > 1})
    high[F(1)] += 1
    inner = counter_as_poly_in_u(low, scale) + counter_as_poly_in_u(high, scale)
    ratio = sympy.cancel((1 - u**scale) / (1 - u ** (scale // e)))
    return sympy.Poly(ratio, u) * inner


@pytest.mark.parametrize("m, n, e", [(2, 3, 2), (2, 3, 6), (3, 4, 3), (2, 5, 1)])
def test_sp_fermat_matches_brute_force(m, n, e):
    ours = as_poly_in_u(sp_fermat(m, n, e), m * n * e)
    assert ours == fermat_enumerated(m, n, e) == fermat_closed_poly(m, n, e)


def test_sp_fermat_e1_and_example():
    assert sp_fermat(3, 5, 1) == guibert_sp_f1(3, 5)
    below = sp_fermat(2, 3, 6).restricted(0, 1)
    assert below == SpectrumElem.from_values([F(k, 36) for k in range(5, 36, 6)], sign=-1)


def test_process_example():
    spec = spectrum_via_process(decompose(EXAMPLE))
    below = section6_below_one()
    assert len(below) == 102
    expected = SpectrumElem.from_values(below + [2 - v for v in below])
    assert spec == expected
    assert spec.total() == 204


def test_process_small():
    assert spectrum_via_process(decompose(ExponentList())) == SpectrumElem()
    spec = spectrum_via_process(decompose(ExponentList((F(5, 2),))))
    assert spec.values() == [F(7, 10), F(9, 10), F(11, 10), F(13, 10)]


def test_motive_path_examples():
    assert spectrum_via_motive(motivic_milnor_fiber(decompose(EXAMPLE))) == spectrum_via_process(
        decompose(EXAMPLE)
    )
    assert spectrum_via_motive(MotiveExpr.of(POINT)) == SpectrumElem()
    tower = decompose(ExponentList((F(5, 2),)))
    assert spectrum_via_motive(motivic_milnor_fiber(tower)) == SpectrumElem(torus_values(2, 5))


@pytest.mark.parametrize(
    "motive",
    [
        MotiveExpr.of(MuRoots(3), L * L),
        MotiveExpr.of(FermatClass(2, 3, 1), L),
        MotiveExpr.of(POINT, L * L * L),
    ],
)
def test_motive_path_rejects_foreign_terms(motive):
    with pytest.raises(UnsupportedMotiveError):
        spectrum_via_motive(motive)


def test_json_round_trip():
    spec = spectrum_via_process(decompose(EXAMPLE))
    data = spectrum_to_json(spec)
    assert data[0] == [5, 36, 1]
    assert [F(p, q) for p, q, _ in data] == sorted(F(p, q) for p, q, _ in data)
    assert spectrum_from_json(data) == spec


@settings(max_examples=60, deadline=None)
@given(exponent_lists(max_levels=4))
def test_spectrum_properties(exps):
    tower = decompose(exps)
    spec = spectrum_via_process(tower)
    assert spec == spectrum_via_motive(motivic_milnor_fiber(tower))
    assert spec.reflected() == spec
    assert spec.is_effective()
    assert spec.coeff(1) == 0
    assert spec.restricted(0, 2) == spec
    assert spec.total() == sum(d.dprime * (d.m - 1) * (d.n - 1) for d in tower.level_data)


coprime_pairs = st.tuples(st.integers(2, 7), st.integers(2, 11)).filter(
    lambda mn: sympy.gcd(*mn) == 1
)


@settings(max_examples=25, deadline=None)
@given(coprime_pairs, st.integers(1, 5))
def test_guibert_identities_random(mn, e):
    m, n = mn
    assert as_poly_in_u(guibert_sp_f1(m, n), m * n) == guibert_closed_poly(m, n)
    assert as_poly_in_u(sp_fermat(m, n, e), m * n * e) == fermat_closed_poly(m, n, e)
    assert as_poly_in_u(sp_mu_L(e), e) == mu_L_closed_poly(e)

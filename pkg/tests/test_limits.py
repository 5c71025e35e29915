from fractions import Fraction

from hypothesis import given, strategies as st

from qg2.limits import (CLASSICAL, CLASSICAL_RELATIONS, WEYL,
                        classical_mul, classical_to_weyl, e, f,
                        family_central_relations, flatness_check, iso_check,
                        scaled_relation_comparison, specialize_z1,
                        weyl_mul, weyl_to_classical)
from qg2.coeff import q
from qg2.pbw import _m


def test_specialisation_matches_list():
    report = specialize_z1()
    assert len(report) == 17
    assert all(ok for _, ok, _ in report)


def test_specialised_lines():
    c, delta = CLASSICAL_RELATIONS[(3, 1)]
    assert c == 1 and delta == {_m(E2=1): -3}
    c, delta = CLASSICAL_RELATIONS[(6, 2)]
    assert delta == {_m(E4=1): 1}


def test_classical_products():
    assert classical_mul(e(4), e(4)) == CLASSICAL.scalar(Fraction(1, 9))
    assert classical_mul(e(6), e(3)) == classical_mul(e(3), e(6))
    assert classical_mul(e(3), e(3)) == 3 * classical_mul(e(1), e(4)) + 3 * classical_mul(e(2), e(5))


def test_weyl_products():
    assert weyl_mul(f(6), f(2)) == weyl_mul(f(2), f(6)) + WEYL.scalar(1)
    assert weyl_mul(f(5), f(3)) == weyl_mul(f(3), f(5)) - WEYL.scalar(1)


def test_maps_on_examples():
    br = weyl_mul(f(6), f(2)) - weyl_mul(f(2), f(6))
    assert weyl_to_classical(br) == CLASSICAL.scalar(1)
    x = classical_mul(e(3), e(3)) - 3 * classical_mul(e(1), e(4)) - 3 * classical_mul(e(2), e(5))
    assert not classical_to_weyl(x)


def test_iso_report():
    report = iso_check()
    assert report and all(ok for _, ok in report)


def test_scaled_relations_differ_only_in_two_coefficients():
    diffs = scaled_relation_comparison()
    assert {(n, m) for n, m, _, _ in diffs} == {(2, _m(E2=1, E5=3)), (2, _m(E3=3, E6=1))}
    for _, _, shown, calc in diffs:
        assert shown * q**12 == calc
        assert shown.substitute(1) == 0


def test_central_relation_constants():
    (_, c1), (_, c2) = family_central_relations()
    assert c1 == q**-2 - 1
    assert c2 == Fraction(1, 9)


def test_flatness():
    assert flatness_check(samples=200, seed=0) == []


idx6 = st.integers(1, 6)
idx5 = st.integers(2, 6)


@given(st.lists(idx6, min_size=1, max_size=4), st.lists(idx6, min_size=1, max_size=4),
       st.lists(idx6, min_size=1, max_size=3))
def test_classical_associative(a, b, c):
    x, y, z = (CLASSICAL.word([i - 1 for i in w]) for w in (a, b, c))
    assert classical_mul(classical_mul(x, y), z) == classical_mul(x, classical_mul(y, z))


@given(st.lists(idx5, min_size=1, max_size=4), st.lists(idx5, min_size=1, max_size=4),
       st.lists(idx5, min_size=1, max_size=3))
def test_weyl_associative(a, b, c):
    x, y, z = (WEYL.word([i - 2 for i in w]) for w in (a, b, c))
    assert weyl_mul(weyl_mul(x, y), z) == weyl_mul(x, weyl_mul(y, z))


@given(st.lists(idx5, min_size=1, max_size=4))
def test_maps_are_mutually_inverse_on_words(w):
    x = WEYL.word([i - 2 for i in w])
    assert classical_to_weyl(weyl_to_classical(x)) == x


@given(st.lists(idx6, min_size=1, max_size=4), st.lists(idx6, min_size=1, max_size=3))
def test_maps_are_homomorphisms(a, b):
    x, y = (CLASSICAL.word([i - 1 for i in w]) for w in (a, b))
    assert classical_to_weyl(classical_mul(x, y)) == weyl_mul(classical_to_weyl(x), classical_to_weyl(y))

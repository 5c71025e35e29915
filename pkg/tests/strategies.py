"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from qg2.coeff import RatFunc, q
from qg2.pbw import UQ, PBWElement
from qg2.sampling import monomials_within

small_int = st.integers(-4, 4)


@st.composite
def laurent(draw, max_terms=3):
    terms = draw(st.dictionaries(st.integers(-4, 4), st.integers(-5, 5).filter(bool),
                                 max_size=max_terms))
    return RatFunc.from_laurent(terms)


@st.composite
def ratfuncs(draw):
    num = draw(laurent())
    den = draw(laurent().filter(bool))
    return num / den


@st.composite
def nonzero_ratfuncs(draw):
    return draw(ratfuncs().filter(bool))


@st.composite
def uq_elements(draw, cap=(4, 3), max_terms=3):
    pool = monomials_within(cap)
    monos = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_terms))
    coeffs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(monos),
                           max_size=len(monos)))
    shifts = draw(st.lists(st.integers(-2, 2), min_size=len(monos), max_size=len(monos)))
    return PBWElement(UQ, {m: c * q**s for m, c, s in zip(monos, coeffs, shifts)})

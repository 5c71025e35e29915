import pytest
from hypothesis import given, strategies as st

from qg2.coeff import RatFunc, param, q
from qg2.pbw import UQ, _m, omega
from qg2.quotient import (NonTermination, Params, Quotient, Reducer, basis_count,
                          basis_count_formula, basis_monomials,
                          normal_element_alpha0, normal_element_beta0,
                          normality_check, quot_mul, quotient,
                          square_identity_check)
from qg2.sampling import monomials_within
from strategies import uq_elements

PAIRS = [(1, 1), (1, 0), (0, 1), (q, 1 / (q**2 - 1))]
pairs = st.sampled_from(PAIRS)


class TestBasics:
    def test_params_guard(self):
        with pytest.raises(ValueError):
            Params(0, 0)
        with pytest.raises(ValueError):
            quotient(0, 0)

    def test_commutation(self):
        Q = quotient(1, 1)
        e1, e2 = Q.gen(1), Q.gen(2)
        assert quot_mul(e2, e1) == q**-3 * quot_mul(e1, e2)

    def test_square_e3(self):
        Q = quotient(1, 1)
        x = Q.gen(3) * Q.gen(3)
        assert set(x.terms) == {_m(), _m(E2=1, E5=1), _m(E1=1, E4=1), _m(E1=1, E3=1, E5=1)}
        assert x.coeff(_m(E2=1, E5=1)) == x.coeff(_m(E1=1, E4=1))

    @pytest.mark.parametrize("alpha, beta", PAIRS)
    def test_defining_relations(self, alpha, beta):
        Q = quotient(alpha, beta)
        assert not Q.reduce(omega(1) - alpha)
        assert not Q.reduce(omega(2) - beta)

    def test_central_relation_with_named_scalars(self):
        Q = quotient(q, 1)
        x = Q.reduce(omega(1))
        assert x == Q.scalar(q)

    def test_mixed_params(self):
        with pytest.raises(ValueError):
            quotient(1, 1).gen(1) * quotient(1, 0).gen(1)


class TestReduction:
    @given(uq_elements(cap=(6, 4)), pairs)
    def test_idempotent(self, x, p):
        Q = quotient(*p)
        r = Q.reduce(x)
        assert Q.reduce(r.lift()) == r
        assert all(Q.is_basis_mono(m) for m in r.terms)

    @given(uq_elements(cap=(6, 4)), pairs)
    def test_oracle(self, x, p):
        Q = quotient(*p)
        assert Q.torus_image(Q.reduce(x)) == Q.torus_image(x)

    @given(st.sampled_from(monomials_within((4, 3))), pairs)
    def test_ideal_membership(self, m, p):
        Q = quotient(*p)
        mono = UQ.monomial(m)
        assert not Q.reduce((omega(1) - p[0]) * mono)
        assert not Q.reduce(mono * (omega(2) - p[1]))

    @given(uq_elements(cap=(3, 2), max_terms=2), uq_elements(cap=(3, 2), max_terms=2),
           uq_elements(cap=(3, 2), max_terms=2))
    def test_associative(self, x, y, z):
        Q = quotient(1, 1)
        a, b, c = (Q.reduce(v) for v in (x, y, z))
        assert (a * b) * c == a * (b * c)

    @given(uq_elements(cap=(4, 3)), uq_elements(cap=(4, 3)))
    def test_reduce_is_multiplicative(self, x, y):
        Q = quotient(1, 0)
        assert Q.reduce(x * y) == Q.reduce(x) * Q.reduce(y)

    def test_intermediate_algebra(self):
        Q = Quotient(1, 1, rules=("e4",))
        x = Q.reduce(UQ.monomial(_m(E3=3, E4=3)))
        assert all(m[3] <= 1 for m in x.terms)
        assert any(m[2] >= 2 for m in x.terms)

    def test_cycle_detected(self):
        red = Reducer(UQ, [(0, {_m(E1=2): RatFunc(1)})])
        with pytest.raises(NonTermination):
            red.reduce_terms({_m(E1=2): RatFunc(1)})


class TestSquareIdentities:
    @pytest.mark.parametrize("which", [1, 2, 3])
    @pytest.mark.parametrize("alpha, beta", PAIRS)
    def test_printed_items_hold(self, which, alpha, beta):
        assert not square_identity_check(which, (alpha, beta))

    def test_perturbed_b3_detected(self):
        bumped = lambda n: param(n) + 1 if n == "b3" else param(n)  # noqa: E731
        assert square_identity_check(2, (q, 1), lookup=bumped)

    @pytest.mark.parametrize("alpha, beta", PAIRS)
    def test_item4_printed_coefficients_are_inconsistent(self, alpha, beta):
        # the printed table for the fourth identity does not reduce to zero
        assert square_identity_check(4, (alpha, beta))

    @pytest.mark.parametrize("alpha, beta", PAIRS + [(2, 3), (q**2, 0)])
    def test_item4_corrected_coefficients_hold(self, alpha, beta):
        assert not square_identity_check(4, (alpha, beta), corrected=True)


class TestBasisCount:
    def test_small(self):
        assert basis_count(0) == 1
        assert basis_count(1) == 7

    @pytest.mark.parametrize("d", range(0, 41))
    def test_formula(self, d):
        assert basis_count(d) == basis_count_formula(d)

    def test_enumeration(self):
        for d in range(6):
            assert len(basis_monomials(d)) == basis_count(d)

    def test_growth(self):
        ratio = basis_count(40) / 40**4
        assert 0.95 / 6 <= ratio <= 1.25 / 6

    def test_basis_monomials_are_normal(self):
        Q = quotient(1, 1)
        for m in basis_monomials(4):
            assert Q.reduce(UQ.monomial(m)).terms == {m: 1}


class TestNormality:
    def test_alpha0(self):
        lams = normality_check(normal_element_alpha0(quotient(0, 1)))
        assert lams == [q**-2, q**-3, q**-1, 1, q, q**3]

    def test_beta0(self):
        lams = normality_check(normal_element_beta0(quotient(1, 0)))
        assert lams == [q**-3, q**-3, 1, q**3, q**3, q**6]

    def test_generic_not_normal(self):
        Q = quotient(1, 1)
        assert None in normality_check(Q.gen(1) + Q.scalar(1))

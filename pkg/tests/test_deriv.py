import pytest
from hypothesis import given, strategies as st

from qg2.coeff import q
from qg2.deriv import (GRADING_ALPHA0, GRADING_BETA0, DerivationSpec, ad,
                       central_candidate_rank, check_leibniz, is_derivation,
                       relation_words, scalar_derivation, solve_scalar_space)
from qg2.quotient import quotient
from qg2.sampling import random_quot, rng_for

small = st.integers(-3, 3)


def failing(D):
    return [name for name, r in check_leibniz(D) if r]


def test_relation_count():
    assert len(relation_words(1, 1)) == 17


class TestScalarSpace:
    def test_generic(self):
        assert solve_scalar_space(quotient(1, 1)).dim == 0
        assert solve_scalar_space(quotient(q, 1 / (q**2 - 1))).dim == 0

    def test_beta_zero(self):
        sol = solve_scalar_space(quotient(1, 0))
        assert sol.dim == 1 and sol.spans(GRADING_BETA0)

    def test_alpha_zero(self):
        sol = solve_scalar_space(quotient(0, 1))
        assert sol.dim == 1 and sol.spans(GRADING_ALPHA0)

    @pytest.mark.parametrize("p", [(1, 0), (0, 1)])
    def test_members_pass(self, p):
        Q = quotient(*p)
        for vec in solve_scalar_space(Q).basis:
            assert is_derivation(scalar_derivation(vec, Q))

    @given(st.tuples(*[small] * 6))
    def test_non_members_fail(self, vec):
        Q = quotient(1, 0)
        sol = solve_scalar_space(Q)
        assert is_derivation(scalar_derivation(vec, Q)) == sol.contains(vec)


class TestGradings:
    def test_beta0_grading(self):
        assert not failing(scalar_derivation(GRADING_BETA0, quotient(1, 0)))
        assert not failing(scalar_derivation(GRADING_BETA0, quotient(q**2, 0)))

    def test_alpha0_grading(self):
        assert not failing(scalar_derivation(GRADING_ALPHA0, quotient(0, 1)))

    def test_beta0_grading_fails_when_beta_nonzero(self):
        assert failing(scalar_derivation(GRADING_BETA0, quotient(1, 1))) == ["central2"]

    def test_zero(self):
        assert is_derivation(scalar_derivation([0] * 6, quotient(1, 1)))


class TestInner:
    def test_ad_scalar(self):
        Q = quotient(1, 1)
        assert ad(Q.scalar(3)).is_zero()

    def test_ad_example(self):
        Q = quotient(1, 1)
        assert ad(Q.gen(5))(6) == (1 - q**-3) * Q.gen(5) * Q.gen(6)

    def test_ad_sampled(self):
        Q = quotient(1, 1)
        rng = rng_for(0, "test-ad")
        for _ in range(10):
            assert is_derivation(ad(random_quot(rng, Q, cap=(4, 3), max_terms=2)))

    def test_ad_linear(self):
        Q = quotient(1, 0)
        rng = rng_for(1, "test-ad-linear")
        for _ in range(5):
            x, y = (random_quot(rng, Q, cap=(4, 3)) for _ in range(2))
            lhs = ad(x + 2 * y)
            rhs = ad(x) + ad(y) + ad(y)
            assert (lhs - rhs).is_zero()

    def test_grading_not_inner_on_samples(self):
        Q = quotient(1, 0)
        theta = scalar_derivation(GRADING_BETA0, Q)
        rng = rng_for(2, "test-not-inner")
        for _ in range(10):
            x = random_quot(rng, Q, cap=(4, 3))
            assert not (theta - ad(x)).is_zero()


class TestFromMapping:
    def test_parses(self):
        Q = quotient(1, 0)
        D = DerivationSpec.from_mapping(Q, {"e1": "-e1", "e2": "-e2", "e4": "e4",
                                            "e5": "e5", "e6": "2*e6"})
        assert is_derivation(D)

    def test_rejects_unknown(self):
        with pytest.raises(ValueError):
            DerivationSpec.from_mapping(quotient(1, 1), {"e7": "1"})

    def test_values_checked(self):
        with pytest.raises(ValueError):
            DerivationSpec(quotient(1, 1), [quotient(1, 0).gen(1)] * 6)


def test_central_search_only_scalars():
    rank, n = central_candidate_rank(quotient(1, 1), 4)
    assert rank == n - 1

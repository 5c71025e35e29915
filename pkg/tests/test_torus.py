import numpy as np
import pytest
from hypothesis import given, strategies as st

from qg2.coeff import param, q
from qg2.pbw import UQ, omega
from qg2.torus import (CommMatrix, TorusElem, box_span, center_lattice,
                       embed_quotient, embed_uq, embed_uq_poly,
                       localized_relations, matrix_M, matrix_N,
                       quotient_embedding, uq_relation_residuals,
                       verify_dda_chain)

M, N = matrix_M(), matrix_N()
PAIRS = [(1, 1), (1, 0), (0, 1), (q, 1 / (q**2 - 1))]


def T(i):
    return TorusElem.gen(M, i - 1)


def t(i):
    return TorusElem.gen(N, i - 3)


exps = st.tuples(*[st.integers(-2, 2)] * 6)


class TestMatrices:
    def test_rows(self):
        assert M.rows[0] == (0, 3, 1, 0, -1, -3)
        assert N.rows[0] == (0, 3, 1, 0)

    def test_deletion(self):
        assert M.delete([0, 1]) == [list(r) for r in N.rows]

    def test_skew_check(self):
        with pytest.raises(ValueError):
            CommMatrix([[0, 1], [1, 0]])


class TestTorusMul:
    def test_generator_swap(self):
        assert T(2) * T(1) == q**-3 * (T(1) * T(2))
        assert t(4) * t(3) == q**-3 * (t(3) * t(4))

    def test_generator_relations_match_matrix(self):
        for i in range(6):
            for j in range(6):
                Ti, Tj = TorusElem.gen(M, i), TorusElem.gen(M, j)
                assert Ti * Tj == q ** M.rows[i][j] * (Tj * Ti)

    @given(exps, exps, exps)
    def test_associative_monomials(self, u, v, w):
        a, b, c = (TorusElem.monomial(M, x) for x in (u, v, w))
        assert (a * b) * c == a * (b * c)

    @given(exps)
    def test_inverse(self, u):
        a = TorusElem.monomial(M, u)
        assert a * a.inverse() == TorusElem.scalar(M, 1)
        assert a.inverse() * a == TorusElem.scalar(M, 1)

    def test_matrix_mismatch(self):
        with pytest.raises(ValueError):
            T(1) * t(3)


class TestEmbedding:
    def test_tail_generators(self):
        assert embed_uq(5) == T(5)
        assert embed_uq(6) == T(6)

    def test_e4_image_shape(self):
        img = embed_uq(4)
        assert set(img.terms) == {(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 3, -1)}

    def test_relations(self):
        res = uq_relation_residuals()
        assert len(res) == 15
        assert all(not r for r in res.values())

    def test_centre_images(self):
        assert embed_uq_poly(omega(1)) == T(1) * T(3) * T(5)
        assert embed_uq_poly(omega(2)) == T(2) * T(4) * T(6)
        # the q-power is exactly trivial
        assert list(embed_uq_poly(omega(1)).terms.values()) == [1]

    def test_chain_lines(self):
        report = verify_dda_chain()
        assert report and all(ok for _, ok in report)

    def test_chain_negative_control(self):
        bumped = verify_dda_chain(lambda n: param(n) + 1 if n == "a" else param(n))
        assert not all(ok for _, ok in bumped)


class TestQuotientEmbedding:
    @pytest.mark.parametrize("alpha, beta", PAIRS)
    def test_homomorphism(self, alpha, beta):
        emb = quotient_embedding(alpha, beta)
        res = uq_relation_residuals(emb.images)
        assert all(not r for r in res.values())
        one = TorusElem.scalar(N, 1)
        assert emb.poly(omega(1).terms) == alpha * one
        assert emb.poly(omega(2).terms) == beta * one

    def test_last_generator(self):
        assert embed_quotient(6, 1, 1) == t(6)

    def test_both_zero(self):
        with pytest.raises(ValueError):
            quotient_embedding(0, 0)

    @pytest.mark.parametrize("alpha, beta", PAIRS)
    def test_localized_relations(self, alpha, beta):
        assert all(ok for _, ok in localized_relations(alpha, beta))


class TestCentreLattice:
    def test_rank6_box1(self):
        lat = center_lattice(M, 1)
        a, b = (1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1)
        listed = {(0,) * 6, a, b, (1,) * 6, tuple(-x for x in a), tuple(-x for x in b), (-1,) * 6}
        assert listed <= lat
        # a - b also lies in the box
        assert lat == listed | {(1, -1, 1, -1, 1, -1), (-1, 1, -1, 1, -1, 1)}

    def test_rank6_box2(self):
        assert center_lattice(M, 2) == box_span([(1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1)], 2)

    def test_rank4_trivial(self):
        assert center_lattice(N, 3) == {(0, 0, 0, 0)}

    def test_kernel_property(self):
        A = M.array()
        for v in center_lattice(M, 2):
            assert not np.any(A @ np.array(v))

    def test_bound(self):
        with pytest.raises(ValueError):
            center_lattice(M, 0)

    def test_central_monomials_commute(self):
        for v in center_lattice(M, 1):
            c = TorusElem.monomial(M, v)
            assert all(c * T(i) == T(i) * c for i in range(1, 7))

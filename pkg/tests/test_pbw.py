import pytest
from hypothesis import given

from qg2.coeff import q
from qg2.pbw import (INHOMOGENEOUS, UQ, commutator, gen, omega, power_families,
                     root_degree, serre_lhs, straighten_power,
                     straighten_power_brute, uq_relations)
from strategies import uq_elements

E1, E2, E3, E4, E5, E6 = (gen(i) for i in range(1, 7))


class TestRelations:
    # straightening relations as printed for U_q^+(G2)
    def test_q_commuting_pairs(self):
        assert E2 * E1 == q**-3 * E1 * E2
        assert E6 * E5 == q**-3 * E5 * E6
        assert E4 * E3 == q**-3 * E3 * E4

    def test_relations_with_corrections(self):
        assert E3 * E1 == q**-1 * E1 * E3 - (q + q**-1 + q**-3) * E2
        assert E6 * E1 == q**3 * E1 * E6 - q**3 * E5
        assert E6 * E2 == q**3 * E2 * E6 + (q**4 + q**2 - 1) * E4 + (q**2 - q**4) * E3 * E5
        assert E4 * E1 == E1 * E4 + (1 - q**2) * E3**2

    def test_table_reproduced_by_engine(self):
        for (j, i), (c, delta) in uq_relations().items():
            lhs = gen(j) * gen(i)
            rhs = c * (gen(i) * gen(j)) + UQ.element(delta)
            assert lhs == rhs, (j, i)

    def test_normal_order_is_ascending(self):
        x = E1 * E3 * E5
        assert list(x.terms) == [(1, 0, 1, 0, 1, 0)]


class TestSerre:
    def test_relations_vanish(self):
        assert not serre_lhs("S1")
        assert not serre_lhs("S2")

    def test_negative_control(self):
        assert serre_lhs("S1", balanced=False)
        assert serre_lhs("S2", balanced=False)


class TestAssociativity:
    @given(uq_elements(), uq_elements(), uq_elements())
    def test_associative(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @given(uq_elements(), uq_elements(), uq_elements())
    def test_distributive(self, x, y, z):
        assert x * (y + z) == x * y + x * z


class TestClosedForms:
    @pytest.mark.parametrize("key", power_families())
    def test_matches_brute_force(self, key):
        j, i, side = key
        for n in range(9):
            assert straighten_power(j, i, n, side) == straighten_power_brute(j, i, n, side)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            straighten_power(1, 2, 3)
        with pytest.raises(ValueError):
            straighten_power(2, 1, -1)


class TestCentre:
    @pytest.mark.parametrize("w", [1, 2])
    @pytest.mark.parametrize("i", range(1, 7))
    def test_central(self, w, i):
        assert not commutator(omega(w), gen(i))

    def test_perturbed_not_central(self):
        from qg2.coeff import param
        bumped = omega(1, lambda n: param(n) + 1 if n == "a" else param(n))
        assert any(commutator(bumped, gen(i)) for i in range(1, 7))


class TestRootDegree:
    def test_generators(self):
        assert root_degree(E1) == (1, 0)
        assert root_degree(E6) == (0, 1)
        assert root_degree(omega(1)) == (4, 2)
        assert root_degree(omega(2)) == (6, 4)

    def test_inhomogeneous(self):
        assert root_degree(E1 + E6) == INHOMOGENEOUS

    @given(uq_elements(max_terms=1), uq_elements(max_terms=1))
    def test_grading_multiplicative(self, x, y):
        p = x * y
        if p and x and y:
            dx, dy = root_degree(x), root_degree(y)
            assert root_degree(p) == (dx[0] + dy[0], dx[1] + dy[1])

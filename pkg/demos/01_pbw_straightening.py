"""
Straightening in U_q^+(G2)
==========================

Products of the six root vectors are rewritten into ascending PBW order.
"""

from qg2.coeff import q
from qg2.pbw import E, commutator, omega, serre_lhs, straighten_power

E1, E2, E3, E4, E5, E6 = (E[i] for i in range(1, 7))

# %%
# A single swap produces a correction term in a lower generator.
print("E3*E1 =", E3 * E1)

# %%
# Longer words are straightened recursively.  The result has every term in
# normal order.
x = E6 * E3 * E1
print(len(x.terms), "terms")
print(x)

# %%
# The closed forms for E_j E_i^n agree with repeated multiplication.
print(straighten_power(6, 5, 4) == E6 * E5**4)

# %%
# Both quantum Serre relations vanish.  With non-symmetric q-binomials they
# do not.
print(serre_lhs("S1"), "|", serre_lhs("S2"))
print(len(serre_lhs("S1", balanced=False).terms), "terms survive with the wrong binomials")

# %%
# The two central elements commute with every generator.
for w in (1, 2):
    print(f"Omega{w} central:", all(not commutator(omega(w), E[i]) for i in range(1, 7)))

print("q-coefficients live in Q(q), e.g.", (q**2 - 1) / (q - 1))

"""
Simple quotients and their normal form
======================================

Fixing the two central elements to scalars alpha and beta gives a quotient
with a basis in which e3 and e4 appear at most once.
"""

import numpy as np

from qg2.coeff import q
from qg2.pbw import omega
from qg2.quotient import (basis_count, normal_element_alpha0, normality_check,
                          quotient, square_identity_check)

Q = quotient(1, 1)
e = {i: Q.gen(i) for i in range(1, 7)}

# %%
# Squares of e3 and e4 are rewritten.
print("e3^2 =", e[3] * e[3])
print(len((e[4] * e[4]).terms), "terms in e4^2")

# %%
# The central relations reduce to the chosen scalars.
print(Q.reduce(omega(1)), Q.reduce(omega(2)))

# %%
# Normal forms agree with the torus image of the unreduced element.
x = (e[6] * e[3] * e[3] * e[1]).lift()
print(Q.torus_image(Q.reduce(x)) == Q.torus_image(x))

# %%
# Tabulated expansions of e3^2, e4^2, e3^2 e4 reduce to zero.  The printed
# table for e3 e4^2 leaves a residual, which disappears once three of its
# coefficients are corrected.
for which in (1, 2, 3, 4):
    print(which, "residual zero:", not square_identity_check(which, (q, 1)))
print("4 corrected:", not square_identity_check(4, (q, 1), corrected=True))

# %%
# The basis grows like d^4 / 6, so the quotient has GK dimension 4.
d = np.arange(5, 45, 5)
counts = np.array([basis_count(int(k)) for k in d])
print(np.round(counts / d.astype(float) ** 4, 4))

# %%
# With alpha = 0 the element e3 e5 + a e4 is normal.
print([str(lam) for lam in normality_check(normal_element_alpha0(quotient(0, 1)))])

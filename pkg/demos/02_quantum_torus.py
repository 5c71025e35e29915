"""
The quantum torus oracle
========================

Every root vector is a Laurent polynomial in six q-commuting variables, so
identities in U_q^+(G2) can be checked by multiplying Laurent monomials.
"""

import numpy as np

from qg2.pbw import omega
from qg2.torus import (center_lattice, embed_uq, embed_uq_poly, matrix_M,
                       matrix_N, uq_relation_residuals)

# %%
# The commutation matrix.  T_i T_j = q^(M[i, j]) T_j T_i.
M = matrix_M()
print(M.array())

# %%
# Images of the generators.  The tail of the chain is untouched.
for i in range(1, 7):
    print(f"E{i} ->", embed_uq(i))

# %%
# The fifteen straightening relations hold in the torus.
res = uq_relation_residuals()
print(sum(1 for r in res.values() if not r), "of", len(res), "residuals vanish")

# %%
# Both central elements become single monomials with coefficient 1.
print(embed_uq_poly(omega(1)), "|", embed_uq_poly(omega(2)))

# %%
# Central Laurent monomials are the integer kernel of M.  In a small box the
# kernel is spanned by the two exponent vectors above.
lat = np.array(sorted(center_lattice(M, 1)))
print(lat)
print("rank of the kernel sample:", np.linalg.matrix_rank(lat))

# %%
# The rank-4 torus used for the quotients has no central monomials.
print(center_lattice(matrix_N(), 3))

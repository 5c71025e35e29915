"""
Derivations
===========

A derivation is fixed by the images of e1..e6, and it is well defined when
the Leibniz extension kills all seventeen defining relations.
"""

from qg2.deriv import (GRADING_BETA0, ad, central_candidate_rank,
                       check_leibniz, scalar_derivation, solve_scalar_space)
from qg2.quotient import quotient

# %%
# Scalar derivations e_i -> lambda_i e_i.  Generic parameters leave none.
for p in [(1, 1), (1, 0), (0, 1)]:
    sol = solve_scalar_space(quotient(*p))
    print(p, "dimension", sol.dim, [tuple(str(c) for c in v) for v in sol.basis])

# %%
# The grading survives only when beta = 0; otherwise it breaks the second
# central relation.
for p in [(1, 0), (1, 1)]:
    D = scalar_derivation(GRADING_BETA0, quotient(*p))
    print(p, [name for name, r in check_leibniz(D) if r])

# %%
# Inner derivations always pass.
Q = quotient(1, 1)
x = Q.gen(3) * Q.gen(5) + Q.gen(1)
print(all(not r for _, r in check_leibniz(ad(x))))

# %%
# Up to degree 4 only scalars commute with every generator.
print(central_candidate_rank(Q, 4))

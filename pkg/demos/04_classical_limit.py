"""
At q = 1
========

With alpha = 1 and beta = 1/(9(q^6 - 1)) the relations can be rescaled so
that every coefficient is regular at q = 1.  The limit is the second Weyl
algebra with a central square root of 1/9 adjoined.
"""

from qg2.limits import (CLASSICAL, classical_to_weyl, e, f, flatness_check,
                        iso_check, scaled_relation_comparison, specialize_z1,
                        weyl_mul, weyl_to_classical)
from qg2.pbw import format_monomial

# %%
# Each relation specialises to the rational list.
for name, ok, detail in specialize_z1()[-2:]:
    print(name, ok, detail)

# %%
# e4 is central with e4^2 = 1/9, and e3^2 is eliminated.
print(CLASSICAL.mul(e(4), e(4)), "|", CLASSICAL.mul(e(3), e(3)))

# %%
# Two maps between the limit and the Weyl-type algebra.
print("f2 ->", weyl_to_classical(f(2)))
print("e1 ->", classical_to_weyl(e(1)))
print(all(ok for _, ok in iso_check()))

# %%
# f2, f3, f5, f6 satisfy the Weyl relations.
print(weyl_mul(f(6), f(2)) - weyl_mul(f(2), f(6)))

# %%
# Two displayed coefficients of the second relation differ from the rescaled
# central element by q^12.  Both vanish at q = 1, so the limit is unaffected.
for rel, mono, shown, calc in scaled_relation_comparison():
    print(rel, format_monomial(mono, CLASSICAL.names), shown, "vs", calc)

# %%
# Evaluating the symbolic engine at random z0 matches an engine built at z0.
print(flatness_check(samples=20) == [])

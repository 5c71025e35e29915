"""Exact computations in U_q^+(G2), its simple quotients and their limits.

Modules: ``coeff`` (Q(q) arithmetic and the parameter table), ``pbw``
(PBW normal forms), ``torus`` (quantum-torus embeddings), ``quotient``
(normal forms in the quotients), ``limits`` (the classical limit), ``deriv``
(derivations), ``suites`` and ``cli`` (the ``qg2`` command).
"""

from .coeff import RatFunc, param, q
from .pbw import UQ, E, gen, omega
from .quotient import quotient

__all__ = ["RatFunc", "param", "q", "UQ", "E", "gen", "omega", "quotient"]
__version__ = "0.1.0"

"""Seeded random elements for property checks and the verification suites."""

from __future__ import annotations

import itertools
import random

from .coeff import q
from .pbw import ROOT_WEIGHTS, UQ, PBWElement
from .torus import TorusElem

__all__ = ["monomials_within", "random_coeff", "random_poly", "random_quot", "random_torus", "rng_for"]

_MONO_CACHE = {}


def monomials_within(cap=(6, 4)):
    """All PBW monomials whose root degree is componentwise ``<= cap``."""
    cap = tuple(cap)
    if cap not in _MONO_CACHE:
        bounds = [min(cap[0] // w[0] if w[0] else cap[1], cap[1] // w[1] if w[1] else cap[0])
                  for w in ROOT_WEIGHTS]
        out = []
        for m in itertools.product(*(range(b + 1) for b in bounds)):
            wx = sum(e * w[0] for e, w in zip(m, ROOT_WEIGHTS))
            wy = sum(e * w[1] for e, w in zip(m, ROOT_WEIGHTS))
            if wx <= cap[0] and wy <= cap[1]:
                out.append(m)
        _MONO_CACHE[cap] = out
    return _MONO_CACHE[cap]


def random_coeff(rng):
    """Small nonzero element of Q(q): an integer times a power of q, sometimes a fraction."""
    c = rng.choice([-3, -2, -1, 1, 2, 3]) * q ** rng.randint(-3, 3)
    if rng.random() < 0.2:
        c = c / (q ** rng.randint(1, 3) + rng.choice([-1, 1]))
    return c


def random_poly(rng, cap=(6, 4), max_terms=3, max_total=None):
    """Random nonzero element of U_q^+ with root degree ``<= cap``.

    ``max_total`` optionally bounds the total PBW degree of each term.
    """
    pool = monomials_within(cap)
    if max_total is not None:
        pool = [m for m in pool if sum(m) <= max_total]
    pool = [m for m in pool if any(m)] or pool
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(pool)] = random_coeff(rng)
    x = PBWElement(UQ, terms)
    return x if x else UQ.monomial(pool[0])


def random_quot(rng, quot, cap=(6, 4), max_terms=3, max_total=None):
    """Random element of the quotient (reduced image of ``random_poly``)."""
    return quot.reduce(random_poly(rng, cap, max_terms, max_total))


def random_torus(rng, matrix, max_terms=3, bound=2):
    """Random Laurent polynomial in the quantum torus with the given matrix."""
    r = len(matrix.rows)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        u = tuple(rng.randint(-bound, bound) for _ in range(r))
        terms[u] = random_coeff(rng)
    return TorusElem(matrix, terms)


def rng_for(seed, label):
    """Independent stream per (seed, label) so suites do not share state."""
    return random.Random(f"{seed}:{label}")


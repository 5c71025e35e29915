"""Exact linear algebra helpers.

``nullspace`` works over any field whose elements support ``+ - * /`` and
truthiness (RatFunc, Fraction).  ``rank_at`` gives a lower bound for the rank
of a matrix over Q(q) by specialising q and reducing modulo a large prime.
"""

from __future__ import annotations

from fractions import Fraction

import flint

__all__ = ["nullspace", "rank_at", "DEFAULT_PRIME"]

DEFAULT_PRIME = (1 << 61) - 1


def nullspace(rows, ncols, one):
    """Basis of ``{x : A x = 0}`` for ``A`` given as a list of row lists.

    Each basis vector has a 1 in one free column and zeros in the others.
    """
    A = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = one / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = one - one
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis


def _mod(x, p):
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


def rank_at(columns, q0, p=DEFAULT_PRIME):
    """Rank of the matrix with the given sparse columns at ``q = q0``, mod ``p``.

    ``columns`` is a list of dicts ``row_key -> RatFunc``.  The returned value
    never exceeds the rank over Q(q).
    """
    keys = {}
    for col in columns:
        for k in col:
            keys.setdefault(k, len(keys))
    if not keys:
        return 0
    M = flint.nmod_mat(len(keys), len(columns), p)
    for j, col in enumerate(columns):
        for k, v in col.items():
            M[keys[k], j] = _mod(v.substitute(q0), p)
    return M.rank()

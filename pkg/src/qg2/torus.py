"""Quantum tori and the deleting-derivations embedding.

A monomial ``T^u`` is stored by its exponent vector in ascending normal
order, and ``T^u * T^v = q^(sum_{i>j} u_i v_j mu_ij) T^(u+v)``.  With this
convention ``T_i T_j = q^(mu_ij) T_j T_i`` for the generators.

The change of variables is inverted step by step: starting from
``E_{i,2} = T_i`` each ``E_{i,j+1}`` is recovered from ``E_{i,j}`` by undoing
one step.  Nothing about the resulting Laurent polynomials is transcribed by
hand; the relation residuals certify them.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .coeff import RatFunc, param, q, qpow, to_ratfunc
from .pbw import UQ, _add_into, format_terms, omega, uq_relations

__all__ = [
    "CommMatrix",
    "TorusElem",
    "matrix_M",
    "matrix_N",
    "embed_uq",
    "embed_uq_poly",
    "dda_image",
    "embed_quotient",
    "QuotientEmbedding",
    "quotient_embedding",
    "localized_relations",
    "center_lattice",
    "verify_dda_chain",
    "uq_relation_residuals",
]


class CommMatrix:
    """Skew-symmetric integer matrix governing a quantum torus."""

    __slots__ = ("rows", "size", "names")

    def __init__(self, rows, names=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"not skew-symmetric at ({i}, {j})")
        self.rows, self.size = rows, n
        self.names = tuple(names) if names else tuple(f"T{i + 1}" for i in range(n))

    def __eq__(self, other):
        return isinstance(other, CommMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def array(self):
        return np.array(self.rows, dtype=np.int64)

    def twist(self, u, v):
        """Exponent ``c(u, v)`` of q in ``T^u T^v = q^c T^(u+v)``."""
        s = 0
        rows = self.rows
        for i in range(1, self.size):
            ui = u[i]
            if ui:
                row = rows[i]
                for j in range(i):
                    if v[j]:
                        s += ui * v[j] * row[j]
        return s

    def delete(self, idx):
        keep = [i for i in range(self.size) if i not in set(idx)]
        return [[self.rows[i][j] for j in keep] for i in keep]


_M_ROWS = (
    (0, 3, 1, 0, -1, -3),
    (-3, 0, 3, 3, 0, -3),
    (-1, -3, 0, 3, 1, 0),
    (0, -3, -3, 0, 3, 3),
    (1, 0, -1, -3, 0, 3),
    (3, 3, 0, -3, -3, 0),
)
_N_ROWS = (
    (0, 3, 1, 0),
    (-3, 0, 3, 3),
    (-1, -3, 0, 3),
    (0, -3, -3, 0),
)

_M = CommMatrix(_M_ROWS)
_N = CommMatrix(_N_ROWS, names=("t3", "t4", "t5", "t6"))


def matrix_M():
    return _M


def matrix_N():
    return _N


class TorusElem:
    """Laurent polynomial in a quantum torus."""

    __slots__ = ("matrix", "terms")

    def __init__(self, matrix, terms=None):
        self.matrix = matrix
        self.terms = {tuple(u): c for u, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, matrix, u, c=1):
        return cls(matrix, {tuple(u): to_ratfunc(c)})

    @classmethod
    def gen(cls, matrix, i):
        u = [0] * matrix.size
        u[i] = 1
        return cls.monomial(matrix, u)

    @classmethod
    def scalar(cls, matrix, c):
        return cls.monomial(matrix, (0,) * matrix.size, c)

    def _wrap(self, other):
        if isinstance(other, TorusElem):
            if other.matrix != self.matrix:
                raise ValueError("commutation matrices differ")
            return other
        return TorusElem.scalar(self.matrix, other)

    def __add__(self, other):
        other = self._wrap(other)
        acc = dict(self.terms)
        for u, c in other.terms.items():
            _add_into(acc, u, c)
        return TorusElem(self.matrix, acc)

    __radd__ = __add__

    def __neg__(self):
        return TorusElem(self.matrix, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, TorusElem):
            c = to_ratfunc(other)
            return TorusElem(self.matrix, {u: v * c for u, v in self.terms.items()})
        other = self._wrap(other)
        tw = self.matrix.twist
        acc = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                s = tw(u, v)
                c = cu * cv
                _add_into(acc, w, c * qpow(s) if s else c)
        return TorusElem(self.matrix, acc)

    def __rmul__(self, other):
        c = to_ratfunc(other)
        return TorusElem(self.matrix, {u: c * v for u, v in self.terms.items()})

    def __truediv__(self, other):
        return self * to_ratfunc(other).inv()

    def inverse(self):
        """Inverse of a single-term element."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible in this engine")
        (u, c), = self.terms.items()
        neg = tuple(-x for x in u)
        s = self.matrix.twist(u, neg)
        return TorusElem(self.matrix, {neg: c.inv() * qpow(-s)})

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer exponents only")
        if n < 0:
            return self.inverse() ** (-n)
        out = TorusElem.scalar(self.matrix, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, TorusElem):
            return self.matrix == other.matrix and self.terms == other.terms
        try:
            return self == self._wrap(other)
        except TypeError:
            return False

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_terms(sorted(self.terms.items()), self.matrix.names)

    def __repr__(self):
        return f"<{self}>"


# -- deleting-derivations chain --------------------------------------------

# step j: E_{i,j} = E_{i,j+1} + sum coeff * prod E_{k,j+1}^exp
_STEPS = {
    6: {1: [("r", ((5, 1), (6, -1)))],
        2: [("t", ((3, 1), (5, 1), (6, -1))), ("u", ((4, 1), (6, -1))),
            ("n", ((5, 3), (6, -2)))],
        3: [("s", ((5, 2), (6, -1)))],
        4: [("b", ((5, 3), (6, -1)))]},
    5: {1: [("h", ((3, 1), (5, -1))), ("g", ((4, 1), (5, -2)))],
        2: [("f", ((3, 2), (5, -1))), ("p", ((3, 1), (4, 1), (5, -2))),
            ("e", ((4, 2), (5, -3)))],
        3: [("a", ((4, 1), (5, -1)))]},
    4: {1: [("s", ((3, 2), (4, -1)))],
        2: [("b", ((3, 3), (4, -1)))]},
    3: {1: [("a", ((2, 1), (3, -1)))]},
}


class _Chain:
    """Images of every ``E_{i,j}`` in the rank-6 torus, for given scalars."""

    def __init__(self, params=None):
        self.params = params or param
        self.cache = {}

    def image(self, i, j):
        """Image of ``E_{i,j}`` (``2 <= j <= 7``)."""
        key = (i, j)
        if key in self.cache:
            return self.cache[key]
        if j == 2:
            out = TorusElem.gen(_M, i - 1)
        else:
            out = self.image(i, j - 1)
            for name, factors in _STEPS.get(j - 1, {}).get(i, ()):
                term = TorusElem.scalar(_M, self.params(name))
                for k, e in factors:
                    term = term * self.image(k, j) ** e
                out = out - term
        self.cache[key] = out
        return out


_DEFAULT_CHAIN = _Chain()


def dda_image(i, j):
    """Image of ``E_{i,j}`` in the rank-6 torus."""
    return _DEFAULT_CHAIN.image(i, j)


def embed_uq(i):
    """Image of ``E_i`` in the rank-6 torus."""
    return _DEFAULT_CHAIN.image(i, 7)


class _PolyEmbedder:
    """Memoised image of PBW monomials under a generator assignment."""

    def __init__(self, images, unit):
        self.images = images
        self.unit = unit
        self.cache = {(0,) * len(images): unit}

    def mono(self, m):
        hit = self.cache.get(m)
        if hit is not None:
            return hit
        k = len(m) - 1
        while m[k] == 0:
            k -= 1
        rest = list(m)
        rest[k] -= 1
        out = self.mono(tuple(rest)) * self.images[k]
        self.cache[m] = out
        return out

    def poly(self, terms):
        acc = {}
        for m, c in terms.items():
            for u, cu in self.mono(m).terms.items():
                _add_into(acc, u, c * cu)
        return TorusElem(self.unit.matrix, acc)


_UQ_EMBED = None


def embed_uq_poly(x):
    """Torus image of an NCPoly."""
    global _UQ_EMBED
    if _UQ_EMBED is None:
        _UQ_EMBED = _PolyEmbedder([embed_uq(i) for i in range(1, 7)],
                                  TorusElem.scalar(_M, 1))
    return _UQ_EMBED.poly(x.terms)


def uq_relation_residuals(images=None, one=None):
    """Residual of each straightening relation under generator images.

    ``images`` is a list of six elements supporting ``+``, ``*`` and scalar
    multiplication; defaults to the rank-6 torus images.
    """
    if images is None:
        images = [embed_uq(i) for i in range(1, 7)]
    out = {}
    for (j, i), (c, delta) in uq_relations().items():
        lhs = images[j - 1] * images[i - 1]
        rhs = c * (images[i - 1] * images[j - 1])
        for m, dc in delta.items():
            term = None
            for k, e in enumerate(m):
                for _ in range(e):
                    term = images[k] if term is None else term * images[k]
            rhs = rhs + dc * term
        out[(j, i)] = lhs - rhs
    return out


def _chain_lines():
    """Each displayed line of the two centre expansions as ``(coeff, factors)``."""
    one = None
    w1 = [
        [(one, ((1, 4, 1), (3, 4, 1), (5, 4, 1))), ("a", ((2, 4, 1), (5, 4, 1)))],
        [(one, ((1, 5, 1), (3, 5, 1), (5, 5, 1))), ("a", ((2, 5, 1), (5, 5, 1)))],
        [(one, ((1, 6, 1), (3, 6, 1), (5, 6, 1))), ("a", ((1, 6, 1), (4, 6, 1))),
         ("a", ((2, 6, 1), (5, 6, 1))), ("aprime", ((3, 6, 2),))],
    ]
    w2 = [
        [(one, ((2, 5, 1), (4, 5, 1), (6, 5, 1))), ("b", ((3, 5, 3), (6, 5, 1)))],
        [(one, ((2, 6, 1), (4, 6, 1), (6, 6, 1))), ("b", ((3, 6, 3), (6, 6, 1)))],
    ]
    return {1: w1, 2: w2}


def verify_dda_chain(params=None):
    """Check every line of both centre expansions in the rank-6 torus.

    ``params`` overrides the scalar lookup (used for negative controls).
    Returns a list of ``(label, passed)`` pairs.
    """
    lookup = params or param
    chain = _Chain(lookup) if params else _DEFAULT_CHAIN
    report = []
    for w, lines in _chain_lines().items():
        idx = (0, 2, 4) if w == 1 else (1, 3, 5)
        u = [0] * 6
        for k in idx:
            u[k] = 1
        target = TorusElem.monomial(_M, u)
        for n, line in enumerate(lines, start=1):
            val = TorusElem.scalar(_M, 0)
            for name, factors in line:
                term = TorusElem.scalar(_M, 1 if name is None else lookup(name))
                for i, j, e in factors:
                    term = term * chain.image(i, j) ** e
                val = val + term
            report.append((f"omega{w} line {n}", val == target))
        # final line: the PBW expression itself
        poly = omega(w, lookup)
        emb = _PolyEmbedder([chain.image(i, 7) for i in range(1, 7)], TorusElem.scalar(_M, 1))
        report.append((f"omega{w} PBW form", emb.poly(poly.terms) == target))
    return report


# -- the quotient torus ---------------------------------------------------

class QuotientEmbedding:
    """Images of ``e_1..e_6`` in the rank-4 torus for fixed ``(alpha, beta)``.

    Obtained from the rank-6 images by ``T_1 -> alpha t5^-1 t3^-1``,
    ``T_2 -> beta t6^-1 t4^-1`` and ``T_k -> t_k`` otherwise.
    """

    def __init__(self, alpha, beta):
        alpha, beta = to_ratfunc(alpha), to_ratfunc(beta)
        if not alpha and not beta:
            raise ValueError("(alpha, beta) must not both be zero")
        self.alpha, self.beta = alpha, beta
        t = {k: TorusElem.gen(_N, k - 3) for k in range(3, 7)}
        self.t = t
        self.t1 = alpha * (t[5] ** -1 * t[3] ** -1)
        self.t2 = beta * (t[6] ** -1 * t[4] ** -1)
        self._sub_cache = {}
        self._chain_cache = {}
        self.images = [self.chain(i, 7) for i in range(1, 7)]
        self._emb = _PolyEmbedder(self.images, TorusElem.scalar(_N, 1))

    def _gen_power(self, k, e):
        key = (k, e)
        if key not in self._sub_cache:
            base = self.t1 if k == 1 else self.t2 if k == 2 else self.t[k]
            self._sub_cache[key] = base ** e
        return self._sub_cache[key]

    def substitute(self, x):
        """Push a rank-6 element through the substitution."""
        acc = TorusElem.scalar(_N, 0)
        for u, c in x.terms.items():
            if (u[0] < 0 and not self.alpha) or (u[1] < 0 and not self.beta):
                raise ValueError("negative power of a vanishing variable")
            term = TorusElem.scalar(_N, c)
            for k, e in enumerate(u, start=1):
                if e:
                    term = term * self._gen_power(k, e)
            acc = acc + term
        return acc

    def chain(self, i, j):
        key = (i, j)
        if key not in self._chain_cache:
            self._chain_cache[key] = self.substitute(dda_image(i, j))
        return self._chain_cache[key]

    def gen(self, i):
        return self.images[i - 1]

    def poly(self, terms):
        """Image of a dict of exponent tuples in ``e_1..e_6``."""
        return self._emb.poly(terms)

    def mono(self, m):
        return self._emb.mono(tuple(m))


@lru_cache(maxsize=32)
def _embedding(alpha, beta):
    return QuotientEmbedding(alpha, beta)


def embed_quotient(i, alpha, beta):
    """Image of ``e_i`` in the rank-4 torus."""
    return _embedding(to_ratfunc(alpha), to_ratfunc(beta)).gen(i)


def quotient_embedding(alpha, beta):
    return _embedding(to_ratfunc(alpha), to_ratfunc(beta))


def localized_relations(alpha, beta):
    """The three localized relations in the rank-4 torus, as ``[(label, holds)]``.

    ``f1`` is the image of ``E_{1,4}``; ``z1, z2`` are those of ``E_{1,5}, E_{2,5}``.
    """
    emb = quotient_embedding(alpha, beta)
    al, be = emb.alpha, emb.beta
    t = emb.t
    a, b = param("a"), param("b")
    f1, z1, z2 = emb.chain(1, 4), emb.chain(1, 5), emb.chain(2, 5)
    t4i, t5i, t6i = t[4] ** -1, t[5] ** -1, t[6] ** -1
    r1 = f1 * t[3] == al * t5i - a * be * t6i * t4i
    r2 = a * z2 == al * t5i - z1 * t[3]
    r3 = b * t[3] ** 3 == be * t6i - z2 * t[4]
    r3x = t[3] ** 3 == (be / b) * t6i - (q**3 * al / (a * b)) * t[4] * t5i \
        + (1 / (a * b)) * z1 * t[3] * t[4]
    return [
        ("f1 t3 = alpha t5^-1 - a beta t6^-1 t4^-1", r1),
        ("z2 = (alpha t5^-1 - z1 t3) / a", r2),
        ("t3^3 = (beta t6^-1 - z2 t4) / b", r3),
        ("t3^3 = (beta/b) t6^-1 - (q^3 alpha/ab) t4 t5^-1 + (1/ab) z1 t3 t4", r3x),
    ]


def center_lattice(m, bound):
    """Integer vectors ``v`` in ``[-bound, bound]^r`` with ``m v = 0``."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    A = m.array()
    r = m.size
    rng = np.arange(-bound, bound + 1)
    grid = np.array(np.meshgrid(*([rng] * r), indexing="ij")).reshape(r, -1)
    hits = np.all(A @ grid == 0, axis=0)
    return {tuple(int(x) for x in col) for col in grid[:, hits].T}


def box_span(gens, bound):
    """Integer combinations of ``gens`` that stay inside the box."""
    r = len(gens[0])
    out = set()
    lim = 2 * bound + 1
    for coefs in itertools.product(range(-lim, lim + 1), repeat=len(gens)):
        v = tuple(sum(c * g[k] for c, g in zip(coefs, gens)) for k in range(r))
        if all(abs(x) <= bound for x in v):
            out.add(v)
    return out

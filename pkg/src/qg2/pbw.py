"""Skew-PBW straightening and the algebra U_q^+(G2).

``SkewPBWAlgebra`` is a small generic engine: generators ``x_0 < ... < x_{n-1}``
with relations ``x_j x_i = c * x_i x_j + delta`` for ``j > i``, where ``delta``
only involves generators strictly between ``i`` and ``j``.  Elements are sparse
dicts from exponent tuples to coefficients.  Coefficients may be ``RatFunc``
or ``Fraction``; the engine only uses ``+``, ``*`` and truthiness.

The same engine drives U_q^+(G2), its specialisations at rational ``z``, the
q = 1 algebra and the Weyl-type algebra in ``limits``.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from .coeff import RatFunc, dcoef, param, q, qbinom, qpow, to_ratfunc

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

__all__ = [
    "SkewPBWAlgebra",
    "PBWElement",
    "UQ",
    "uq_relations",
    "E",
    "gen",
    "mul",
    "commutator",
    "omega",
    "serre_lhs",
    "root_degree",
    "straighten_power",
    "power_families",
    "INHOMOGENEOUS",
    "ROOT_WEIGHTS",
]


def _add_into(acc, m, c):
    v = acc.get(m)
    if v is None:
        if c:
            acc[m] = c
    else:
        v = v + c
        if v:
            acc[m] = v
        else:
            del acc[m]


class SkewPBWAlgebra:
    """Iterated skew-polynomial algebra with an ordered monomial basis.

    ``relations`` maps ``(j, i)`` (0-based, ``j > i``) to ``(c, delta)`` where
    ``delta`` is a dict of monomials.  Pairs that are absent commute.
    """

    def __init__(self, names, relations, one=None, weights=None):
        self.names = tuple(names)
        self.n = len(self.names)
        self.one = RatFunc(1) if one is None else one
        self.relations = {}
        for (j, i), (c, delta) in relations.items():
            if not j > i:
                raise ValueError(f"relation key {(j, i)} must have j > i")
            self.relations[(j, i)] = (c, {m: v for m, v in delta.items() if v})
        self.weights = weights
        self.unit = (0,) * self.n
        self._gen_cache = {}
        self._mono_cache = {}

    # -- monomials --------------------------------------------------------
    def gen_mono(self, i):
        m = [0] * self.n
        m[i] = 1
        return tuple(m)

    def mono_times_gen(self, m, j):
        key = (m, j)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        k = self.n - 1
        while k >= 0 and m[k] == 0:
            k -= 1
        if k <= j:
            t = list(m)
            t[j] += 1
            res = {tuple(t): self.one}
        else:
            # m = m' E_k and E_k E_j = c E_j E_k + delta
            mp = list(m)
            mp[k] -= 1
            mp = tuple(mp)
            rel = self.relations.get((k, j))
            c, delta = rel if rel is not None else (self.one, None)
            res = {}
            for t, ct in self.mono_times_gen(mp, j).items():
                cc = c * ct
                for t2, c2 in self.mono_times_gen(t, k).items():
                    _add_into(res, t2, cc * c2)
            if delta:
                for dm, dc in delta.items():
                    for t, ct in self.mul_mono(mp, dm).items():
                        _add_into(res, t, dc * ct)
        self._gen_cache[key] = res
        return res

    def mul_mono(self, m1, m2):
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        last = self.n - 1
        while last >= 0 and m1[last] == 0:
            last -= 1
        first = 0
        while first < self.n and m2[first] == 0:
            first += 1
        if first == self.n:
            res = {m1: self.one}
        elif last <= first:
            res = {tuple(a + b for a, b in zip(m1, m2)): self.one}
        else:
            # peel the last generator off m2
            k = self.n - 1
            while m2[k] == 0:
                k -= 1
            rest = list(m2)
            rest[k] -= 1
            res = {}
            for t, ct in self.mul_mono(m1, tuple(rest)).items():
                for t2, c2 in self.mono_times_gen(t, k).items():
                    _add_into(res, t2, ct * c2)
        self._mono_cache[key] = res
        return res

    def mul_terms(self, a, b):
        acc = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c12 = c1 * c2
                for m, c in self.mul_mono(m1, m2).items():
                    _add_into(acc, m, c12 * c)
        return acc

    # -- element constructors --------------------------------------------
    def element(self, terms=None):
        return PBWElement(self, terms or {})

    def gen(self, i):
        """Generator ``i`` (0-based)."""
        return PBWElement(self, {self.gen_mono(i): self.one})

    def monomial(self, m, c=None):
        return PBWElement(self, {tuple(m): self.one if c is None else c})

    def scalar(self, c):
        if not c:
            return PBWElement(self, {})
        return PBWElement(self, {self.unit: self._coerce_scalar(c)})

    def _coerce_scalar(self, c):
        if isinstance(self.one, RatFunc):
            return to_ratfunc(c)
        if isinstance(c, RatFunc):
            return c.constant_value()
        return Fraction(c)

    def word(self, letters, c=None):
        """Product of generators in the given order, straightened."""
        terms = {self.unit: self.one if c is None else c}
        for j in letters:
            acc = {}
            for m, cm in terms.items():
                for t, ct in self.mono_times_gen(m, j).items():
                    _add_into(acc, t, cm * ct)
            terms = acc
        return PBWElement(self, terms)

    def mono_weight(self, m):
        w = [0] * len(self.weights[0])
        for k, e in zip(m, self.weights):
            for r in range(len(w)):
                w[r] += k * e[r]
        return tuple(w)


class PBWElement:
    """An element of a ``SkewPBWAlgebra`` in normal form."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {m: c for m, c in terms.items() if c}

    def _wrap(self, other):
        if isinstance(other, PBWElement):
            if other.alg is not self.alg:
                raise ValueError("elements live in different algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._wrap(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return PBWElement(self.alg, acc)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return PBWElement(self.alg, self.alg.mul_terms(self.terms, self._wrap(other).terms))
        c = self.alg._coerce_scalar(other)
        return PBWElement(self.alg, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.alg._coerce_scalar(other)
        return PBWElement(self.alg, {m: c * v for m, v in self.terms.items()})

    def __truediv__(self, other):
        c = self.alg._coerce_scalar(other)
        return self * (self.alg.one / c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("PBW elements only take non-negative integer powers")
        out = self.alg.scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, PBWElement):
            return self.alg is other.alg and self.terms == other.terms
        try:
            return self.terms == self.alg.scalar(other).terms
        except TypeError:
            return False

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, m):
        return self.terms.get(tuple(m), self.alg.one * 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def map_coeffs(self, f, alg=None):
        alg = alg or self.alg
        return PBWElement(alg, {m: f(c) for m, c in self.terms.items()})

    def __str__(self):
        return format_terms(self.sorted_terms(), self.alg.names)

    def __repr__(self):
        return f"<{self}>"


def format_monomial(m, names):
    parts = []
    for k, name in zip(m, names):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_terms(items, names):
    """Shared printer: ``(coeff)*X1^k1*...`` joined with `` + ``."""
    if not items:
        return "0"
    if len(items) == 1 and not any(items[0][0]):
        return str(items[0][1])
    out = []
    for m, c in items:
        mono = format_monomial(m, names)
        if not mono:
            out.append(f"({c})")
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"({c})*{mono}")
    return " + ".join(out)


# -- U_q^+(G2) ------------------------------------------------------------

ROOT_WEIGHTS = ((1, 0), (3, 1), (2, 1), (3, 2), (1, 1), (0, 1))
INHOMOGENEOUS = "inhomogeneous"


def _m(**exps):
    m = [0] * 6
    for k, v in exps.items():
        m[int(k[1:]) - 1] = v
    return tuple(m)


def uq_relations(s=q):
    """The fifteen straightening relations, keyed 1-based ``(j, i)``.

    ``s`` is the deformation parameter (``q`` for U_q, ``z`` evaluated
    elsewhere).  Values are ``(c, {monomial: coeff})`` with
    ``E_j E_i = c E_i E_j + delta``.
    """
    one = s ** 0
    d1 = -(s**4 - 2 * s**2 + 1) / (s**4 + s**2 + 1)
    d2 = -(s + s**-1 + s**-3)
    return {
        (2, 1): (s**-3, {}),
        (3, 1): (s**-1, {_m(E2=1): d2}),
        (3, 2): (s**-3, {}),
        (4, 1): (one, {_m(E3=2): 1 - s**2}),
        (4, 2): (s**-3, {_m(E3=3): d1}),
        (4, 3): (s**-3, {}),
        (5, 1): (s, {_m(E3=1): -(1 + s**2)}),
        (5, 2): (one, {_m(E3=2): 1 - s**2}),
        (5, 3): (s**-1, {_m(E4=1): d2}),
        (5, 4): (s**-3, {}),
        (6, 1): (s**3, {_m(E5=1): -(s**3)}),
        (6, 2): (s**3, {_m(E4=1): s**4 + s**2 - 1, _m(E3=1, E5=1): s**2 - s**4}),
        (6, 3): (one, {_m(E5=2): 1 - s**2}),
        (6, 4): (s**-3, {_m(E5=3): d1}),
        (6, 5): (s**-3, {}),
    }


def build_algebra(table, names, one, weights=None):
    rels = {(j - 1, i - 1): v for (j, i), v in table.items()}
    return SkewPBWAlgebra(names, rels, one=one, weights=weights)


UQ = build_algebra(uq_relations(), ("E1", "E2", "E3", "E4", "E5", "E6"),
                   RatFunc(1), ROOT_WEIGHTS)


def gen(i):
    """``E_i`` for ``i`` in 1..6."""
    return UQ.gen(i - 1)


E = {i: gen(i) for i in range(1, 7)}


def mul(x, y):
    return x * y


def commutator(x, y):
    return x * y - y * x


def omega(which, lookup=param):
    """The central elements as PBW polynomials.

    ``lookup`` resolves parameter names; swap it to perturb a scalar.
    """
    P = lookup
    if which == 1:
        return (UQ.monomial(_m(E1=1, E3=1, E5=1))
                + P("a") * UQ.monomial(_m(E1=1, E4=1))
                + P("a") * UQ.monomial(_m(E2=1, E5=1))
                + P("aprime") * UQ.monomial(_m(E3=2)))
    if which == 2:
        return (UQ.monomial(_m(E2=1, E4=1, E6=1))
                + P("b") * UQ.monomial(_m(E2=1, E5=3))
                + P("b") * UQ.monomial(_m(E3=3, E6=1))
                + P("bprime") * UQ.monomial(_m(E3=2, E5=2))
                + P("cprime") * UQ.monomial(_m(E3=1, E4=1, E5=1))
                + P("dprime") * UQ.monomial(_m(E4=2)))
    raise ValueError("omega index must be 1 or 2")


def serre_lhs(which, balanced=True):
    """Left side of a quantum Serre relation with E_alpha = E1, E_beta = E6."""
    Ea, Eb = gen(1), gen(6)
    if which == "S1":
        b1 = qbinom(4, 1, 1, balanced)
        b2 = qbinom(4, 2, 1, balanced)
        return (Ea**4 * Eb - b1 * (Ea**3 * Eb * Ea) + b2 * (Ea**2 * Eb * Ea**2)
                - b1 * (Ea * Eb * Ea**3) + Eb * Ea**4)
    if which == "S2":
        c = qbinom(2, 1, 3, balanced)
        return Eb**2 * Ea - c * (Eb * Ea * Eb) + Ea * Eb**2
    raise ValueError("which must be 'S1' or 'S2'")


def root_degree(x):
    """Common root degree of all terms, or ``INHOMOGENEOUS``."""
    if not x:
        raise ValueError("root degree of zero is undefined")
    degs = {x.alg.mono_weight(m) for m in x.terms}
    if len(degs) > 1:
        return INHOMOGENEOUS
    return degs.pop()


# -- power commutation closed forms ---------------------------------------

def _pw(i, n):
    m = [0] * 6
    m[i - 1] = n
    return m


def _mono(*pairs):
    m = [0] * 6
    for i, k in pairs:
        m[i - 1] += k
    return tuple(m)


def _family_table():
    """``(j, i, side) -> callable(n) -> {monomial: coeff}``."""
    T = {}

    def adjacent(j, i):
        T[(j, i, "left")] = lambda n: {_mono((i, n), (j, 1)): qpow(-3 * n)}
        T[(j, i, "right")] = lambda n: {_mono((i, 1), (j, n)): qpow(-3 * n)}

    for i in range(1, 6):
        adjacent(i + 1, i)

    def fam(j, i, side, scale, fam_name, extra):
        def f(n):
            out = {}
            if side == "left":
                _add_into(out, _mono((i, n), (j, 1)), scale(n))
            else:
                _add_into(out, _mono((i, 1), (j, n)), scale(n))
            if n:
                _add_into(out, extra(n), dcoef(fam_name, n))
            return out
        T[(j, i, side)] = f

    fam(6, 4, "left", lambda n: qpow(-3 * n), "d1", lambda n: _mono((4, n - 1), (5, 3)))
    fam(6, 4, "right", lambda n: qpow(-3 * n), "d1", lambda n: _mono((5, 3), (6, n - 1)))
    fam(4, 2, "left", lambda n: qpow(-3 * n), "d1", lambda n: _mono((2, n - 1), (3, 3)))
    fam(4, 2, "right", lambda n: qpow(-3 * n), "d1", lambda n: _mono((3, 3), (4, n - 1)))
    fam(3, 1, "left", lambda n: qpow(-n), "d2", lambda n: _mono((1, n - 1), (2, 1)))
    fam(3, 1, "right", lambda n: qpow(-n), "d2", lambda n: _mono((2, 1), (3, n - 1)))
    fam(5, 3, "left", lambda n: qpow(-n), "d2", lambda n: _mono((3, n - 1), (4, 1)))
    fam(5, 3, "right", lambda n: qpow(-n), "d2", lambda n: _mono((4, 1), (5, n - 1)))
    fam(6, 3, "right", lambda n: qpow(0), "d3", lambda n: _mono((5, 2), (6, n - 1)))
    fam(5, 2, "left", lambda n: qpow(0), "d3", lambda n: _mono((2, n - 1), (3, 2)))
    return T


_FAMILIES = _family_table()


def power_families():
    """Keys ``(j, i, side)`` that have a closed-form expansion."""
    return sorted(_FAMILIES)


def straighten_power(j, i, n, side="left"):
    """``E_j E_i^n`` (``side='left'``) or ``E_j^n E_i`` (``side='right'``)."""
    if not j > i:
        raise ValueError("need j > i")
    if n < 0:
        raise ValueError("n must be non-negative")
    f = _FAMILIES.get((j, i, side))
    if f is not None:
        return UQ.element(f(n))
    if side == "left":
        return gen(j) * gen(i) ** n
    return gen(j) ** n * gen(i)


def straighten_power_brute(j, i, n, side="left"):
    """The same product by repeated straightening, for cross-checks."""
    if side == "left":
        return UQ.word([j - 1] + [i - 1] * n)
    return UQ.word([j - 1] * n + [i - 1])

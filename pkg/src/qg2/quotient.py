"""The quotients A_{alpha,beta} = U_q^+(G2) / <Omega_1 - alpha, Omega_2 - beta>.

Elements are kept in the basis ``e1^i e2^j e3^eps1 e4^eps2 e5^k e6^l`` with
``eps1, eps2 in {0, 1}``.  Reduction rewrites ``e4^2`` and then ``e3^2`` at the
leftmost spot a monomial allows, using

    e4^2 -> e4^2 - (Omega_2 - beta) / d'
    e3^2 -> e3^2 - (Omega_1 - alpha) / a'

Both differences are central, so splicing them in anywhere stays inside the
ideal.  Termination is checked by a rule-application cap rather than proved.
"""

from __future__ import annotations

from math import comb

from .coeff import RatFunc, dcoef, param, q, to_ratfunc
from .pbw import UQ, PBWElement, _add_into, _m, format_terms, omega
from .torus import quotient_embedding

__all__ = [
    "Params",
    "Reducer",
    "Quotient",
    "QuotElem",
    "NonTermination",
    "quotient",
    "reduce",
    "quot_mul",
    "square_identity_check",
    "square_identity_terms",
    "basis_count",
    "basis_count_formula",
    "basis_monomials",
    "normality_check",
    "normal_element_alpha0",
    "normal_element_beta0",
]

RULE_CAP = 10_000
E_NAMES = ("e1", "e2", "e3", "e4", "e5", "e6")


class NonTermination(RuntimeError):
    """The rewriting loop hit its rule-application cap."""


class Params:
    __slots__ = ("alpha", "beta")

    def __init__(self, alpha, beta):
        self.alpha, self.beta = to_ratfunc(alpha), to_ratfunc(beta)
        if not self.alpha and not self.beta:
            raise ValueError("(alpha, beta) must not both be zero")

    def key(self):
        return (self.alpha, self.beta)

    def __eq__(self, other):
        return isinstance(other, Params) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Params(alpha={self.alpha}, beta={self.beta})"


class Reducer:
    """Square-elimination rewriting over any ``SkewPBWAlgebra``.

    ``rules`` is a priority-ordered list of ``(generator index, rhs)``: a
    monomial whose exponent at that index is ``>= 2`` has one square replaced
    by ``rhs`` right after the preceding generators, then is re-straightened.
    """

    def __init__(self, alg, rules, cap=RULE_CAP, names=None):
        self.alg = alg
        self.rules = list(rules)
        self.cap = cap
        self.names = names or alg.names
        self._cache = {}
        self._budget = cap
        self._active = set()

    def _violation(self, m):
        for k, rhs in self.rules:
            if m[k] >= 2:
                return k, rhs
        return None

    def is_normal(self, m):
        return self._violation(m) is None

    def reduce_mono(self, m):
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        hit = self._violation(m)
        if hit is None:
            res = {m: self.alg.one}
        else:
            k, rhs = hit
            if m in self._active:
                raise NonTermination(
                    f"rewriting cycle through {format_terms([(m, 1)], self.names)}")
            self._budget -= 1
            if self._budget < 0:
                raise NonTermination(f"more than {self.cap} rule applications")
            self._active.add(m)
            try:
                n = self.alg.n
                prefix = tuple(m[:k]) + (0,) * (n - k)
                suffix = [0] * k + list(m[k:])
                suffix[k] -= 2
                one = self.alg.one
                spliced = self.alg.mul_terms(self.alg.mul_terms({prefix: one}, rhs),
                                             {tuple(suffix): one})
                res = self._reduce_dict(spliced)
            finally:
                self._active.discard(m)
        self._cache[m] = res
        return res

    def _reduce_dict(self, terms):
        acc = {}
        for m, c in terms.items():
            for t, ct in self.reduce_mono(m).items():
                _add_into(acc, t, c * ct)
        return acc

    def reduce_terms(self, terms):
        self._budget = self.cap
        self._active.clear()
        return self._reduce_dict(terms)


class Quotient:
    """Reduction engine for one parameter pair.

    ``rules`` selects which squares get eliminated; ``("e4",)`` gives the
    intermediate algebra where only the second central relation is imposed.
    """

    def __init__(self, alpha, beta, rules=("e4", "e3")):
        self.alpha = to_ratfunc(alpha)
        self.beta = to_ratfunc(beta)
        self.rules = tuple(rules)
        if "e3" in self.rules and not self.alpha and not self.beta:
            raise ValueError("(alpha, beta) must not both be zero")
        e4sq = UQ.monomial(_m(E4=2))
        e3sq = UQ.monomial(_m(E3=2))
        self.rhs4 = (e4sq - (omega(2) - self.beta) / param("dprime")).terms
        self.rhs3 = (e3sq - (omega(1) - self.alpha) / param("aprime")).terms
        table = {"e4": (3, self.rhs4), "e3": (2, self.rhs3)}
        self.reducer = Reducer(UQ, [table[r] for r in self.rules], names=E_NAMES)
        self._emb = None

    def reduce_terms(self, terms):
        return self.reducer.reduce_terms(terms)

    def reduce(self, x):
        """Canonical form of an NCPoly (or scalar) in this quotient."""
        if isinstance(x, QuotElem):
            x = x.lift()
        if not isinstance(x, PBWElement):
            x = UQ.scalar(x)
        return QuotElem(self, self.reduce_terms(x.terms))

    # -- constructors ----------------------------------------------------
    def gen(self, i):
        return QuotElem(self, {UQ.gen_mono(i - 1): RatFunc(1)})

    def scalar(self, c):
        c = to_ratfunc(c)
        return QuotElem(self, {UQ.unit: c} if c else {})

    def monomial(self, m, c=1):
        return self.reduce(UQ.monomial(tuple(m), to_ratfunc(c)))

    def zero(self):
        return QuotElem(self, {})

    def embedding(self):
        if self._emb is None:
            self._emb = quotient_embedding(self.alpha, self.beta)
        return self._emb

    def torus_image(self, x):
        if isinstance(x, QuotElem):
            x = x.terms
        elif isinstance(x, PBWElement):
            x = x.terms
        return self.embedding().poly(x)

    def is_basis_mono(self, m):
        return self.reducer.is_normal(tuple(m))

    def __repr__(self):
        return f"Quotient(alpha={self.alpha}, beta={self.beta}, rules={self.rules})"


class QuotElem:
    """Element of a quotient in canonical basis form."""

    __slots__ = ("quot", "terms")

    def __init__(self, quot, terms):
        self.quot = quot
        self.terms = {m: c for m, c in terms.items() if c}

    def _wrap(self, other):
        if isinstance(other, QuotElem):
            if other.quot is not self.quot and (
                    other.quot.alpha, other.quot.beta, other.quot.rules) != (
                    self.quot.alpha, self.quot.beta, self.quot.rules):
                raise ValueError("parameter mismatch")
            return other
        return self.quot.scalar(other)

    def __add__(self, other):
        other = self._wrap(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return QuotElem(self.quot, acc)

    __radd__ = __add__

    def __neg__(self):
        return QuotElem(self.quot, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, QuotElem):
            other = self._wrap(other)
            return QuotElem(self.quot, self.quot.reduce_terms(
                UQ.mul_terms(self.terms, other.terms)))
        c = to_ratfunc(other)
        return QuotElem(self.quot, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = to_ratfunc(other)
        return QuotElem(self.quot, {m: c * v for m, v in self.terms.items()})

    def __truediv__(self, other):
        return self * to_ratfunc(other).inv()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("non-negative integer powers only")
        out = self.quot.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._wrap(other)
        except (TypeError, ValueError):
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lift(self):
        return PBWElement(UQ, dict(self.terms))

    def coeff(self, m):
        return self.terms.get(tuple(m), RatFunc(0))

    def torus_image(self):
        return self.quot.torus_image(self)

    def __str__(self):
        return format_terms(sorted(self.terms.items()), E_NAMES)

    def __repr__(self):
        return f"<{self}>"


_QUOTIENTS = {}


def quotient(alpha, beta, rules=("e4", "e3")):
    """Shared engine for a parameter pair (reductions are memoised)."""
    key = (to_ratfunc(alpha), to_ratfunc(beta), tuple(rules))
    eng = _QUOTIENTS.get(key)
    if eng is None:
        eng = _QUOTIENTS[key] = Quotient(*key)
    return eng


def reduce(x, p):
    """Canonical form of ``x`` in ``A_{alpha,beta}``; ``p`` is a Params or pair."""
    if isinstance(p, Params):
        p = p.key()
    return quotient(*p).reduce(x)


def quot_mul(x, y):
    return x * y


# -- square identities ---------------------------------------------------

def square_identity_terms(which, alpha, beta, lookup=param, corrected=False):
    """``(lhs monomial, [(coeff, monomial), ...])`` as printed in the source table.

    ``corrected=True`` swaps in the three item-4 coefficients that make the
    identity hold: ``k25`` gains a factor ``alpha``, and in ``k9`` and ``k31``
    the factor ``d2[2]`` multiplying ``b9`` (resp. ``b10``) becomes
    ``d2[1] / (1 + q)``.
    """
    P = lookup
    A, B = to_ratfunc(alpha), to_ratfunc(beta)
    c1, c2, c3 = P("c1"), P("c2"), P("c3")
    b = {i: P(f"b{i}") for i in range(1, 16)}
    if which == 1:
        return _m(E3=2), [
            (c1 * A, _m()), (c2, _m(E2=1, E5=1)), (c2, _m(E1=1, E4=1)),
            (c3, _m(E1=1, E3=1, E5=1))]
    if which == 2:
        return _m(E4=2), [
            (b[1] * B, _m()), (b[2], _m(E2=1, E4=1, E6=1)), (b[3], _m(E2=1, E5=3)),
            (b[4] * A, _m(E3=1, E6=1)), (b[5], _m(E2=1, E3=1, E5=1, E6=1)),
            (b[6], _m(E1=1, E3=1, E4=1, E6=1)), (b[7] * A, _m(E1=1, E5=1, E6=1)),
            (b[8], _m(E1=1, E2=1, E5=2, E6=1)), (b[9], _m(E1=2, E4=1, E5=1, E6=1)),
            (b[10], _m(E1=2, E3=1, E5=2, E6=1)), (b[11] * A, _m(E5=2)),
            (b[12], _m(E1=1, E3=1, E5=3)), (b[13], _m(E3=1, E4=1, E5=1)),
            (b[14], _m(E1=1, E4=1, E5=2))]
    if which == 3:
        return _m(E3=2, E4=1), [
            (c1 * A, _m(E4=1)), (q**-3 * c2, _m(E2=1, E4=1, E5=1)),
            (c2 * b[4] * A, _m(E1=1, E3=1, E6=1)), (b[15], _m(E1=1, E3=1, E4=1, E5=1)),
            (B * b[1] * c2, _m(E1=1)), (c2 * b[3], _m(E1=1, E2=1, E5=3)),
            (c2 * b[5], _m(E1=1, E2=1, E3=1, E5=1, E6=1)),
            (c2 * b[6], _m(E1=2, E3=1, E4=1, E6=1)), (c2 * b[7] * A, _m(E1=2, E5=1, E6=1)),
            (c2 * b[11] * A, _m(E1=1, E5=2)), (c2 * b[12], _m(E1=2, E3=1, E5=3)),
            (c2 * b[8], _m(E1=2, E2=1, E5=2, E6=1)), (c2 * b[9], _m(E1=3, E4=1, E5=1, E6=1)),
            (c2 * b[10], _m(E1=3, E3=1, E5=2, E6=1)), (c2 * b[14], _m(E1=2, E4=1, E5=2)),
            (c2 * b[2], _m(E1=1, E2=1, E4=1, E6=1))]
    if which == 4:
        k = {i: P(f"k{i}") for i in range(1, 32)}
        k25 = k[25]
        if corrected:
            fix = dcoef("d2", 1) / (1 + q) - dcoef("d2", 2)
            k[9] = k[9] + b[9] * fix
            k[31] = k[31] + b[10] * fix
            k25 = k25 * A
        return _m(E3=1, E4=2), [
            (B * b[1], _m(E3=1)), (k[1], _m(E2=1, E3=1, E4=1, E6=1)),
            (k[2], _m(E2=1, E3=1, E5=3)), (k[3] * A**2, _m(E6=1)),
            (k[4] * A, _m(E2=1, E5=1, E6=1)), (k[5] * A, _m(E1=1, E4=1, E6=1)),
            (k[6] * A, _m(E1=1, E3=1, E5=1, E6=1)), (k[7], _m(E2=2, E5=2, E6=1)),
            (k[8] * B, _m(E1=1, E5=1)), (k[9], _m(E1=1, E2=1, E4=1, E5=1, E6=1)),
            (k[10], _m(E1=3, E2=1, E5=2, E6=2)), (k[11] * A, _m(E4=1, E5=1)),
            (k[12] * A, _m(E1=3, E5=1, E6=2)), (k[13], _m(E1=2, E3=1, E4=1, E5=1, E6=1)),
            (k[14] * B, _m(E1=2, E6=1)), (b[11] * A, _m(E3=1, E5=2)),
            (k[15], _m(E1=2, E2=1, E4=1, E6=2)), (k[16], _m(E1=2, E2=1, E5=3, E6=1)),
            (k[17] * A, _m(E1=2, E3=1, E6=2)), (k[18], _m(E1=2, E2=1, E3=1, E5=1, E6=2)),
            (k[19], _m(E1=3, E3=1, E4=1, E6=2)), (k[20], _m(E1=4, E4=1, E5=1, E6=2)),
            (k[21] * A, _m(E1=2, E5=2, E6=1)), (k[22], _m(E1=4, E3=1, E5=2, E6=2)),
            (k[23], _m(E1=3, E3=1, E5=3, E6=1)), (k[24], _m(E1=3, E4=1, E5=2, E6=1)),
            (k25, _m(E1=1, E5=3)), (k[26], _m(E1=2, E4=1, E5=3)),
            (k[27], _m(E1=2, E3=1, E5=4)), (k[28], _m(E2=1, E4=1, E5=2)),
            (k[29], _m(E1=1, E3=1, E4=1, E5=2)), (k[30], _m(E1=1, E2=1, E5=4)),
            (k[31], _m(E1=1, E2=1, E3=1, E5=2, E6=1))]
    raise ValueError("which must be 1..4")


def square_identity_check(which, p, lookup=param, corrected=False):
    """``reduce(lhs - rhs)`` for one square identity (``which`` in 1..4); zero when it holds."""
    if isinstance(p, Params):
        p = p.key()
    alpha, beta = p
    lhs, rhs = square_identity_terms(which, alpha, beta, lookup, corrected)
    terms = {lhs: RatFunc(1)}
    for c, m in rhs:
        _add_into(terms, m, -c)
    return quotient(alpha, beta).reduce(PBWElement(UQ, terms))


# -- basis growth ---------------------------------------------------------

def basis_monomials(d):
    """Basis monomials of total degree ``<= d``, in lex order."""
    out = []
    for total in range(d + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                for e1 in (0, 1):
                    for e2 in (0, 1):
                        rest = total - i - j - e1 - e2
                        if rest < 0:
                            continue
                        for k in range(rest + 1):
                            out.append((i, j, e1, e2, k, rest - k))
    return sorted(out)


def basis_count(d):
    """Number of basis monomials of total degree ``<= d`` (by enumeration)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    count = 0
    for e1 in (0, 1):
        for e2 in (0, 1):
            r = d - e1 - e2
            # i + j + k + l <= r: (i, j) of degree s, then (k, l) of degree <= r - s
            for s in range(r + 1):
                count += (s + 1) * comb(r - s + 2, 2)
    return count


def basis_count_formula(d):
    return sum(comb(d - e1 - e2 + 4, 4) for e1 in (0, 1) for e2 in (0, 1)
               if d - e1 - e2 >= 0)


# -- normal elements ------------------------------------------------------

def normal_element_alpha0(quot):
    """``e3 e5 + a e4``: normal (indeed a unit) when ``alpha = 0``."""
    return quot.reduce(UQ.monomial(_m(E3=1, E5=1)) + param("a") * UQ.monomial(_m(E4=1)))


def normal_element_beta0(quot):
    """Degree-(6,3) element that is normal when ``beta = 0``."""
    c = -(q**4 - 2 * q**2 + 1) / (q**4 + q**2 + 1)
    return quot.reduce((q**-3 - q**-9) * UQ.monomial(_m(E2=1, E4=1))
                       + c * UQ.monomial(_m(E3=3)))


def normality_check(h):
    """Scalars ``lambda_i`` with ``h e_i = lambda_i e_i h``, or ``None`` per generator."""
    quot = h.quot
    out = []
    for i in range(1, 7):
        g = quot.gen(i)
        left, right = h * g, g * h
        if not right:
            out.append(RatFunc(0) if not left else None)
            continue
        m = min(right.terms)
        lam = left.coeff(m) / right.terms[m]
        out.append(lam if left == lam * right else None)
    return out

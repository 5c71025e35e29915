"""Exact arithmetic in the coefficient field K = Q(q).

Elements are stored as ``q**shift * num / den`` where ``num`` and ``den``
are ``flint.fmpq_poly`` values with nonzero constant terms, ``den`` is
monic and ``gcd(num, den) == 1``.  With those rules the representation is
canonical, so equality and hashing are structural.

Also houses the quantum integers and binomials, the scalar parameter table
used throughout the package and the power-commutation coefficients
``d1[n]``, ``d2[n]``, ``d3[n]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

__all__ = [
    "RatFunc",
    "ZeroDivision",
    "PoleError",
    "q",
    "qpow",
    "qint",
    "qbinom",
    "param",
    "param_names",
    "dcoef",
    "eval_at",
    "to_ratfunc",
]


class ZeroDivision(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleError(ValueError):
    """Evaluation point is a pole, zero, or excluded root of unity."""


_ONE_POLY = flint.fmpq_poly([1])
_ZERO_POLY = flint.fmpq_poly([])


def _valuation(p):
    i = 0
    while p[i] == 0:
        i += 1
    return i


def _to_fmpq(c):
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, Rational):
        return flint.fmpq(int(c.numerator), int(c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


class RatFunc:
    """A rational function in ``q`` with exact rational coefficients."""

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, num=0, den=None, shift=0):
        if isinstance(num, RatFunc):
            self.shift, self.num, self.den = num.shift, num.num, num.den
            self._hash = num._hash
            return
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly([_to_fmpq(num)])
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly([_to_fmpq(den)])
        self._set(num, den, shift)

    @classmethod
    def _raw(cls, num, den, shift):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj.shift, obj._hash = num, den, shift, None
        return obj

    def _set(self, num, den, shift):
        self._hash = None
        if den.is_zero():
            raise ZeroDivision("zero denominator")
        if num.is_zero():
            self.num, self.den, self.shift = _ZERO_POLY, _ONE_POLY, 0
            return
        v = _valuation(num)
        if v:
            num = num.right_shift(v)
            shift += v
        v = _valuation(den)
        if v:
            den = den.right_shift(v)
            shift -= v
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        self.num, self.den, self.shift = num, den, shift

    @classmethod
    def from_laurent(cls, terms):
        """Build from a mapping ``{exponent: rational coefficient}``."""
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls()
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = _to_fmpq(c)
        return cls(flint.fmpq_poly(coeffs), None, lo)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.shift == 0 and self.num.is_one() and self.den.is_one()

    def is_constant(self):
        return self.shift == 0 and self.num.is_constant() and self.den.is_one()

    def is_laurent(self):
        return self.den.is_one()

    def constant_value(self):
        """The value as a Fraction, for constants only."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        c = self.num[0]
        return Fraction(int(c.p), int(c.q))

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        if not self:
            return self
        return RatFunc._raw(-self.num, self.den, self.shift)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        s1, s2 = self.shift, other.shift
        m = min(s1, s2)
        n1 = self.num.left_shift(s1 - m) if s1 != m else self.num
        n2 = other.num.left_shift(s2 - m) if s2 != m else other.num
        if self.den == other.den:
            if self.den.is_one():
                num = n1 + n2
                if num.is_zero():
                    return RatFunc()
                v = _valuation(num)
                if v:
                    num = num.right_shift(v)
                return RatFunc._raw(num, _ONE_POLY, m + v)
            return RatFunc(n1 + n2, self.den, m)
        return RatFunc(n1 * other.den + n2 * self.den, self.den * other.den, m)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return RatFunc()
        shift = self.shift + other.shift
        if self.den.is_one() and other.den.is_one():
            return RatFunc._raw(self.num * other.num, _ONE_POLY, shift)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        # cross-cancel so that no full gcd of the products is needed
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFunc._raw(num, den, shift)

    __rmul__ = __mul__

    def inv(self):
        if not self:
            raise ZeroDivision("inverse of zero")
        num, den = self.den, self.num
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFunc._raw(num, den, -self.shift)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        if not self:
            return RatFunc(1) if n == 0 else self
        return RatFunc._raw(self.num ** n, self.den ** n, self.shift * n)

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.shift == other.shift and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shift, str(self.num), str(self.den)))
        return self._hash

    # -- evaluation / printing -------------------------------------------
    def substitute(self, q0):
        """Exact value at ``q = q0`` with only a pole check."""
        q0 = _to_fmpq(q0)
        if q0 == 0 and (self.shift < 0):
            raise PoleError("pole at q = 0")
        d = self.den(q0)
        if d == 0:
            raise PoleError(f"pole at q = {q0}")
        v = self.num(q0) / d * (q0 ** self.shift if self.shift else 1)
        return Fraction(int(v.p), int(v.q))

    def _laurent_terms(self, poly, shift):
        out = []
        for i, c in enumerate(poly.coeffs()):
            if c != 0:
                out.append((i + shift, Fraction(int(c.p), int(c.q))))
        out.sort(key=lambda t: -t[0])
        return out

    def numerator_terms(self):
        return self._laurent_terms(self.num, self.shift)

    def denominator_terms(self):
        return self._laurent_terms(self.den, 0)

    def __str__(self):
        num = _format_laurent(self.numerator_terms())
        if self.den.is_one():
            return num
        den = _format_laurent(self.denominator_terms())
        if len(self.numerator_terms()) > 1:
            num = f"({num})"
        if len(self.denominator_terms()) > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self):
        return f"RatFunc({self})"


def _format_laurent(terms, var="q"):
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        neg = c < 0
        c = -c if neg else c
        if e == 0:
            body = str(c)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if c == 1 else f"{c}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, flint.fmpq)) or isinstance(x, Rational):
        if x == 0:
            return _ZERO
        return RatFunc(flint.fmpq_poly([_to_fmpq(x)]))
    return NotImplemented


def to_ratfunc(x):
    """Coerce an int, Fraction or RatFunc to RatFunc."""
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} to RatFunc")
    return r


_ZERO = RatFunc()
q = RatFunc(flint.fmpq_poly([0, 1]))
ONE = RatFunc(1)


@lru_cache(maxsize=None)
def qpow(n):
    """``q**n`` for any integer ``n``."""
    return RatFunc._raw(_ONE_POLY, _ONE_POLY, n)


def eval_at(x, q0):
    """Evaluate ``x`` at a rational point, rejecting ``0`` and ``+-1``.

    ``q`` must not be a root of unity, so the points where all quantum
    integers degenerate are refused outright.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise PoleError("q0 = 0 is not admissible")
    if q0 in (1, -1):
        raise PoleError(f"q0 = {q0} is a root of unity")
    return to_ratfunc(x).substitute(q0)


# -- quantum numbers ------------------------------------------------------

def qint(n, base=1):
    """Balanced quantum integer ``[n]`` in the variable ``q**base``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return RatFunc.from_laurent({base * (n - 1 - 2 * k): 1 for k in range(n)})


def _qfact(n, base):
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k, base)
    return out


def qbinom(n, i, d=1, balanced=True):
    """Gaussian binomial ``[n choose i]`` in the variable ``q**d``.

    With ``balanced=False`` the non-symmetric convention
    ``(1-z^n)...(1-z^{n-i+1}) / ((1-z)...(1-z^i))`` is used instead; it is
    kept only as a negative control for the Serre relations.
    """
    if not 0 <= i <= n or d < 1:
        raise ValueError("need 0 <= i <= n and d >= 1")
    if balanced:
        return _qfact(n, d) / (_qfact(i, d) * _qfact(n - i, d))
    z = qpow(d)
    num = den = ONE
    for k in range(i):
        num = num * (1 - z ** (n - k))
        den = den * (1 - z ** (k + 1))
    return num / den


# -- d1[n], d2[n], d3[n] --------------------------------------------------

def _d1_base():
    return -(q**4 - 2 * q**2 + 1) / (q**4 + q**2 + 1)


def _d2_base():
    return -(q + q**-1 + q**-3)


def _d3_base():
    return 1 - q**2


@lru_cache(maxsize=None)
def dcoef(family, n):
    """Closed-form power-commutation coefficient ``d1[n]``, ``d2[n]`` or ``d3[n]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return _ZERO
    if family == "d1":
        return qpow(3 * (1 - n)) * _d1_base() * (1 - qpow(-6 * n)) / (1 - qpow(-6))
    if family == "d2":
        return qpow(1 - n) * _d2_base() * (1 - qpow(-2 * n)) / (1 - qpow(-2))
    if family == "d3":
        return _d3_base() * (1 - qpow(-6 * n)) / (1 - qpow(-6))
    raise KeyError(f"unknown coefficient family {family!r}")


# -- parameter table ------------------------------------------------------

def _build_params():
    P = {}
    d21 = dcoef("d2", 1)
    d22 = dcoef("d2", 2)
    c = q**4 + q**2 + 1
    P["a"] = (q**2 + 1 + q**-2) / (q**-2 - 1)
    P["b"] = -(q**7 - 2 * q**5 + q**3) / (c * (1 - q**-6))
    P["g"] = (q + q**-1 + q**-3) / (1 - q**-2) ** 2
    P["f"] = (1 - q**2) / (1 - q**-2)
    P["h"] = (q + q**-1) / (q**-2 - 1)
    P["s"] = (1 - q**2) / (1 - q**-6)
    P["t"] = (q**-1 - q) / (1 - q**-6)
    P["u"] = (q + q**-1 - q**-3) / (1 - q**-6)
    P["p"] = c / (q**2 - 1)
    P["r"] = -1 / (1 - q**-6)
    P["e"] = -(q**7 + q**5 + q**3) / (q**4 - 2 * q**2 + 1)
    P["qprimeprime"] = (q**7 - 2 * q**5 + q**3) / c
    P["n"] = q**12 / c**3
    P["qprime"] = -(q**2 + 1 + q**-2)
    P["aprime"] = P["a"] * P["f"] + P["h"] * q
    P["bprime"] = (q**13 - q**11) / c**2
    P["dprime"] = q**12 / (q**6 - 1)
    P["cprime"] = -(q**9) / c
    P["beta0"] = -1 / P["dprime"]

    a, b, bp, cp = P["a"], P["b"], P["bprime"], P["cprime"]
    c1 = 1 / P["aprime"]
    c2 = -a * c1
    c3 = -c1
    P.update(c1=c1, c2=c2, c3=c3)

    B = {}
    b1 = B[1] = 1 / P["dprime"]
    B[2] = b1 * b * c2 * (q + q**-1 + q**-3) - b1
    B[3] = -bp * b1 * c2 - b * b1
    B[4] = -b1 * b * c1
    B[5] = b1 * b * (c3 * (q + q**-1 + q**-3) - q**-3 * c2)
    B[6] = -q**-1 * c2 * b1 * b
    B[7] = -q**-1 * b1 * b * c1 * c3
    B[8] = B[9] = -q**-1 * b1 * b * c2 * c3
    B[10] = -q**-1 * c3**2 * b1 * b
    B[11] = -bp * b1 * c1
    B[12] = -bp * b1 * c3
    B[13] = -b1 * cp
    B[14] = -bp * b1 * c2
    B[15] = q**-3 * c3 + c2 * B[13]
    for i, v in B.items():
        P[f"b{i}"] = v

    K = {}
    K[1] = q**-3 * B[2] + B[6] * d21
    K[2] = q**-3 * B[3] + B[12] * d21
    K[3] = B[4] * c1
    K[4] = B[4] * c2 + q**-3 * B[5] * c1 + B[7] * d21
    K[5] = B[4] * c2 + q**-1 * B[6] * c1
    K[6] = c3 * B[4] + q**-1 * B[7] + q**-3 * B[4] * B[13] * c2
    K[7] = q**-3 * c2 * B[5] + B[8] * d21
    K[8] = B[1] * B[13] * c2
    K[9] = q**-4 * B[6] * c2 + B[9] * d22 + q**-3 * B[2] * c2 * B[13] + q**-3 * B[5] * c2
    K[10] = q**-1 * B[6] * B[8] * c2
    K[11] = B[13] * c1
    K[12] = q**-1 * B[6] * B[7] * c2
    K[13] = (q**-4 * B[6] * c3 + q**-2 * B[9] + q**-3 * B[6] * B[13] * c2
             + q**-1 * B[6] * B[13] * c2)
    K[14] = q**-1 * B[1] * B[6] * c2
    K[15] = q**-1 * B[2] * B[6] * c2
    K[16] = q**-1 * B[3] * B[6] * c2 + q**-2 * B[10] * c2 + q**-3 * B[8] * B[13] * c2
    K[17] = q**-1 * B[4] * B[6] * c2
    K[18] = q**-1 * B[5] * B[6] * c2
    K[19] = q**-1 * B[6] ** 2 * c2
    K[20] = q**-1 * B[6] * B[9] * c2
    K[21] = q**-1 * B[6] * B[11] * c2 + q**-2 * B[10] * c1 + q**-3 * B[7] * B[13] * c2
    K[22] = q**-1 * B[6] * B[10] * c2
    K[23] = q**-1 * B[6] * B[12] * c2 + q**-2 * B[10] * c3 + q**-3 * B[10] * B[13] * c2
    K[24] = q**-1 * B[6] * B[14] * c2 + q**-2 * B[10] * c2 + q**-3 * B[9] * B[13] * c2
    K[25] = q**-1 * B[12] * c1 + B[11] * B[13] * c2
    K[26] = q**-1 * B[12] * c2 + B[13] * B[14] * c2
    K[27] = q**-1 * B[12] * c3 + B[12] * B[13] * c2
    K[28] = q**-3 * B[13] * c2 + B[14] * d21
    K[29] = B[13] * B[15] + q**-1 * B[14]
    K[30] = B[3] * B[13] * c2 + q**-1 * B[12] * c2
    K[31] = q**-3 * B[5] * B[13] * c2 + q**-3 * B[5] * c3 + q**-4 * B[8] + B[10] * d22
    for i, v in K.items():
        P[f"k{i}"] = v
    return P


_ALIASES = {
    "a'": "aprime", "b'": "bprime", "c'": "cprime", "d'": "dprime",
    "q'": "qprime", "q''": "qprimeprime", "β₀": "beta0", "β0": "beta0",
}

_PARAMS = None


def _table():
    global _PARAMS
    if _PARAMS is None:
        _PARAMS = _build_params()
    return _PARAMS


def param_names():
    return sorted(_table(), key=_natural_key)


def _natural_key(name):
    m = re.fullmatch(r"([a-z]+)(\d*)", name)
    if m:
        return (m.group(1), int(m.group(2) or 0))
    return (name, 0)


def param(name):
    """Look up a named scalar parameter; raises ``KeyError`` if unknown."""
    key = _ALIASES.get(name, name)
    table = _table()
    if key not in table:
        raise KeyError(f"unknown parameter {name!r}")
    return table[key]

"""The one-parameter family A_z, its value at z = 1, and a Weyl-type algebra.

A_z uses the straightening relations of U_q^+(G2) with the variable renamed,
plus two rescaled central relations.  At ``z = 1`` these collapse to the
rational algebra ``CLASSICAL``.  ``weyl_to_classical`` and
``classical_to_weyl`` identify it with ``WEYL``, the second Weyl algebra with a
central square root of 1/9 adjoined.  In check labels ``fwd`` is the first
map and ``back`` the second.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coeff import PoleError, RatFunc, q
from .pbw import PBWElement, SkewPBWAlgebra, _m, build_algebra, format_terms, uq_relations
from .quotient import Reducer

__all__ = [
    "family_relations",
    "family_central_relations",
    "CLASSICAL_RELATIONS",
    "CLASSICAL",
    "WEYL",
    "classical_mul",
    "weyl_mul",
    "e",
    "f",
    "weyl_to_classical",
    "classical_to_weyl",
    "specialize_z1",
    "scaled_relation_comparison",
    "iso_check",
    "flatness_check",
]

z = q  # A_z reuses RatFunc; only the printed name of the variable differs


def family_relations():
    """Straightening relations of A_z (same table, variable ``z``)."""
    return uq_relations(z)


def family_central_relations():
    """The two rescaled central relations of A_z as ``(terms, constant)``."""
    c = z**4 + z**2 + 1
    r1 = {
        _m(E1=1, E3=1, E5=1): z**-2 - 1,
        _m(E1=1, E4=1): z**2 + 1 + z**-2,
        _m(E2=1, E5=1): z**2 + 1 + z**-2,
        _m(E3=2): -(z**4),
    }
    k = (2 * z**-1 - z**-3 - z) / c
    r2 = {
        _m(E2=1, E4=1, E6=1): z**6 - 1,
        _m(E2=1, E5=3): k,
        _m(E3=3, E6=1): k,
        _m(E3=2, E5=2): (z**6 - 1) * (z**13 - z**11) / c**2,
        _m(E3=1, E4=1, E5=1): -(z**9) * (z**6 - 1) / c,
        _m(E4=2): z**12,
    }
    return [(r1, z**-2 - 1), (r2, RatFunc(Fraction(1, 9)))]


# -- the algebra CLASSICAL --------------------------------------------------------

F = Fraction
CLASSICAL_RELATIONS = {
    (2, 1): (F(1), {}),
    (3, 1): (F(1), {_m(E2=1): F(-3)}),
    (3, 2): (F(1), {}),
    (4, 1): (F(1), {}),
    (4, 2): (F(1), {}),
    (4, 3): (F(1), {}),
    (5, 1): (F(1), {_m(E3=1): F(-2)}),
    (5, 2): (F(1), {}),
    (5, 3): (F(1), {_m(E4=1): F(-3)}),
    (5, 4): (F(1), {}),
    (6, 1): (F(1), {_m(E5=1): F(-1)}),
    (6, 2): (F(1), {_m(E4=1): F(1)}),
    (6, 3): (F(1), {}),
    (6, 4): (F(1), {}),
    (6, 5): (F(1), {}),
}
# e4^2 = 1/9 and e3^2 = 3 e1 e4 + 3 e2 e5
CLASSICAL_SQUARES = {
    3: {_m(): F(1, 9)},
    2: {_m(E1=1, E4=1): F(3), _m(E2=1, E5=1): F(3)},
}

_CLASSICAL_ALG = build_algebra(CLASSICAL_RELATIONS, ("e1", "e2", "e3", "e4", "e5", "e6"), F(1))
_CLASSICAL_RED = Reducer(_CLASSICAL_ALG, [(3, CLASSICAL_SQUARES[3]), (2, CLASSICAL_SQUARES[2])])


class _ReducedAlgebra:
    """A skew-PBW algebra followed by square elimination."""

    def __init__(self, alg, reducer):
        self.alg, self.reducer = alg, reducer
        self.names = alg.names

    def normal(self, x):
        return PBWElement(self.alg, self.reducer.reduce_terms(x.terms))

    def mul(self, x, y):
        return PBWElement(self.alg, self.reducer.reduce_terms(self.alg.mul_terms(x.terms, y.terms)))

    def gen(self, i):
        return self.alg.gen(i)

    def scalar(self, c):
        return self.alg.scalar(c)

    def word(self, letters):
        out = self.scalar(1)
        for g in letters:
            out = self.mul(out, self.gen(g))
        return out


CLASSICAL = _ReducedAlgebra(_CLASSICAL_ALG, _CLASSICAL_RED)

# WEYL: generators f2..f6 (0-based 0..4); f6 f2 = f2 f6 + 1, f5 f3 = f3 f5 - 1
WEYL_RELATIONS = {
    (4, 0): (F(1), {(0, 0, 0, 0, 0): F(1)}),
    (3, 1): (F(1), {(0, 0, 0, 0, 0): F(-1)}),
}
_WEYL_ALG = SkewPBWAlgebra(("f2", "f3", "f4", "f5", "f6"), WEYL_RELATIONS, one=F(1))
_WEYL_RED = Reducer(_WEYL_ALG, [(2, {(0, 0, 0, 0, 0): F(1, 9)})])
WEYL = _ReducedAlgebra(_WEYL_ALG, _WEYL_RED)


def e(i):
    """``e_i`` in CLASSICAL (``i`` in 1..6)."""
    return CLASSICAL.gen(i - 1)


def f(i):
    """``f_i`` in WEYL (``i`` in 2..6)."""
    return WEYL.gen(i - 2)


def classical_mul(x, y):
    return CLASSICAL.mul(x, y)


def weyl_mul(x, y):
    return WEYL.mul(x, y)


def _hom(x, images, target):
    acc = target.scalar(0)
    cache = {}
    for m, c in x.terms.items():
        if m not in cache:
            val = target.scalar(1)
            for k, e in enumerate(m):
                for _ in range(e):
                    val = target.mul(val, images[k])
            cache[m] = val
        acc = acc + c * cache[m]
    return acc


def _to_classical_images():
    g = [e(i) for i in range(1, 7)]
    return [9 * CLASSICAL.mul(g[1], g[3]), 3 * CLASSICAL.mul(g[2], g[3]), g[3], g[4], g[5]]


def _to_weyl_images():
    fs = {i: f(i) for i in range(2, 7)}
    W = WEYL
    e1 = 3 * W.mul(W.mul(fs[3], fs[3]), fs[4]) - W.mul(fs[2], fs[5])
    return [e1, W.mul(fs[2], fs[4]), 3 * W.mul(fs[3], fs[4]), fs[4], fs[5], fs[6]]


def weyl_to_classical(x):
    """WEYL -> CLASSICAL."""
    return _hom(x, _to_classical_images(), CLASSICAL)


def classical_to_weyl(x):
    """CLASSICAL -> WEYL."""
    return _hom(x, _to_weyl_images(), WEYL)


# -- checks ------------------------------------------------------------------

def _clean(delta):
    return {m: v for m, v in delta.items() if v}


def specialize_z1():
    """Compare A_z at z = 1 with the CLASSICAL relation list; returns ``[(name, ok, detail)]``."""
    out = []
    for key, (c, delta) in sorted(family_relations().items()):
        try:
            c1 = c.substitute(1)
            d1 = _clean({m: v.substitute(1) for m, v in delta.items()})
        except PoleError as exc:
            out.append((f"e{key[0]}e{key[1]}", False, f"pole at z=1: {exc}"))
            continue
        want_c, want_d = CLASSICAL_RELATIONS[key]
        ok = c1 == want_c and d1 == _clean(want_d)
        out.append((f"e{key[0]}e{key[1]}", ok, f"c={c1}, delta={_fmt(d1)}"))
    names = ("central relation 1", "central relation 2")
    targets = [
        # e3^2 - 3 e1 e4 - 3 e2 e5 = 0
        ({_m(E3=2): F(1), _m(E1=1, E4=1): F(-3), _m(E2=1, E5=1): F(-3)}, F(0)),
        # e4^2 - 1/9 = 0
        ({_m(E4=2): F(1)}, F(1, 9)),
    ]
    for name, (terms, const), (want, want_const) in zip(names, family_central_relations(), targets):
        at_one = _clean({m: v.substitute(1) for m, v in terms.items()})
        const1 = const.substitute(1)
        lead = next(iter(m for m in want if want[m] == 1))
        scale = at_one.get(lead)
        ok = bool(scale) and {m: v / scale for m, v in at_one.items()} == want \
            and const1 / scale == want_const
        out.append((name, ok, f"{_fmt(at_one)} = {const1}"))
    return out


def _fmt(d):
    return format_terms(sorted(d.items()), CLASSICAL.names)


def scaled_relation_comparison():
    """Compare the displayed A_z central relations with rescaled Omega relations.

    With ``alpha = 1`` and ``beta = 1/(9(q^6-1))`` the first relation times
    ``q^-2 - 1`` and the second times ``q^6 - 1`` should match the display.
    Returns ``[(relation, monomial, displayed, computed)]`` for every mismatch.
    """
    from .pbw import omega
    scales = [(z**-2 - 1, RatFunc(1)), (z**6 - 1, 1 / (9 * (z**6 - 1)))]
    out = []
    for n, ((terms, const), (s, rhs)) in enumerate(zip(family_central_relations(), scales), 1):
        computed = {m: s * c for m, c in omega(n).terms.items()}
        for m in sorted(set(terms) | set(computed)):
            shown, calc = terms.get(m, RatFunc(0)), computed.get(m, RatFunc(0))
            if shown != calc:
                out.append((n, m, shown, calc))
        if const != s * rhs:
            out.append((n, "constant", const, s * rhs))
    return out


def iso_check():
    """Relation residuals and inverse checks for the two maps."""
    out = []
    zero_r, zero_a = WEYL.scalar(0), CLASSICAL.scalar(0)
    # fwd respects the relations of WEYL
    fwd = _to_classical_images()
    for (j, i), (c, delta) in sorted(WEYL_RELATIONS.items()):
        res = CLASSICAL.mul(fwd[j], fwd[i]) - c * CLASSICAL.mul(fwd[i], fwd[j])
        for m, v in delta.items():
            res = res - v * _hom(PBWElement(_WEYL_ALG, {m: F(1)}), fwd, CLASSICAL)
        out.append((f"fwd: f{j + 2}f{i + 2}", res == zero_a))
    for j in range(5):
        for i in range(j):
            if (j, i) not in WEYL_RELATIONS:
                res = CLASSICAL.mul(fwd[j], fwd[i]) - CLASSICAL.mul(fwd[i], fwd[j])
                out.append((f"fwd: [f{j + 2},f{i + 2}]", res == zero_a))
    out.append(("fwd: f4^2 = 1/9", CLASSICAL.mul(fwd[2], fwd[2]) == CLASSICAL.scalar(F(1, 9))))
    # back respects the relations of CLASSICAL
    back = _to_weyl_images()
    for (j, i), (c, delta) in sorted(CLASSICAL_RELATIONS.items()):
        res = WEYL.mul(back[j - 1], back[i - 1]) - c * WEYL.mul(back[i - 1], back[j - 1])
        for m, v in delta.items():
            res = res - v * _hom(PBWElement(_CLASSICAL_ALG, {m: F(1)}), back, WEYL)
        out.append((f"back: e{j}e{i}", res == zero_r))
    for k, rhs in sorted(CLASSICAL_SQUARES.items()):
        lhs = WEYL.mul(back[k], back[k])
        res = lhs - _hom(PBWElement(_CLASSICAL_ALG, rhs), back, WEYL)
        out.append((f"back: e{k + 1}^2", res == zero_r))
    # mutual inverses on generators
    for i in range(2, 7):
        out.append((f"back(fwd(f{i})) = f{i}", classical_to_weyl(weyl_to_classical(f(i))) == f(i)))
    for i in range(1, 7):
        out.append((f"fwd(back(e{i})) = e{i}", weyl_to_classical(classical_to_weyl(e(i))) == e(i)))
    # Weyl pattern among f2, f3, f5, f6 and centrality of f4
    def br(x, y):
        return WEYL.mul(x, y) - WEYL.mul(y, x)
    expect = {(2, 3): 0, (2, 5): 0, (2, 6): -1, (3, 5): 1, (3, 6): 0, (5, 6): 0}
    for (i, j), v in sorted(expect.items()):
        out.append((f"[f{i},f{j}] = {v}", br(f(i), f(j)) == WEYL.scalar(v)))
    for i in (2, 3, 5, 6):
        out.append((f"[f4,f{i}] = 0", br(f(4), f(i)) == zero_r))
    out.append(("f4^2 = 1/9", WEYL.mul(f(4), f(4)) == WEYL.scalar(F(1, 9))))
    return out


def _specialised_algebra(z0):
    table = {key: (c.substitute(z0), {m: v.substitute(z0) for m, v in d.items()})
             for key, (c, d) in family_relations().items()}
    return build_algebra(table, ("e1", "e2", "e3", "e4", "e5", "e6"), F(1))


def _random_mono(rng, max_deg):
    m = [0] * 6
    for _ in range(rng.randint(1, max_deg)):
        m[rng.randrange(6)] += 1
    return tuple(m)


def flatness_check(samples=200, seed=0, pairs=3, max_deg=3):
    """Products in the z-engine evaluated at random ``z0`` versus the engine at ``z0``.

    Returns the list of ``(z0, monomial pair)`` that disagreed (empty on success).
    """
    from .pbw import UQ
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        while True:
            z0 = F(rng.randint(-40, 40), rng.randint(1, 12))
            if z0 not in (0, 1, -1):
                break
        alg = _specialised_algebra(z0)
        for _ in range(pairs):
            a, b = _random_mono(rng, max_deg), _random_mono(rng, max_deg)
            sym = UQ.mul_mono(a, b)
            num = alg.mul_mono(a, b)
            ev = _clean({m: c.substitute(z0) for m, c in sym.items()})
            if ev != _clean(num):
                bad.append((z0, a, b))
    return bad


"""Derivations of A_{alpha,beta}: Leibniz residuals, inner and scalar derivations.

A derivation is given by its values on ``e1..e6``.  It is well defined on the
quotient exactly when the Leibniz extension kills every defining relation:
the fifteen straightening relations and the two central relations.
"""

from __future__ import annotations

from .coeff import RatFunc, to_ratfunc
from .linalg import nullspace, rank_at
from .pbw import UQ, _add_into, omega, uq_relations
from .quotient import QuotElem, basis_monomials

__all__ = [
    "DerivationSpec",
    "LinearSolution",
    "relation_words",
    "check_leibniz",
    "is_derivation",
    "ad",
    "scalar_derivation",
    "solve_scalar_space",
    "central_candidate_rank",
    "GRADING_BETA0",
    "GRADING_ALPHA0",
]

GRADING_BETA0 = (-1, -1, 0, 1, 1, 2)
GRADING_ALPHA0 = (-2, -3, -1, 0, 1, 3)


def _mono_word(m):
    out = []
    for k, e in enumerate(m):
        out.extend([k] * e)
    return tuple(out)


def relation_words(alpha, beta):
    """The seventeen relations as ``(name, [(coeff, word)], constant)``.

    Each reads ``sum coeff * word = constant``; words are tuples of 0-based
    generator indices.
    """
    out = []
    for (j, i), (c, delta) in sorted(uq_relations().items()):
        words = [(RatFunc(1), (j - 1, i - 1)), (-c, (i - 1, j - 1))]
        for m, dc in delta.items():
            words.append((-dc, _mono_word(m)))
        out.append((f"e{j}e{i}", words, RatFunc(0)))
    for w, const, name in ((1, alpha, "central1"), (2, beta, "central2")):
        words = [(c, _mono_word(m)) for m, c in sorted(omega(w).terms.items())]
        out.append((name, words, to_ratfunc(const)))
    return out


class DerivationSpec:
    """Values of a candidate derivation on the six generators."""

    def __init__(self, quot, values):
        values = list(values)
        if len(values) != 6:
            raise ValueError("need six generator values")
        for v in values:
            if not isinstance(v, QuotElem) or v.quot is not quot:
                raise ValueError("values must live in the given quotient")
        self.quot = quot
        self.values = values

    @classmethod
    def from_mapping(cls, quot, mapping):
        """Build from ``{"e1": "<expr>", ...}``; missing generators map to 0."""
        from .parse import parse_expr, quotient_context
        ctx = quotient_context(quot)
        unknown = set(mapping) - {f"e{i}" for i in range(1, 7)}
        if unknown:
            raise ValueError(f"unknown generators {sorted(unknown)}")
        vals = []
        for i in range(1, 7):
            text = mapping.get(f"e{i}", "0")
            v = parse_expr(text, ctx)
            vals.append(v if isinstance(v, QuotElem) else quot.scalar(v))
        return cls(quot, vals)

    def __call__(self, i):
        return self.values[i - 1]

    def __sub__(self, other):
        return DerivationSpec(self.quot, [a - b for a, b in zip(self.values, other.values)])

    def __add__(self, other):
        return DerivationSpec(self.quot, [a + b for a, b in zip(self.values, other.values)])

    def is_zero(self):
        return not any(self.values)


def _word_terms(word):
    return UQ.word(word).terms


def check_leibniz(D):
    """Reduced Leibniz image of each relation; all zero iff ``D`` is a derivation."""
    quot = D.quot
    out = []
    for name, words, _const in relation_words(quot.alpha, quot.beta):
        acc = {}
        for c, w in words:
            for p, g in enumerate(w):
                val = D.values[g].terms
                if not val:
                    continue
                left = UQ.mul_terms(_word_terms(w[:p]), val)
                full = UQ.mul_terms(left, _word_terms(w[p + 1:]))
                for m, cm in full.items():
                    _add_into(acc, m, c * cm)
        out.append((name, QuotElem(quot, quot.reduce_terms(acc))))
    return out


def is_derivation(D):
    return all(not r for _, r in check_leibniz(D))


def ad(x):
    """Inner derivation ``L -> x L - L x``."""
    quot = x.quot
    return DerivationSpec(quot, [x * quot.gen(i) - quot.gen(i) * x for i in range(1, 7)])


def scalar_derivation(lams, quot):
    """``D(e_i) = lambda_i e_i``."""
    lams = [to_ratfunc(v) for v in lams]
    return DerivationSpec(quot, [lam * quot.gen(i) for i, lam in zip(range(1, 7), lams)])


class LinearSolution:
    """Solution set ``point + span(basis)`` of the scalar-derivation constraints."""

    def __init__(self, basis, point=None, constraints=0):
        self.basis = [tuple(v) for v in basis]
        self.point = tuple(point) if point else (RatFunc(0),) * 6
        self.constraints = constraints

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        vec = [to_ratfunc(v) - p for v, p in zip(vec, self.point)]
        if not any(vec):
            return True
        if not self.basis:
            return False
        # solve vec = sum c_k basis_k by elimination on the transposed system
        rows = [[b[i] for b in self.basis] + [vec[i]] for i in range(6)]
        ns = nullspace(rows, len(self.basis) + 1, RatFunc(1))
        return any(v[-1] for v in ns)

    def spans(self, vec):
        """True iff the solution space is exactly the line through ``vec``."""
        return self.dim == 1 and self.contains(vec) and any(to_ratfunc(v) for v in vec)


def solve_scalar_space(quot):
    """All ``lambda`` in ``K^6`` making ``e_i -> lambda_i e_i`` a derivation."""
    rows = []
    for _name, words, _const in relation_words(quot.alpha, quot.beta):
        parts = [dict() for _ in range(6)]
        for c, w in words:
            counts = [w.count(i) for i in range(6)]
            if not any(counts):
                continue
            wt = _word_terms(w)
            for i, n in enumerate(counts):
                if n:
                    for m, cm in wt.items():
                        _add_into(parts[i], m, c * n * cm)
        reduced = [quot.reduce_terms(pt) for pt in parts]
        monos = set()
        for r in reduced:
            monos.update(r)
        for m in sorted(monos):
            rows.append([r.get(m, RatFunc(0)) for r in reduced])
    basis = nullspace(rows, 6, RatFunc(1))
    return LinearSolution(basis, constraints=len(rows))


def central_candidate_rank(quot, max_degree=4, q0=3):
    """Rank at ``q = q0`` of ``z -> ([z, e_1], ..., [z, e_6])`` on the degree-``<= d`` span.

    Returns ``(rank, n_unknowns)``.  The rank over Q(q) is at least this value,
    and constants are always in the kernel, so ``rank == n - 1`` proves the
    only central elements of that span are scalars.
    """
    monos = basis_monomials(max_degree)
    gens = [quot.gen(i).terms for i in range(1, 7)]
    cols = []
    for m in monos:
        col = {}
        mt = {m: RatFunc(1)}
        for i, g in enumerate(gens):
            comm = UQ.mul_terms(mt, g)
            for t, c in UQ.mul_terms(g, mt).items():
                _add_into(comm, t, -c)
            for t, c in quot.reduce_terms(comm).items():
                col[(i, t)] = c
        cols.append(col)
    return rank_at(cols, q0), len(monos)


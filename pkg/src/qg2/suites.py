"""Verification suites behind ``qg2 verify``.

Each suite returns a list of :class:`Check`; :func:`run_suite` wraps them in a
:class:`SuiteReport` sorted by check name.  Randomised checks draw from
``sampling.rng_for(seed, label)`` so a report is a pure function of its options
(apart from ``duration_ms``).
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from .coeff import RatFunc, eval_at
from .deriv import (GRADING_ALPHA0, GRADING_BETA0, ad, central_candidate_rank,
                    check_leibniz, scalar_derivation, solve_scalar_space)
from .limits import (flatness_check, iso_check, scaled_relation_comparison,
                     specialize_z1)
from .linalg import rank_at
from .parse import parse_scalar
from .pbw import (UQ, commutator, format_monomial, gen, omega, power_families, serre_lhs,
                  straighten_power, straighten_power_brute, uq_relations)
from .quotient import (E_NAMES, NonTermination, basis_count, basis_count_formula,
                       basis_monomials, quotient, square_identity_check)
from .sampling import random_poly, random_quot, rng_for
from .torus import (box_span, center_lattice, localized_relations, matrix_M,
                    matrix_N, quotient_embedding, uq_relation_residuals,
                    verify_dda_chain)

__all__ = ["SUITES", "Check", "Options", "SuiteReport", "UsageError", "run_suite", "ACCEPTANCE_PAIRS"]

SUITES = ("serre", "pbw-consistency", "center", "dda", "quotient", "basis-growth",
          "classical-limit", "derivations", "all")
NEEDS_PARAMS = ("quotient", "derivations")
ACCEPTANCE_PAIRS = (("1", "1"), ("1", "0"), ("0", "1"), ("q", "1/(q^2-1)"))
FAST_SAMPLES = 3


class UsageError(ValueError):
    """Bad suite name or parameters; the CLI maps this to exit code 2."""


@dataclass
class Check:
    name: str
    status: str
    detail: str
    anchor: str


@dataclass
class Options:
    alpha: str | None = None
    beta: str | None = None
    max_degree: int = 6
    samples: int = 50
    seed: int = 0
    fast: bool = False

    def cap(self):
        """Root-degree cap for random elements; (6, 4) at the default."""
        return (self.max_degree, (2 * self.max_degree) // 3)


@dataclass
class SuiteReport:
    suite: str
    params: dict
    seed: int
    checks: list = field(default_factory=list)
    duration_ms: int = 0

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks if c.status != "skipped")

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "checks": [asdict(c) for c in self.checks],
            "duration_ms": self.duration_ms,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def summary(self):
        lines = [f"{c.status.upper():7} {c.name}: {c.detail}" for c in self.checks]
        n_fail = sum(c.status == "fail" for c in self.checks)
        verdict = "PASS" if self.passed else f"FAIL ({n_fail} failing)"
        lines.append(f"{self.suite}: {verdict} in {self.duration_ms} ms")
        return "\n".join(lines)


def _check(name, ok, detail, anchor):
    return Check(name, "pass" if ok else "fail", detail, anchor)


# -- equality under --fast --------------------------------------------------

class _ZeroTest:
    """Decides ``x == 0`` for a dict of RatFunc coefficients.

    Exact by default.  In fast mode every coefficient is evaluated at a few
    random admissible points instead; a nonzero value is still a proof of
    inequality, while all-zero values only give a probabilistic pass.
    """

    def __init__(self, opts, label):
        self.fast = opts.fast
        rng = rng_for(opts.seed, "fast:" + label)
        self.points = []
        while len(self.points) < FAST_SAMPLES:
            p = rng.randint(2, 10**6) * rng.choice([1, -1])
            self.points.append(p)

    def is_zero(self, coeffs):
        coeffs = [c for c in coeffs if c]
        if not self.fast:
            return not coeffs
        return all(eval_at(c, p) == 0 for c in coeffs for p in self.points)

    def detail(self, base):
        if self.fast:
            return f"{base}; probabilistic pass at q0 in {self.points}"
        return base


def _coeffs(x):
    terms = getattr(x, "terms", x)
    return list(terms.values())


# -- suites -------------------------------------------------------------------

def _serre(opts):
    out = []
    for which in ("S1", "S2"):
        lhs = serre_lhs(which)
        control = serre_lhs(which, balanced=False)
        ok = not lhs and bool(control)
        detail = (f"residual {'0' if not lhs else lhs}; "
                  f"non-symmetric binomials give {len(control.terms)} nonzero terms")
        out.append(_check(f"serre {which}", ok, detail,
                          "quantum Serre relation with symmetric q-binomials"))
    return out


def _pbw(opts):
    out = []
    rng = rng_for(opts.seed, "assoc")
    test = _ZeroTest(opts, "assoc")
    bad = 0
    for _ in range(opts.samples):
        x, y, z = (random_poly(rng, opts.cap()) for _ in range(3))
        if not test.is_zero(_coeffs((x * y) * z - x * (y * z))):
            bad += 1
    out.append(_check("associativity", bad == 0,
                      test.detail(f"{opts.samples - bad}/{opts.samples} triples, root degree <= {opts.cap()}"),
                      "PBW basis and straightening relations"))
    for j, i, side in power_families():
        mismatches = [n for n in range(9)
                      if straighten_power(j, i, n, side) != straighten_power_brute(j, i, n, side)]
        shape = f"E{j}*E{i}^n" if side == "left" else f"E{j}^n*E{i}"
        out.append(_check(f"closed form {shape}", not mismatches,
                          "n = 0..8 agree" if not mismatches else f"differ at n = {mismatches}",
                          "power commutation formulas"))
    return out


def _center(opts):
    out = []
    for w in (1, 2):
        Om = omega(w)
        for i in range(1, 7):
            c = commutator(Om, gen(i))
            out.append(_check(f"[Omega{w}, E{i}] = 0", not c,
                              "0" if not c else f"{len(c.terms)} nonzero terms",
                              "centre of U_q^+(G2)"))
    lat = center_lattice(matrix_M(), 2)
    want = box_span([(1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1)], 2)
    out.append(_check("center lattice rank 6, box 2", lat == want,
                      f"{len(lat)} vectors; expected {len(want)}",
                      "central Laurent monomials of the rank-6 torus"))
    latn = center_lattice(matrix_N(), 3)
    out.append(_check("center lattice rank 4, box 3", latn == {(0, 0, 0, 0)},
                      f"{sorted(latn)}", "trivial centre of the rank-4 torus"))
    return out


def _dda(opts):
    out = []
    for (j, i), r in sorted(uq_relation_residuals().items()):
        out.append(_check(f"torus relation E{j}E{i}", not r,
                          "residual 0" if not r else f"residual {r}",
                          "embedding into the rank-6 quantum torus"))
    for label, ok in verify_dda_chain():
        out.append(_check(f"chain {label}", ok, "torus images agree" if ok else "mismatch",
                          "centre as a product of torus generators"))
    return out


def _params(opts):
    if opts.alpha is None or opts.beta is None:
        raise UsageError("this suite needs --alpha and --beta")
    try:
        alpha, beta = parse_scalar(opts.alpha), parse_scalar(opts.beta)
    except ValueError as exc:
        raise UsageError(f"bad parameter: {exc}") from None
    if not alpha and not beta:
        raise UsageError("(alpha, beta) must not both be zero")
    return alpha, beta


def _quotient(opts):
    alpha, beta = _params(opts)
    Q = quotient(alpha, beta)
    emb = quotient_embedding(alpha, beta)
    out = []
    anchor = "quotient embedded in the rank-4 torus"
    one = emb.poly({UQ.unit: RatFunc(1)})
    for (j, i), (c, delta) in sorted(uq_relations().items()):
        r = emb.gen(j) * emb.gen(i) - c * (emb.gen(i) * emb.gen(j)) - emb.poly(delta)
        out.append(_check(f"homomorphism e{j}e{i}", not r, "residual 0" if not r else f"residual {r}", anchor))
    for w, val in ((1, alpha), (2, beta)):
        r = emb.poly(omega(w).terms) - val * one
        out.append(_check(f"homomorphism central{w}", not r,
                          "image equals the parameter" if not r else f"residual {r}", anchor))

    rng = rng_for(opts.seed, "quotient")
    test = _ZeroTest(opts, "quotient")
    bad_idem = bad_oracle = 0
    err = None
    for _ in range(opts.samples):
        x = random_poly(rng, opts.cap())
        try:
            r = Q.reduce(x)
        except NonTermination as exc:
            err = str(exc)
            bad_idem += 1
            bad_oracle += 1
            continue
        if Q.reduce(r.lift()) != r:
            bad_idem += 1
        if not test.is_zero(_coeffs(Q.torus_image(r) - Q.torus_image(x))):
            bad_oracle += 1
    n = opts.samples
    out.append(_check("reduce idempotent", bad_idem == 0,
                      f"{n - bad_idem}/{n} elements" + (f"; {err}" if err else ""),
                      "normal form for the basis"))
    out.append(_check("reduce agrees with torus oracle", bad_oracle == 0,
                      test.detail(f"{n - bad_oracle}/{n} elements"), anchor))

    names = {1: "e3^2", 2: "e4^2", 3: "e3^2*e4", 4: "e3*e4^2"}
    for which in (1, 2, 3, 4):
        r = square_identity_check(which, (alpha, beta))
        detail = "residual 0" if not r else (
            f"nonzero residual {r}: possible erratum in the printed coefficients")
        out.append(_check(f"square identity {which} ({names[which]})", not r, detail,
                          "expansion of squares in the basis"))
    for k, (label, ok) in enumerate(localized_relations(alpha, beta), 1):
        out.append(_check(f"localized relation {k}", ok, label,
                          "relations in the localization by t3..t6"))
    return out


def _basis_growth(opts):
    out = []
    bad = [d for d in range(41) if basis_count(d) != basis_count_formula(d)]
    out.append(_check("basis count formula", not bad,
                      "enumeration matches the binomial sum for d <= 40" if not bad else f"differs at {bad}",
                      "basis of the quotient"))
    ratio = basis_count(40) / 40**4
    lo, hi = 0.95 / 6, 1.25 / 6
    out.append(_check("growth ratio d = 40", lo <= ratio <= hi,
                      f"basis_count(40)/40^4 = {ratio:.5f}, window [{lo:.5f}, {hi:.5f}]",
                      "Gelfand-Kirillov dimension 4"))
    small = (basis_count(0), basis_count(1))
    out.append(_check("basis count small degrees", small == (1, 7), f"{small}", "basis of the quotient"))
    alpha, beta = _params(opts) if opts.alpha is not None else (RatFunc(1), RatFunc(1))
    Q = quotient(alpha, beta)
    monos = basis_monomials(5)
    cols = [Q.torus_image(Q.reduce(UQ.monomial(m))).terms for m in monos]
    rank = rank_at(cols, 7)
    out.append(_check("basis torus images independent (degree <= 5)", rank == len(monos),
                      f"rank {rank} of {len(monos)} at q = 7 (lower bound for the rank over Q(q))",
                      "basis of the quotient"))
    return out


def _classical(opts):
    out = []
    for name, ok, detail in specialize_z1():
        out.append(_check(f"z = 1: {name}", ok, detail, "specialisation at z = 1"))
    for name, ok in iso_check():
        out.append(_check(f"iso: {name}", ok, "holds" if ok else "fails",
                          "isomorphism with the Weyl-type algebra"))
    bad = flatness_check(samples=opts.samples, seed=opts.seed)
    out.append(_check("flatness", not bad,
                      f"{opts.samples} random z0 agree" if not bad else f"disagree at {bad[:3]}",
                      "z-family is the same presentation"))
    diffs = scaled_relation_comparison()
    harmless = all(_vanishes_at_one(shown) and _vanishes_at_one(calc) for _, _, shown, calc in diffs)
    if diffs:
        shown = "; ".join(f"relation {n} coefficient of {format_monomial(m, E_NAMES)}: displayed {a}, rescaled {b}"
                          for n, m, a, b in diffs)
        detail = f"{len(diffs)} display differences, all vanishing at z = 1: {shown}"
    else:
        detail = "display matches the rescaled central elements"
    out.append(_check("rescaled central relations", harmless, detail,
                      "family relations rescaled from the central elements"))
    return out


def _vanishes_at_one(c):
    return isinstance(c, RatFunc) and c.substitute(1) == 0


def _derivations(opts):
    alpha, beta = _params(opts)
    Q = quotient(alpha, beta)
    out = []
    anchor = "derivations of the quotient"
    sol = solve_scalar_space(Q)
    expected = {(True, True): None, (True, False): GRADING_BETA0, (False, True): GRADING_ALPHA0}
    want = expected[(bool(alpha), bool(beta))]
    if want is None:
        ok = sol.dim == 0
        detail = f"dimension {sol.dim}; expected 0"
    else:
        ok = sol.spans(want)
        detail = f"dimension {sol.dim}; expected the line through {want}"
    out.append(_check("scalar derivation space", ok, detail, anchor))

    for vec in sol.basis:
        res = [n for n, r in check_leibniz(scalar_derivation(vec, Q)) if r]
        out.append(_check("scalar solution satisfies Leibniz", not res,
                          "all 17 residuals 0" if not res else f"fails on {res}", anchor))

    for label, vec in (("grading beta=0", GRADING_BETA0), ("grading alpha=0", GRADING_ALPHA0)):
        res = [n for n, r in check_leibniz(scalar_derivation(vec, Q)) if r]
        predicted = (not beta) if vec == GRADING_BETA0 else (not alpha)
        ok = (not res) == predicted
        state = "is a derivation" if not res else f"fails on {res}"
        out.append(_check(f"{label} {vec}", ok,
                          f"{state}; expected {'derivation' if predicted else 'failure'}", anchor))

    rng = rng_for(opts.seed, "ad")
    test = _ZeroTest(opts, "ad")
    n = min(opts.samples, 20)
    bad = 0
    for _ in range(n):
        x = random_quot(rng, Q, cap=(4, 3), max_terms=2)
        if not all(test.is_zero(_coeffs(r)) for _, r in check_leibniz(ad(x))):
            bad += 1
    out.append(_check("inner derivations satisfy Leibniz", bad == 0,
                      test.detail(f"{n - bad}/{n} sampled x"), anchor))

    rank, unknowns = central_candidate_rank(Q, 4)
    out.append(_check("central elements of degree <= 4", rank == unknowns - 1,
                      f"rank {rank} of {unknowns} unknowns at q = 3; only scalars commute with e1..e6"
                      " (evidence, not a proof of trivial centre)", "centre of the quotient"))
    return out


_RUNNERS = {
    "serre": _serre,
    "pbw-consistency": _pbw,
    "center": _center,
    "dda": _dda,
    "quotient": _quotient,
    "basis-growth": _basis_growth,
    "classical-limit": _classical,
    "derivations": _derivations,
}


def _safe(fn, opts, suite):
    try:
        return fn(opts)
    except UsageError:
        raise
    except NonTermination as exc:
        return [Check(f"{suite}: reduction", "fail", f"non-termination: {exc}", "normal form for the basis")]


def _run_all(opts):
    checks = []
    for name, fn in _RUNNERS.items():
        if name in NEEDS_PARAMS and (opts.alpha is None or opts.beta is None):
            pairs = ACCEPTANCE_PAIRS
        elif name in NEEDS_PARAMS:
            pairs = ((opts.alpha, opts.beta),)
        else:
            pairs = (None,)
        for pair in pairs:
            sub = opts if pair is None else Options(pair[0], pair[1], opts.max_degree,
                                                   opts.samples, opts.seed, opts.fast)
            tag = name if pair is None else f"{name}({pair[0]},{pair[1]})"
            for c in _safe(fn, sub, name):
                checks.append(Check(f"{tag}/{c.name}", c.status, c.detail, c.anchor))
    return checks


def run_suite(name, opts=None, timing=True):
    """Run one suite.  ``timing=False`` fixes ``duration_ms`` at 0 for reproducible output."""
    opts = opts or Options()
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name in NEEDS_PARAMS:
        _params(opts)
    start = time.perf_counter()
    checks = _run_all(opts) if name == "all" else _safe(_RUNNERS[name], opts, name)
    checks.sort(key=lambda c: c.name)
    duration = int((time.perf_counter() - start) * 1000) if timing else 0
    params = {
        "alpha": opts.alpha,
        "beta": opts.beta,
        "max_degree": opts.max_degree,
        "samples": opts.samples,
        "fast": opts.fast,
    }
    return SuiteReport(name, params, opts.seed, checks, duration)


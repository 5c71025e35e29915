"""Expression front-end shared by every algebra in the package.

Grammar: identifiers, integer literals, ``+ - * / ^`` and parentheses.
``^`` takes an integer exponent, division is only by scalars, and negative
exponents are only allowed when the context can invert the base.  Text is
parsed with :mod:`ast` after swapping ``^`` for ``**``; nothing is evaluated
outside a small whitelist of node types.
"""

from __future__ import annotations

import ast
import re

from .coeff import RatFunc, param, param_names, q, to_ratfunc

__all__ = [
    "ParseError", "Context", "parse_expr", "parse_scalar",
    "uq_context", "quotient_context", "torus_context",
]


class ParseError(ValueError):
    """Malformed expression; ``pos`` is a 0-based offset into the input."""

    def __init__(self, msg, pos=None):
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}")


class Context:
    """What identifiers mean and how to build values.

    ``generators`` maps names to algebra elements.  ``scalar`` lifts a
    ``RatFunc`` into the algebra (defaults to identity for scalar-only
    parsing).  ``invert`` returns the inverse of an element or raises.
    """

    def __init__(self, generators=None, scalar=None, invert=None, extra_scalars=None):
        self.generators = dict(generators or {})
        self.scalar = scalar
        self.invert = invert
        self.scalars = {"q": q}
        for name in param_names():
            self.scalars[name] = None  # resolved lazily
        if extra_scalars:
            self.scalars.update(extra_scalars)

    def lookup(self, name, pos):
        if name in self.generators:
            return self.generators[name]
        if name in self.scalars:
            v = self.scalars[name]
            return param(name) if v is None else v
        raise ParseError(f"unknown identifier {name!r}", pos)


def _prepare(text):
    # swap ^ for ** and keep a map back to the original offsets
    out, back = [], []
    for i, ch in enumerate(text):
        if ch == "^":
            out.append("**")
            back.extend([i, i])
        else:
            out.append(ch)
            back.append(i)
    back.append(len(text))
    return "".join(out), back


def _is_scalar(v):
    return isinstance(v, RatFunc)


class _Evaluator:
    def __init__(self, ctx, back, src_lines):
        self.ctx = ctx
        self.back = back
        self.line_starts = src_lines

    def pos(self, node):
        off = self.line_starts[node.lineno - 1] + node.col_offset
        return self.back[min(off, len(self.back) - 1)]

    def lift(self, v):
        if _is_scalar(v) and self.ctx.scalar is not None:
            return self.ctx.scalar(v)
        return v

    def eval(self, node):
        if isinstance(node, ast.Expression):
            return self.eval(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError(f"unsupported literal {node.value!r}", self.pos(node))
            return to_ratfunc(node.value)
        if isinstance(node, ast.Name):
            return self.ctx.lookup(node.id, self.pos(node))
        if isinstance(node, ast.UnaryOp):
            v = self.eval(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            return self.binop(node)
        raise ParseError(f"unsupported syntax {type(node).__name__}", self.pos(node))

    def binop(self, node):
        op = node.op
        if isinstance(op, ast.Pow):
            base = self.eval(node.left)
            n = self.int_exponent(node.right)
            if _is_scalar(base):
                return base ** n
            if n < 0:
                if self.ctx.invert is None:
                    raise ParseError("negative exponent not allowed here", self.pos(node))
                try:
                    base = self.ctx.invert(base)
                except (ValueError, ArithmeticError) as exc:
                    raise ParseError(str(exc), self.pos(node)) from None
                n = -n
            return base ** n
        left = self.eval(node.left)
        right = self.eval(node.right)
        if isinstance(op, ast.Div):
            if not _is_scalar(right):
                raise ParseError("division only by scalars", self.pos(node.right))
            if not right:
                raise ParseError("division by zero", self.pos(node.right))
            if _is_scalar(left):
                return left / right
            return left * right.inv()
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, (ast.Add, ast.Sub)):
            if _is_scalar(left) != _is_scalar(right):
                left, right = self.lift(left), self.lift(right)
            return left + right if isinstance(op, ast.Add) else left - right
        raise ParseError(f"unsupported operator {type(op).__name__}", self.pos(node))

    def int_exponent(self, node):
        sign = 1
        while isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            if isinstance(node.op, ast.USub):
                sign = -sign
            node = node.operand
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return sign * node.value
        raise ParseError("exponent must be an integer literal", self.pos(node))


_JUXTA = re.compile(r"[A-Za-z0-9_)]\s+[A-Za-z0-9_(]")


def parse_expr(text, ctx):
    """Parse ``text`` in context ``ctx`` and return the resulting value."""
    if not text.strip():
        raise ParseError("empty expression", 0)
    m = _JUXTA.search(text)
    if m:
        raise ParseError("juxtaposition is not allowed; use '*'", m.start() + 1)
    src, back = _prepare(text)
    # parenthesise so leading whitespace and newlines are harmless
    src, back = "(" + src + ")", [0] + back + [len(text)]
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        off = (exc.offset or 1) - 1
        raise ParseError(f"syntax error: {exc.msg}", back[min(off, len(back) - 1)]) from None
    starts = [0]
    for line in src.splitlines(keepends=True):
        starts.append(starts[-1] + len(line))
    out = _Evaluator(ctx, back, starts).eval(tree)
    return out


def parse_scalar(text):
    """Parse an expression in ``q`` and the named parameters to a ``RatFunc``."""
    v = parse_expr(text, Context())
    if not _is_scalar(v):
        raise ParseError("expected a scalar expression")
    return v


def uq_context():
    """Generators ``E1..E6`` of U_q^+(G2)."""
    from .pbw import UQ
    gens = {name: UQ.gen(i) for i, name in enumerate(UQ.names)}
    return Context(gens, scalar=UQ.scalar)


def quotient_context(quot):
    """Generators ``e1..e6`` of a quotient; products reduce as they are formed."""
    gens = {f"e{i}": quot.gen(i) for i in range(1, 7)}
    return Context(gens, scalar=quot.scalar)


def torus_context(matrix):
    """Torus generators named as in ``matrix.names``; negative powers allowed."""
    from .torus import TorusElem
    gens = {name: TorusElem.gen(matrix, i) for i, name in enumerate(matrix.names)}
    return Context(gens, scalar=lambda c: TorusElem.scalar(matrix, c),
                   invert=lambda x: x.inverse())

"""A small expression language over reals and Type-2 interval literals.

Grammar (precedence climbing; unary minus binds tightest, then ``* /``, then
``+ -``, all left-associative)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | primary
    primary := NUMBER | "x" | "n" | NAME "(" args ")" | "(" expr ")"
             | "[" "(" expr "," expr ")" "," "(" expr "," expr ")" "]"

Literal entries and function arguments must be real-valued.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from . import core
from .core import Type2Interval, first_violation, format_number
from .errors import (
    ExprEvalError,
    ExprSyntaxError,
    ExprTypeError,
    NonFiniteResult,
    OrderingViolation,
    PointwiseOrderingViolation,
    ZeroInDenominator,
)

__all__ = [
    "Num",
    "Var",
    "Literal",
    "Neg",
    "BinOp",
    "Call",
    "Expr",
    "parse",
    "render",
    "evaluate",
    "is_real",
    "free_vars",
    "derivative",
    "FUNCTIONS",
]

VARIABLES = ("x", "n")


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Literal:
    """Type-2 literal ``[(a, b), (c, d)]`` with real-valued entry expressions."""

    parts: tuple


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


Expr = Union[Num, Var, Literal, Neg, BinOp, Call]


def _pow(a, b):
    return math.pow(a, b)


FUNCTIONS = {
    "sin": (1, math.sin, lambda a, da: math.cos(a) * da),
    "cos": (1, math.cos, lambda a, da: -math.sin(a) * da),
    "exp": (1, math.exp, lambda a, da: math.exp(a) * da),
    "abs": (1, abs, lambda a, da: math.copysign(1.0, a) * da if a != 0 else math.nan),
    "sqrt": (1, math.sqrt, lambda a, da: da / (2 * math.sqrt(a))),
    "pow": (2, _pow, None),
}


# -- tokens -------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/(),\[\]−])
  | (?P<ws>\s+)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        col = pos - line_start + 1
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind == "ws":
            nl = text.count("\n")
            if nl:
                line += nl
                line_start = pos + text.rfind("\n") + 1
        else:
            if text == "−":
                text = "-"
            toks.append(_Tok(kind, text, line, col))
        pos = m.end()
    toks.append(_Tok("end", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, src):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(f"unexpected {found}", tok.line, tok.col, expected)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.fail((repr(text),))

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            inner = self.unary()
            # fold negative constants so rendered output reparses identically
            if isinstance(inner, Num):
                return Num(-inner.value)
            return Neg(inner)
        return self.primary()

    def primary(self):
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return Num(float(tok.text))
        if tok.kind == "name":
            self.i += 1
            if tok.text in VARIABLES:
                return Var(tok.text)
            if tok.text not in FUNCTIONS:
                raise ExprSyntaxError(
                    f"unknown name {tok.text!r}", tok.line, tok.col, VARIABLES + tuple(FUNCTIONS)
                )
            arity = FUNCTIONS[tok.text][0]
            self.expect("(")
            args = [self.expr()]
            while self.accept(","):
                args.append(self.expr())
            self.expect(")")
            if len(args) != arity:
                raise ExprSyntaxError(
                    f"{tok.text} takes {arity} argument(s), got {len(args)}", tok.line, tok.col
                )
            return Call(tok.text, tuple(args))
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if self.accept("["):
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            self.expect(",")
            self.expect("(")
            c = self.expr()
            self.expect(",")
            d = self.expr()
            self.expect(")")
            self.expect("]")
            return Literal((a, b, c, d))
        self.fail(("number", "x", "n", "function call", "'('", "'['", "'-'"))


def _check_types(node) -> bool:
    """Return True for real-valued nodes; raise where a Type-2 value is misused."""
    if isinstance(node, (Num, Var)):
        return True
    if isinstance(node, Neg):
        return _check_types(node.operand)
    if isinstance(node, BinOp):
        left = _check_types(node.left)
        right = _check_types(node.right)
        return left and right
    if isinstance(node, Call):
        for a in node.args:
            if not _check_types(a):
                raise ExprTypeError(f"{node.name}() applies to real arguments only, got a Type-2 interval")
        return True
    if isinstance(node, Literal):
        for a in node.parts:
            if not _check_types(a):
                raise ExprTypeError("Type-2 literal entries must be real-valued")
        return False
    raise TypeError(f"not an expression node: {node!r}")


def is_real(node) -> bool:
    return _check_types(node)


def free_vars(node) -> frozenset:
    if isinstance(node, Var):
        return frozenset((node.name,))
    if isinstance(node, Num):
        return frozenset()
    if isinstance(node, Neg):
        return free_vars(node.operand)
    if isinstance(node, BinOp):
        return free_vars(node.left) | free_vars(node.right)
    args = node.args if isinstance(node, Call) else node.parts
    out = frozenset()
    for a in args:
        out |= free_vars(a)
    return out


def parse(source: str) -> Expr:
    """Parse, type-check, and validate constant literals."""
    p = _Parser(source)
    node = p.expr()
    if p.tok.kind != "end":
        p.fail(("operator", "end of input"))
    _check_types(node)
    _check_constant_literals(node)
    return node


def _check_constant_literals(node):
    if isinstance(node, Literal):
        if not any(free_vars(a) for a in node.parts):
            values = tuple(_eval_real(a, {}) for a in node.parts)
            bad = first_violation(values)
            if bad is not None:
                raise OrderingViolation(bad, values, where=f"literal {render(node)}")
        return
    for child in _children(node):
        _check_constant_literals(child)


def _children(node):
    if isinstance(node, Neg):
        return (node.operand,)
    if isinstance(node, BinOp):
        return (node.left, node.right)
    if isinstance(node, Call):
        return node.args
    if isinstance(node, Literal):
        return node.parts
    return ()


def render(node) -> str:
    """Fully parenthesised source text; ``parse(render(e)) == e``."""
    if isinstance(node, Num):
        return format_number(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{render(node.operand)})"
    if isinstance(node, BinOp):
        return f"({render(node.left)} {node.op} {render(node.right)})"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(render(a) for a in node.args)})"
    a, b, c, d = (render(p) for p in node.parts)
    return f"[({a}, {b}), ({c}, {d})]"


# -- evaluation ---------------------------------------------------------------

def _lookup(name, env):
    try:
        return float(env[name])
    except KeyError:
        hint = " (use --at)" if name == "x" else ""
        raise ExprEvalError(f"variable {name!r} has no value{hint}") from None


def _finite(v, what):
    if not math.isfinite(v):
        raise NonFiniteResult(f"{what} produced a non-finite value")
    return v


def _eval_real(node, env) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return _lookup(node.name, env)
    if isinstance(node, Neg):
        return -_eval_real(node.operand, env)
    if isinstance(node, BinOp):
        a = _eval_real(node.left, env)
        b = _eval_real(node.right, env)
        if node.op == "+":
            return _finite(a + b, "addition")
        if node.op == "-":
            return _finite(a - b, "subtraction")
        if node.op == "*":
            return _finite(a * b, "multiplication")
        if b == 0:
            raise ZeroInDenominator(f"division by zero in {render(node)}")
        return _finite(a / b, "division")
    if isinstance(node, Call):
        args = [_eval_real(a, env) for a in node.args]
        try:
            return _finite(FUNCTIONS[node.name][1](*args), node.name)
        except (ValueError, OverflowError) as exc:
            raise ExprEvalError(f"{node.name}({', '.join(map(format_number, args))}): {exc}") from None
    raise ExprTypeError("expected a real-valued expression")


def _eval_literal(node, env) -> Type2Interval:
    values = tuple(_eval_real(p, env) for p in node.parts)
    bad = first_violation(values)
    if bad is not None:
        if "x" in env and any("x" in free_vars(p) for p in node.parts):
            raise PointwiseOrderingViolation(env["x"], bad, values)
        raise OrderingViolation(bad, values, where=f"literal {render(node)}")
    return Type2Interval(*values)


def _eval(node, env):
    if isinstance(node, Literal):
        return _eval_literal(node, env)
    if isinstance(node, Neg):
        v = _eval(node.operand, env)
        return -v if isinstance(v, float) else core.scalar_mul(-1.0, v)
    if isinstance(node, BinOp):
        a = _eval(node.left, env)
        b = _eval(node.right, env)
        ra, rb = isinstance(a, float), isinstance(b, float)
        if ra and rb:
            return _eval_real(BinOp(node.op, Num(a), Num(b)), {})
        op = node.op
        if op == "*":
            if ra:
                return core.scalar_mul(a, b)
            if rb:
                return core.scalar_mul(b, a)
            return core.mul(a, b)
        if op == "/" and rb:
            if b == 0:
                raise ZeroInDenominator(f"division by a real zero in {render(node)}")
            return core.scalar_mul(1.0 / b, a)
        a = core.make(a, a, a, a) if ra else a
        b = core.make(b, b, b, b) if rb else b
        return {"+": core.add, "-": core.sub, "/": core.div}[op](a, b)
    return _eval_real(node, env)


def evaluate(node, env=None) -> Union[float, Type2Interval]:
    """Evaluate with ``env`` binding x and/or n; reals stay floats."""
    return _eval(node, env or {})


# -- forward-mode derivatives of real subtrees --------------------------------

def _dual(node, env, var):
    if isinstance(node, Num):
        return node.value, 0.0
    if isinstance(node, Var):
        return _lookup(node.name, env), 1.0 if node.name == var else 0.0
    if isinstance(node, Neg):
        v, d = _dual(node.operand, env, var)
        return -v, -d
    if isinstance(node, BinOp):
        a, da = _dual(node.left, env, var)
        b, db = _dual(node.right, env, var)
        if node.op == "+":
            return a + b, da + db
        if node.op == "-":
            return a - b, da - db
        if node.op == "*":
            return a * b, da * b + a * db
        if b == 0:
            raise ZeroInDenominator(f"division by zero in {render(node)}")
        return a / b, (da * b - a * db) / (b * b)
    if isinstance(node, Call):
        if node.name == "pow":
            (a, da), (b, db) = (_dual(p, env, var) for p in node.args)
            v = _eval_real(Call("pow", (Num(a), Num(b))), {})
            d = 0.0
            if da:
                d += b * math.pow(a, b - 1) * da
            if db:
                if a <= 0:
                    raise ExprEvalError("pow with a varying exponent needs a positive base")
                d += v * math.log(a) * db
            return v, d
        (a, da), = (_dual(p, env, var) for p in node.args)
        v = _eval_real(Call(node.name, (Num(a),)), {})
        try:
            d = FUNCTIONS[node.name][2](a, da) if da else 0.0
        except (ValueError, ZeroDivisionError) as exc:
            raise ExprEvalError(f"{node.name} is not differentiable at {format_number(a)}: {exc}") from None
        if math.isnan(d):
            raise ExprEvalError(f"{node.name} is not differentiable at {format_number(a)}")
        return v, d
    raise ExprTypeError("derivatives are defined for real-valued subexpressions only")


def derivative(node, var: str = "x"):
    """``g(value) -> d/dvar node`` for a real-valued expression."""
    if not is_real(node):
        raise ExprTypeError("derivatives are defined for real-valued subexpressions only")
    return lambda value: _dual(node, {var: float(value)}, var)[1]

"""Series expressions: a small tree language, its parser and printer, and ``expand``.

Grammar::

    expr  := term (('+'|'-') term)*
    term  := unary (('*'|'/') unary)*
    unary := ['-'] atom ['^' INT]
    atom  := RATIONAL | 'x' | NAME ['(' args ')'] | 'sqrt(' expr ')'
           | 'subs(' expr ',' INT ')' | '(' expr ')'

Integer literals joined by ``/`` and negated literals are folded into a
single rational constant, so ``print`` and ``parse`` round-trip exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ComputationError, ParameterError
from .generators import CATALOG, generate
from .series import QQ, Ring, Series, format_coeff, qnorm, subst_power, to_rational


class ExprSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Const:
    value: Union[int, Fraction]


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Gen:
    name: str
    params: tuple = ()


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Sqrt:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Subs:
    arg: "Expr"
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"subs exponent must be >= 1, got {self.k}")


Expr = Union[Const, Var, Gen, BinOp, Neg, Sqrt, Pow, Subs]


# printing


def to_string(e: Expr) -> str:
    if isinstance(e, Const):
        s = format_coeff(e.value)
        return s if type(e.value) is int and e.value >= 0 else f"({s})"
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Gen):
        if not e.params:
            return e.name
        return f"{e.name}({','.join(format_coeff(p) for p in e.params)})"
    if isinstance(e, BinOp):
        return f"({to_string(e.left)} {e.op} {to_string(e.right)})"
    if isinstance(e, Neg):
        return f"(-{to_string(e.arg)})"
    if isinstance(e, Sqrt):
        return f"sqrt({to_string(e.arg)})"
    if isinstance(e, Pow):
        base = to_string(e.base)
        if isinstance(e.base, Pow):
            base = f"({base})"
        return f"{base}^{e.exponent}" if e.exponent >= 0 else f"{base}^({e.exponent})"
    if isinstance(e, Subs):
        return f"subs({to_string(e.arg)},{e.k})"
    raise TypeError(f"not an expression node: {e!r}")


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        if m.group(1):
            toks.append(("INT", m.group(1)))
        elif m.group(2):
            toks.append(("NAME", m.group(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ExprSyntaxError(f"unexpected character {ch!r} at position {m.start(3)}")
            toks.append(("OP", ch))
    toks.append(("END", ""))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ExprSyntaxError(f"expected {want!r}, got {got!r} (token {self.i})")
        self.i += 1
        return tok

    def at(self, value):
        return self.peek() == ("OP", value)

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()[1]
            right = self.unary()
            if (
                op == "/"
                and isinstance(node, Const)
                and isinstance(right, Const)
                and type(right.value) is int
                and right.value > 0
                and type(node.value) is int
            ):
                node = Const(qnorm(Fraction(node.value, right.value)))
            else:
                node = BinOp(op, node, right)
        return node

    def signed_int(self):
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        v = int(self.take("INT")[1])
        return -v if neg else v

    def unary(self):
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        node = self.atom()
        if self.at("^"):
            self.take()
            if self.at("("):
                self.take()
                k = self.signed_int()
                self.take("OP", ")")
            else:
                k = self.signed_int()
            node = Pow(node, k)
        if neg:
            node = Const(-node.value) if isinstance(node, Const) else Neg(node)
        return node

    def atom(self):
        kind, val = self.peek()
        if kind == "INT":
            self.take()
            return Const(int(val))
        if kind == "OP" and val == "(":
            self.take()
            node = self.expr()
            self.take("OP", ")")
            return node
        if kind == "NAME":
            self.take()
            if val == "x":
                return Var()
            if val == "sqrt":
                self.take("OP", "(")
                node = self.expr()
                self.take("OP", ")")
                return Sqrt(node)
            if val == "subs":
                self.take("OP", "(")
                node = self.expr()
                self.take("OP", ",")
                k = self.signed_int()
                self.take("OP", ")")
                return Subs(node, k)
            if val not in CATALOG:
                raise ExprSyntaxError(f"unknown name {val!r}")
            params = []
            if self.at("("):
                self.take()
                while True:
                    arg = self.expr()
                    if not isinstance(arg, Const):
                        raise ExprSyntaxError(f"parameters of {val} must be rational literals")
                    params.append(arg.value)
                    if self.at(","):
                        self.take()
                        continue
                    self.take("OP", ")")
                    break
            arity = CATALOG[val][0]
            if len(params) != arity:
                raise ExprSyntaxError(f"{val} takes {arity} parameter(s), got {len(params)}")
            return Gen(val, tuple(params))
        raise ExprSyntaxError(f"unexpected token {val or 'end of input'!r}")


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "END":
        raise ExprSyntaxError(f"trailing input at token {p.i}: {p.peek()[1]!r}")
    return node


# evaluation


def _evaluate(e: Expr, n: int, ring: Ring) -> Series:
    if isinstance(e, Const):
        return Series.constant(e.value, n, ring)
    if isinstance(e, Var):
        return Series.x(n, ring)
    if isinstance(e, Gen):
        return generate(e.name, e.params, n, ring)
    if isinstance(e, BinOp):
        a = _evaluate(e.left, n, ring)
        if e.op == "/" and isinstance(e.right, Const):
            return a / e.right.value
        b = _evaluate(e.right, n, ring)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        return a / b
    if isinstance(e, Neg):
        return -_evaluate(e.arg, n, ring)
    if isinstance(e, Sqrt):
        return _evaluate(e.arg, n, ring).sqrt()
    if isinstance(e, Pow):
        if isinstance(e.base, Var) and e.exponent >= 0:
            return Series.monomial(e.exponent, n, ring)
        return _evaluate(e.base, n, ring) ** e.exponent
    if isinstance(e, Subs):
        inner = _evaluate(e.arg, n // e.k, ring)
        return subst_power(inner, e.k, n)
    raise TypeError(f"not an expression node: {e!r}")


def expand(e: Expr | str, n: int, ring: Ring = QQ) -> Series:
    """The first ``n + 1`` coefficients of ``e`` in ``ring``.

    Divisions that cancel a power of ``x`` cost valid order, so the
    working precision is raised until the result reaches order ``n``.
    """
    if isinstance(e, str):
        e = parse(e)
    if n < 0:
        raise ParameterError("order must be >= 0")
    work = n
    for _ in range(64):
        s = _evaluate(e, work, ring)
        if s.order >= n:
            return s.truncate(n)
        work += n - s.order
    raise ComputationError(f"could not reach order {n} for {to_string(e)}")


def rational(v) -> Const:
    return Const(to_rational(v))

"""Recursive-descent parsers for rational functions in x and for
sigma-polynomials in matrix entries.

Grammar (rational functions)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' int)?
    base   := int | 'i' | 'x' | '(' expr ')' | '-' base

Unary minus is part of ``base``, so ``-x^2`` means ``(-x)^2``. Offsets in
errors are byte offsets into the UTF-8 encoding of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from sgx.errors import DivisionByZero, InvalidParameter, ParseError
from sgx.ratfunc import GaussRational, I, RatFunc, X

MAX_EXPONENT = 256
MAX_DEGREE = 512
MAX_DEPTH = 200
MAX_LEVEL = 64
MAX_COEFF_BITS = 1 << 16

_WS = " \t"


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str  # "x", "i", or a matrix entry


@dataclass(frozen=True)
class Shift:
    level: int
    child: "Node"


@dataclass(frozen=True)
class Neg:
    child: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Int, Sym, Shift, Neg, BinOp, Pow]


def to_text(node: Node) -> str:
    """Fully parenthesized text that parses back to the same tree."""
    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Shift):
        return f"s^{node.level}({to_text(node.child)})"
    if isinstance(node, Neg):
        return f"-({to_text(node.child)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)})^{node.exp}"
    return f"({to_text(node.left)}){node.op}({to_text(node.right)})"


# ---------------------------------------------------------------------------
# Parsing

class _Parser:
    def __init__(self, text: str, sigma: bool):
        self.text = text
        self.pos = 0
        self.sigma = sigma
        self.depth = 0

    # -- helpers ---------------------------------------------------------
    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8", "surrogateescape"))

    def fail(self, expected, pos=None):
        pos = self.pos if pos is None else pos
        found = repr(self.text[pos]) if pos < len(self.text) else "end of input"
        raise ParseError(self.offset(pos), set(expected), f"found {found}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail({"integer"})
        digits = self.text[start:self.pos]
        if len(digits) > 2000:
            raise InvalidParameter("integer literal too long")
        return int(digits)

    # -- grammar -----------------------------------------------------------
    def parse(self) -> Node:
        node = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.fail({"+", "-", "*", "/", "^", "end of input"})
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek() in ("*", "/") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.base()
        if self.peek() == "^":
            self.pos += 1
            e = self.integer()
            node = Pow(node, e)
        return node

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise InvalidParameter("expression nested too deeply")

    def base(self) -> Node:
        c = self.peek()
        self._enter()
        try:
            if c == "-":
                self.pos += 1
                return Neg(self.base())
            if c == "(":
                self.pos += 1
                node = self.expr()
                if self.peek() != ")":
                    self.fail({")", "+", "-", "*", "/", "^"})
                self.pos += 1
                return node
            if c and c in "0123456789":
                return Int(self.integer())
            if c == "i" and not (self.sigma and self._ident_follows()):
                self.pos += 1
                return Sym("i")
            if not self.sigma:
                if c == "x":
                    self.pos += 1
                    return Sym("x")
                self.fail({"integer", "i", "x", "(", "-"})
            if c == "s" and not self._ident_follows():
                return self.shift()
            if c.isascii() and c.isalpha():
                return Sym(self.identifier())
            self.fail({"integer", "i", "identifier", "s(", "(", "-"})
        finally:
            self.depth -= 1

    def _ident_follows(self) -> bool:
        nxt = self.pos + 1
        return nxt < len(self.text) and (self.text[nxt].isascii() and (self.text[nxt].isalnum() or self.text[nxt] == "_"))

    def identifier(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isascii() and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        raw = self.text[start:self.pos]
        return normalize_entry_name(raw)

    def shift(self) -> Node:
        self.pos += 1  # 's'
        level = 1
        if self.peek() == "^":
            self.pos += 1
            level = self.integer()
            if level > MAX_LEVEL:
                raise InvalidParameter(f"shift level above {MAX_LEVEL}")
        if self.peek() != "(":
            self.fail({"("})
        self.pos += 1
        node = self.expr()
        if self.peek() != ")":
            self.fail({")"})
        self.pos += 1
        return Shift(level, node)


def normalize_entry_name(raw: str) -> str:
    """``g_12``, ``g_1_2`` and ``g12`` all mean the entry g12."""
    parts = raw.split("_")
    if len(parts) == 3 and parts[1].isdigit() and parts[2].isdigit():
        return parts[0] + parts[1] + parts[2]
    if len(parts) == 2 and parts[1].isdigit():
        return parts[0] + parts[1]
    return raw


def parse_ast(text: str) -> Node:
    return _Parser(text, sigma=False).parse()


def parse_sigma_ast(text: str) -> Node:
    return _Parser(text, sigma=True).parse()


# ---------------------------------------------------------------------------
# Evaluation

def _check_size(f: RatFunc):
    if max(f.num.degree, f.den.degree) > MAX_DEGREE:
        raise InvalidParameter(f"degree above {MAX_DEGREE}")


def _coeff_bits(f: RatFunc) -> int:
    bits = 1
    for p in (f.num, f.den):
        for c in p.coeffs:
            for q in (c.re, c.im):
                bits = max(bits, q.numerator.bit_length(), q.denominator.bit_length())
    return bits


def evaluate(node: Node) -> RatFunc:
    """Exact value of a rational-function AST."""
    if isinstance(node, Int):
        return RatFunc.constant(node.value)
    if isinstance(node, Sym):
        if node.name == "x":
            return X
        if node.name == "i":
            return RatFunc.constant(I)
        raise InvalidParameter(f"unknown symbol {node.name}")
    if isinstance(node, Neg):
        return -evaluate(node.child)
    if isinstance(node, Pow):
        if node.exp > MAX_EXPONENT:
            raise InvalidParameter(f"exponent above {MAX_EXPONENT}")
        base = evaluate(node.base)
        if max(base.num.degree, base.den.degree) * node.exp > MAX_DEGREE:
            raise InvalidParameter(f"degree above {MAX_DEGREE}")
        if _coeff_bits(base) * node.exp > MAX_COEFF_BITS:
            raise InvalidParameter("coefficients too large")
        return base ** node.exp
    if isinstance(node, BinOp):
        a, b = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            out = a + b
        elif node.op == "-":
            out = a - b
        elif node.op == "*":
            out = a * b
        else:
            if not b:
                raise DivisionByZero("division by zero in expression")
            out = a / b
        _check_size(out)
        return out
    raise InvalidParameter(f"unsupported node {node!r}")


def parse(text: str) -> RatFunc:
    """Parse and evaluate a rational function of x over Q(i)."""
    return evaluate(parse_ast(text))


def evaluate_sigma(node: Node):
    from sgx.diffpoly import SigmaPolynomial

    if isinstance(node, Int):
        return SigmaPolynomial.constant(node.value)
    if isinstance(node, Sym):
        if node.name == "i":
            return SigmaPolynomial.constant(I)
        return SigmaPolynomial.var(node.name)
    if isinstance(node, Shift):
        return evaluate_sigma(node.child).prolong(node.level)
    if isinstance(node, Neg):
        return -evaluate_sigma(node.child)
    if isinstance(node, Pow):
        if node.exp > 64:
            raise InvalidParameter("exponent above 64 in a sigma-polynomial")
        return evaluate_sigma(node.base) ** node.exp
    if isinstance(node, BinOp):
        a, b = evaluate_sigma(node.left), evaluate_sigma(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.order >= 0 or not b:
            raise InvalidParameter("sigma-polynomials may only be divided by nonzero constants")
        return a * b.terms[()].inverse()
    raise InvalidParameter(f"unsupported node {node!r}")


def parse_sigma_poly(text: str):
    """Parse text such as ``s(g11)*g11 - 1`` or ``s^2(g_12) - g_12``."""
    return evaluate_sigma(parse_sigma_ast(text))


def format_value(c: GaussRational) -> str:
    from sgx.ratfunc import format_gauss

    return format_gauss(c)

"""Parse human-readable series expressions and render canonical series back.

Grammar, with whitespace insignificant and implicit multiplication rejected:

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | power
    power    := atom ('^' exponent)?
    atom     := INT | 't' | '(' expr ')'
    exponent := INT | '-' INT

Only the variable name `t` exists.  A negative exponent is accepted only on
`t` itself (a Laurent monomial); `render` emits it only as an outermost
`t^-k*` prefix, the shift normal form.
"""

from dataclasses import dataclass

from .errors import ParseError
from .series import IntPolynomial, LaurentSeries


# ---------------------------------------------------------------------------
# Abstract syntax
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    """The variable t."""


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

_OPS = "+-*/^()"


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch == "t":
            tokens.append(("T", None, i))
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, None, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i,
                         expected={"integer", "'t'", "'('"})
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, value, offset = self.peek()
        if kind == "EOF":
            shown = "end of input"
        elif kind == "INT":
            shown = repr(str(value))
        elif kind == "T":
            shown = "'t'"
        else:
            shown = repr(kind)
        raise ParseError(f"unexpected {shown}", offset, expected=expected)

    def parse_expr(self):
        node = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.parse_term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def parse_term(self):
        node = self.parse_unary()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            rhs = self.parse_unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def parse_unary(self):
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek()[0] != "^":
            return base
        self.advance()
        negative = False
        if self.peek()[0] == "-":
            if not isinstance(base, Var):
                self.fail({"nonnegative integer"})
            self.advance()
            negative = True
        kind, value, _ = self.peek()
        if kind != "INT":
            self.fail({"integer exponent"})
        self.advance()
        return Pow(base, -value if negative else value)

    def parse_atom(self):
        kind, value, _ = self.peek()
        if kind == "INT":
            self.advance()
            return Lit(value)
        if kind == "T":
            self.advance()
            return Var()
        if kind == "(":
            self.advance()
            node = self.parse_expr()
            if self.peek()[0] != ")":
                self.fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"})
            self.advance()
            return node
        self.fail({"integer", "'t'", "'('", "'-'"})


def parse(text):
    """Parse an expression into its syntax tree; ParseError carries the
    byte offset and the expected-token set."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    if parser.peek()[0] != "EOF":
        parser.fail({"end of input", "'+'", "'-'", "'*'", "'/'", "'^'"})
    return node


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def eval_expr(expr):
    """Evaluate a syntax tree to a canonical LaurentSeries."""
    if isinstance(expr, Lit):
        return LaurentSeries.from_int(expr.value)
    if isinstance(expr, Var):
        return LaurentSeries.monomial(1)
    if isinstance(expr, Neg):
        return -eval_expr(expr.operand)
    if isinstance(expr, Add):
        return eval_expr(expr.left) + eval_expr(expr.right)
    if isinstance(expr, Sub):
        return eval_expr(expr.left) - eval_expr(expr.right)
    if isinstance(expr, Mul):
        return eval_expr(expr.left) * eval_expr(expr.right)
    if isinstance(expr, Div):
        return eval_expr(expr.left) / eval_expr(expr.right)
    if isinstance(expr, Pow):
        if isinstance(expr.base, Var):
            return LaurentSeries.monomial(expr.exponent)
        return eval_expr(expr.base) ** expr.exponent
    raise TypeError(f"not a series expression node: {expr!r}")


def parse_series(text):
    return eval_expr(parse(text))


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _poly_str(p):
    if p.is_zero:
        return "0"
    parts = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1:
            body = "t" if mag == 1 else f"{mag}*t"
        else:
            body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


def _is_plain_monomial(p):
    nonzero = [c for c in p.coeffs if c]
    return len(nonzero) == 1 and nonzero[0] > 0


def render(a):
    """Canonical text form; eval(parse(render(a))) reproduces a exactly."""
    if a.is_zero:
        return "0"
    num_str = _poly_str(a.num)
    if a.den == IntPolynomial.ONE:
        body = num_str
        simple = _is_plain_monomial(a.num)
    else:
        den_str = _poly_str(a.den)
        left = num_str if _is_plain_monomial(a.num) else f"({num_str})"
        right = den_str if _is_plain_monomial(a.den) else f"({den_str})"
        body = f"{left}/{right}"
        simple = _is_plain_monomial(a.num)
    if a.shift == 0:
        return body
    prefix = "t" if a.shift == 1 else f"t^{a.shift}"
    if not simple:
        body = f"({body})" if a.den == IntPolynomial.ONE else body
    if body.startswith("-"):
        body = f"({body})"
    return f"{prefix}*{body}"

"""Parser for differential polynomials, operators and Novikov expressions.

Grammar (one expression per string)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | '@') unary)*
    unary   := ('-' | '+') unary | power
    power   := postfix ('^' INT)?
    postfix := primary ("'"* | '^' '[' INT (',' INT)* ']')
    primary := INT | NAME | '(' expr ')'

Variables are ``x1..xn`` (``x`` when n = 1); operator symbols are
``D1..Dm`` (``D`` when m = 1).  ``@`` is the non-associative Novikov
product, so a chain of two ``@`` needs parentheses.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import DiffPoly
from .errors import ParseError
from .novikov import Add, Circ, Const, Sub, Var, scale
from .ore import OrePoly, ore_mul
from .ratfunc import RatFunc

__all__ = ["parse_expr", "tokenize", "KINDS"]

KINDS = ("diffpoly", "orepoly", "novikov")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(src, line=1):
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].isspace():
            break
        m = _TOKEN.match(src, pos)
        if m.group(1) is not None:
            tokens.append(("INT", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^@()[],'":
                raise ParseError(f"unexpected character {ch!r}", line, m.start(3) + 1)
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("EOF", None, len(src)))
    return tokens


# -- value builders ---------------------------------------------------------

class _PolyAlgebra:
    def __init__(self, sig):
        self.sig = sig

    def number(self, q, err):
        return DiffPoly.constant(self.sig, q)

    def variable(self, i, theta, err):
        return DiffPoly.variable(self.sig, i, theta)

    def dsymbol(self, k, err):
        raise err("operator symbols are not allowed here")

    def add(self, a, b, err):
        return a + b

    def sub(self, a, b, err):
        return a - b

    def neg(self, a, err):
        return -a

    def mul(self, a, b, err):
        return a * b

    def div(self, a, b, err):
        if not b.is_constant():
            raise err("can only divide by a rational constant")
        c = b.constant_value()
        if not c:
            raise err("division by zero")
        return a.scale(1 / c)

    def power(self, a, k, err):
        return a ** k

    def circ(self, a, b, err):
        raise err("'@' is only valid in Novikov expressions")


class _OreAlgebra(_PolyAlgebra):
    def number(self, q, err):
        return OrePoly.scalar(self.sig, q)

    def variable(self, i, theta, err):
        return OrePoly.scalar(self.sig, DiffPoly.variable(self.sig, i, theta))

    def dsymbol(self, k, err):
        return OrePoly.delta(self.sig, k)

    def neg(self, a, err):
        return -a

    def mul(self, a, b, err):
        return ore_mul(a, b)

    def _scalar_part(self, a):
        if a.is_zero():
            return RatFunc.zero(self.sig)
        if set(a.coeffs) == {tuple([0] * self.sig.m)}:
            return next(iter(a.coeffs.values()))
        return None

    def div(self, a, b, err):
        rb = self._scalar_part(b)
        if rb is None:
            raise err("cannot divide by an operator")
        if rb.is_zero():
            raise err("division by zero")
        ra = self._scalar_part(a)
        if ra is not None:
            return OrePoly.scalar(self.sig, ra / rb)
        if not rb.is_constant():
            raise err("an operator can only be divided by a rational constant")
        return a.left_scale(rb.inverse())

    def power(self, a, k, err):
        return a ** k


class _NovikovAlgebra:
    def __init__(self, sig):
        self.sig = sig

    def number(self, q, err):
        return Const(q)

    def variable(self, i, theta, err):
        if any(theta):
            raise err("derivatives are not Novikov expressions")
        return Var(i)

    def dsymbol(self, k, err):
        raise err("operator symbols are not allowed here")

    def add(self, a, b, err):
        return Add(a, b)

    def sub(self, a, b, err):
        return Sub(a, b)

    def neg(self, a, err):
        return scale(-1, a)

    def mul(self, a, b, err):
        if isinstance(a, Const):
            return scale(a.value, b)
        if isinstance(b, Const):
            return scale(b.value, a)
        raise err("'*' needs a rational factor; use '@' for the Novikov product")

    def div(self, a, b, err):
        if not isinstance(b, Const):
            raise err("can only divide by a rational constant")
        if not b.value:
            raise err("division by zero")
        return scale(1 / b.value, a)

    def power(self, a, k, err):
        raise err("powers are not Novikov expressions")

    def circ(self, a, b, err):
        return Circ(a, b)


_ALGEBRAS = {"diffpoly": _PolyAlgebra, "orepoly": _OreAlgebra, "novikov": _NovikovAlgebra}


class _Parser:
    def __init__(self, src, alg, sig, line):
        self.src = src
        self.alg = alg
        self.sig = sig
        self.line = line
        self.tokens = tokenize(src, line)
        self.i = 0

    def error_at(self, pos):
        def make(msg):
            return ParseError(msg, self.line, pos + 1)
        return make

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.tok
        if t[0] != kind:
            what = "end of input" if t[0] == "EOF" else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", self.line, t[2] + 1)
        return self.advance()

    def parse(self):
        if self.tok[0] == "EOF":
            raise ParseError("empty expression", self.line, 1)
        v = self.expr()
        if self.tok[0] != "EOF":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.line, self.tok[2] + 1)
        return v

    def expr(self):
        v = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            err = self.error_at(op[2])
            v = self.alg.add(v, rhs, err) if op[0] == "+" else self.alg.sub(v, rhs, err)
        return v

    def term(self):
        v = self.unary()
        circs = 0
        while self.tok[0] in ("*", "/", "@"):
            op = self.advance()
            err = self.error_at(op[2])
            if op[0] == "@":
                circs += 1
                if circs > 1:
                    raise err("'@' is not associative; parenthesize nested products")
            rhs = self.unary()
            if op[0] == "*":
                v = self.alg.mul(v, rhs, err)
            elif op[0] == "/":
                v = self.alg.div(v, rhs, err)
            else:
                v = self.alg.circ(v, rhs, err)
        return v

    def unary(self):
        if self.tok[0] == "-":
            op = self.advance()
            return self.alg.neg(self.unary(), self.error_at(op[2]))
        if self.tok[0] == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        v = self.postfix()
        if self.tok[0] == "^":
            op = self.advance()
            k = self.expect("INT")[1]
            v = self.alg.power(v, k, self.error_at(op[2]))
            if self.tok[0] == "^":
                raise ParseError("chained '^' is ambiguous; parenthesize", self.line, self.tok[2] + 1)
        return v

    def postfix(self):
        t = self.tok
        if t[0] == "INT":
            self.advance()
            return self.alg.number(Fraction(t[1]), self.error_at(t[2]))
        if t[0] == "(":
            self.advance()
            v = self.expr()
            self.expect(")")
            if self.tok[0] == "'":
                raise ParseError("primes apply to variables only", self.line, self.tok[2] + 1)
            return v
        if t[0] == "NAME":
            self.advance()
            return self.name(t)
        what = "end of input" if t[0] == "EOF" else repr(t[1])
        raise ParseError(f"unexpected {what}", self.line, t[2] + 1)

    def name(self, t):
        name, pos = t[1], t[2]
        err = self.error_at(pos)
        n, m = self.sig.n, self.sig.m
        dm = re.fullmatch(r"D(\d*)", name)
        if dm:
            k = int(dm.group(1)) if dm.group(1) else (1 if m == 1 else None)
            if k is None:
                raise err("bare 'D' needs m = 1; write D1..Dm")
            if not 1 <= k <= m:
                raise err(f"derivation index {k} out of range 1..{m}")
            if self.tok[0] == "'":
                raise ParseError("primes apply to variables only", self.line, self.tok[2] + 1)
            return self.alg.dsymbol(k, err)
        xm = re.fullmatch(r"x(\d*)", name)
        if not xm:
            raise err(f"unknown variable {name!r}")
        if xm.group(1):
            i = int(xm.group(1))
            if not 1 <= i <= n:
                raise err(f"unknown variable {name!r} (n = {n})")
        elif n == 1:
            i = 1
        else:
            raise err("bare 'x' needs n = 1; write x1..xn")
        theta = [0] * m
        if self.tok[0] == "'":
            if m != 1:
                raise ParseError("primes need m = 1; use x^[i1,...,im]", self.line, self.tok[2] + 1)
            while self.tok[0] == "'":
                self.advance()
                theta[0] += 1
        elif self.tok[0] == "^" and self.tokens[self.i + 1][0] == "[":
            self.advance()
            lb = self.advance()
            exps = [self.expect("INT")[1]]
            while self.tok[0] == ",":
                self.advance()
                exps.append(self.expect("INT")[1])
            self.expect("]")
            if len(exps) != m:
                raise ParseError(f"expected {m} derivative exponents, got {len(exps)}", self.line, lb[2] + 1)
            theta = exps
        return self.alg.variable(i, tuple(theta), err)


def parse_expr(src, kind, sig, line=1):
    """Parse ``src`` as a ``diffpoly``, ``orepoly`` or ``novikov`` value."""
    if kind not in _ALGEBRAS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if not src or not src.strip():
        raise ParseError("empty expression", line, 1)
    return _Parser(src, _ALGEBRAS[kind](sig), sig, line).parse()

"""Rational differential functions: fractions of differential polynomials.

A fraction is kept with a positive leading denominator coefficient, jointly
reduced rational content and numerator and denominator coprime.  Equality
is nevertheless decided by cross-multiplication, so nothing relies on the
normal form being canonical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .core import DiffPoly, _mono_gcd
from .errors import SignatureError
from .polygcd import cancel_common_factor, poly_lcm

__all__ = ["RatFunc", "ratfunc_arith", "ratfunc_derive"]


def _normalize(num, den):
    if not den.terms:
        raise ZeroDivisionError("rational function with zero denominator")
    sig = num.sig
    if not num.terms:
        return num, DiffPoly.one(sig)
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), DiffPoly.one(sig)

    g = _mono_gcd(num.monomial_content(), den.monomial_content())
    if g:
        num = num.divide_monomial(g)
        den = den.divide_monomial(g)
        if den.is_constant():
            return num.scale(1 / den.constant_value()), DiffPoly.one(sig)

    num, den = cancel_common_factor(num, den)
    if den.is_constant():
        return num.scale(1 / den.constant_value()), DiffPoly.one(sig)

    cn = num.rational_content()
    cd = den.rational_content()
    joint = Fraction(gcd(cn.numerator, cd.numerator), lcm(cn.denominator, cd.denominator))
    if den.leading_term()[1] < 0:
        joint = -joint
    if joint != 1:
        inv = 1 / joint
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


class RatFunc:
    """A quotient ``num/den`` of differential polynomials, ``den != 0``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = DiffPoly.one(num.sig)
        elif den.sig != num.sig:
            raise SignatureError("numerator and denominator signatures differ")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, DiffPoly.one(p.sig))

    @classmethod
    def zero(cls, sig):
        return cls._raw(DiffPoly.zero(sig), DiffPoly.one(sig))

    @classmethod
    def one(cls, sig):
        return cls._raw(DiffPoly.one(sig), DiffPoly.one(sig))

    @classmethod
    def constant(cls, sig, c):
        return cls._raw(DiffPoly.constant(sig, c), DiffPoly.one(sig))

    @property
    def sig(self):
        return self.num.sig

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self):
        return self.den.terms == {(): 1}

    def is_constant(self):
        return self.is_polynomial() and self.num.is_constant()

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.sig != self.sig:
                raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")
            return other
        if isinstance(other, DiffPoly):
            if other.sig != self.sig:
                raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(self.sig, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc.from_poly(self.num + other.num)
        den, ma, mb = poly_lcm(self.den, other.den)
        return RatFunc(self.num * ma + other.num * mb, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc.zero(self.sig)
            return RatFunc._raw(self.num.scale(other), self.den)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return RatFunc.zero(self.sig)
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc.from_poly(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("integer exponents only")
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def derive(self, k=1):
        """Quotient rule for ``delta_k``."""
        if self.is_polynomial():
            return RatFunc.from_poly(self.num.derive(k))
        dn = self.num.derive(k)
        dd = self.den.derive(k)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def apply_theta(self, theta):
        if self.is_polynomial():
            return RatFunc.from_poly(self.num.apply_theta(theta))
        f = self
        for k, times in enumerate(theta, start=1):
            for _ in range(times):
                f = f.derive(k)
        return f

    def size(self):
        """Rough cost measure used for pivot choice."""
        return len(self.num.terms) + len(self.den.terms)

    def total_degree(self):
        return self.num.total_degree() + max(self.den.total_degree(), 0)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def ratfunc_arith(op, a, b=None):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")


def ratfunc_derive(i, a):
    return a.derive(i)

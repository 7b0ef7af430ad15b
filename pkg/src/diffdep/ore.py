"""Differential operators with rational-function coefficients.

An operator is a finite sum ``sum_theta r_theta * theta`` with coefficients
written on the left.  Multiplication follows ``delta_i r = r delta_i +
delta_i(r)``, which for a general ``theta`` expands to the Leibniz formula

    theta * r = sum_{mu <= theta} binom(theta, mu) * (theta/mu)(r) * mu.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

from .core import DerivOp, DiffPoly, derivops_up_to, substitute
from .errors import InvariantError, ResourceLimitError, SignatureError
from .linalg import first_kernel_vector
from .ratfunc import RatFunc

__all__ = [
    "OrePoly",
    "ore_mul",
    "ore_apply",
    "ore_common_multiple",
    "ore_kernel_at_order",
    "DEFAULT_MAX_ORE_ORDER",
]

DEFAULT_MAX_ORE_ORDER = 10


def _as_ratfunc(sig, r):
    if isinstance(r, RatFunc):
        return r
    if isinstance(r, DiffPoly):
        return RatFunc.from_poly(r)
    return RatFunc.constant(sig, r)


class OrePoly:
    """An element of B[Delta]; ``coeffs`` maps DerivOp -> nonzero RatFunc."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig, coeffs=None):
        self.sig = sig
        clean = {}
        for theta, r in (coeffs or {}).items():
            theta = DerivOp(theta)
            if len(theta) != sig.m:
                raise SignatureError(f"operator {tuple(theta)} has wrong arity for m={sig.m}")
            r = _as_ratfunc(sig, r)
            if r.sig != sig:
                raise SignatureError("coefficient signature mismatch")
            if not r.is_zero():
                clean[theta] = r
        self.coeffs = clean

    @classmethod
    def _new(cls, sig, coeffs):
        obj = object.__new__(cls)
        obj.sig = sig
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, sig):
        return cls._new(sig, {})

    @classmethod
    def scalar(cls, sig, r):
        r = _as_ratfunc(sig, r)
        if r.is_zero():
            return cls._new(sig, {})
        return cls._new(sig, {DerivOp.identity(sig.m): r})

    @classmethod
    def one(cls, sig):
        return cls.scalar(sig, 1)

    @classmethod
    def theta(cls, sig, theta, r=1):
        return cls(sig, {DerivOp(theta): r})

    @classmethod
    def delta(cls, sig, k):
        return cls._new(sig, {DerivOp.delta(sig.m, k): RatFunc.one(sig)})

    # structure

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def order(self):
        if not self.coeffs:
            raise ValueError("order of the zero operator is undefined")
        return max(t.order for t in self.coeffs)

    def sorted_terms(self):
        """Terms in descending graded-lex order of the operator part."""
        return sorted(self.coeffs.items(), key=lambda t: t[0].key, reverse=True)

    def leading_coefficient(self):
        return self.sorted_terms()[0][1]

    def coefficient_degree(self):
        return max((r.total_degree() for r in self.coeffs.values()), default=-1)

    def is_polynomial(self):
        return all(r.is_polynomial() for r in self.coeffs.values())

    # arithmetic

    def _lift(self, other):
        if isinstance(other, OrePoly):
            if other.sig != self.sig:
                raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")
            return other
        if isinstance(other, (RatFunc, DiffPoly, int, Fraction)):
            return OrePoly.scalar(self.sig, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        c = dict(self.coeffs)
        for t, r in other.coeffs.items():
            s = c.get(t)
            if s is None:
                c[t] = r
            else:
                s = s + r
                if s.is_zero():
                    del c[t]
                else:
                    c[t] = s
        return OrePoly._new(self.sig, c)

    __radd__ = __add__

    def __neg__(self):
        return OrePoly._new(self.sig, {t: -r for t, r in self.coeffs.items()})

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
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ore_mul(self, other)

    def __rmul__(self, other):
        # scalars on the left act coefficientwise
        if isinstance(other, (RatFunc, DiffPoly, int, Fraction)):
            return self.left_scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = OrePoly.one(self.sig)
        for _ in range(k):
            result = ore_mul(result, self)
        return result

    def left_scale(self, r):
        r = _as_ratfunc(self.sig, r)
        if r.is_zero():
            return OrePoly.zero(self.sig)
        out = {}
        for t, c in self.coeffs.items():
            v = r * c
            if not v.is_zero():
                out[t] = v
        return OrePoly._new(self.sig, out)

    def map_coefficients(self, fn):
        return OrePoly(self.sig, {t: fn(r) for t, r in self.coeffs.items()})

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(r == other.coeffs[t] for t, r in self.coeffs.items())

    __hash__ = None

    def apply(self, f):
        return ore_apply(self, f)

    def __str__(self):
        from .printing import format_orepoly
        return format_orepoly(self)

    def __repr__(self):
        return f"OrePoly({str(self)!r})"


def _leibniz_terms(theta):
    """Pairs (nu, multiplicity) with nu <= theta, multiplicity binom(theta, theta-nu)."""
    out = []
    for nu in product(*(range(t + 1) for t in theta)):
        mult = 1
        for t, v in zip(theta, nu):
            mult *= comb(t, v)
        out.append((nu, mult))
    return out


def ore_mul(a, b):
    """Product in B[Delta]."""
    if a.sig != b.sig:
        raise SignatureError(f"signature mismatch: {a.sig} vs {b.sig}")
    sig = a.sig
    result = {}
    derived = {}
    for theta, r in a.coeffs.items():
        leib = _leibniz_terms(theta)
        for sigma, s in b.coeffs.items():
            for nu, mult in leib:
                key = (sigma, nu)
                ds = derived.get(key)
                if ds is None:
                    ds = derived[key] = s.apply_theta(nu)
                if ds.is_zero():
                    continue
                op = DerivOp(t - v + w for t, v, w in zip(theta, nu, sigma))
                term = r * ds
                if mult != 1:
                    term = term * mult
                acc = result.get(op)
                result[op] = term if acc is None else acc + term
    return OrePoly._new(sig, {t: r for t, r in result.items() if not r.is_zero()})


def ore_apply(a, f):
    """Module action of ``a`` on a rational function (or polynomial) ``f``."""
    f = _as_ratfunc(a.sig, f)
    if f.sig != a.sig:
        raise SignatureError("signature mismatch")
    total = RatFunc.zero(a.sig)
    for theta, r in a.coeffs.items():
        total = total + r * f.apply_theta(theta)
    return total


def substitute_coefficients(op, gs):
    """Substitute ``gs`` into the polynomial coefficients of ``op``."""
    if not op.coeffs:
        return OrePoly.zero(gs[0].sig)
    coeffs = {}
    for t, r in op.coeffs.items():
        if not r.is_polynomial():
            raise ValueError("coefficient substitution needs polynomial coefficients")
        coeffs[t] = RatFunc.from_poly(substitute(r.num, gs))
    return OrePoly(gs[0].sig, coeffs)


def ore_kernel_at_order(a, b, s, _cache=None):
    """Search level ``s`` of the common-multiple problem.

    Solves ``sum c_theta (theta a) = sum d_theta (theta b)`` over B with
    ``|theta| <= s``.  Returns ``(c, d)`` or ``None``.
    """
    sig = a.sig
    thetas = derivops_up_to(sig.m, s)
    cache = {} if _cache is None else _cache

    def times(which, op, theta):
        key = (which, theta)
        v = cache.get(key)
        if v is None:
            v = cache[key] = ore_mul(OrePoly.theta(sig, theta), op)
        return v

    cols = [times("a", a, t) for t in thetas] + [-times("b", b, t) for t in thetas]
    eq_index = sorted({t for col in cols for t in col.coeffs}, key=lambda t: t.key)
    matrix = [[col.coeffs.get(t) for col in cols] for t in eq_index]
    x = first_kernel_vector(matrix, len(cols), sig, normalize=True)
    if x is None:
        return None
    k = len(thetas)
    c = OrePoly(sig, {t: x[i] for i, t in enumerate(thetas)})
    d = OrePoly(sig, {t: x[k + i] for i, t in enumerate(thetas)})
    return c, d


def ore_common_multiple(a, b, max_order=DEFAULT_MAX_ORE_ORDER, check=False):
    """Find ``c, d`` with ``c*a == d*b != 0`` of minimal search order ``s``.

    Returns ``(c, d, s)``.  Raises ResourceLimitError if no solution exists
    with ``s <= max_order``.  With ``check=True`` the identity is verified by
    multiplication before returning.
    """
    if a.sig != b.sig:
        raise SignatureError(f"signature mismatch: {a.sig} vs {b.sig}")
    if a.is_zero() or b.is_zero():
        raise ValueError("common multiples need nonzero operands")
    cache = {}
    for s in range(max_order + 1):
        found = ore_kernel_at_order(a, b, s, cache)
        if found is None:
            continue
        c, d = found
        if check:
            ca = ore_mul(c, a)
            if ca.is_zero() or ca != ore_mul(d, b):
                raise InvariantError(f"bad common multiple for {a} and {b}")
        return c, d, s
    raise ResourceLimitError(
        f"no common left multiple of order <= {max_order} found for ({a}) and ({b})"
    )

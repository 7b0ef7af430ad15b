"""Differential polynomials over the rationals.

A differential polynomial in ``x1..xn`` with ``m`` commuting derivations is a
polynomial in the symbols ``x_i^theta`` where ``theta`` runs over all
exponent vectors of the derivations.  Internally a symbol is the plain tuple
``(i, |theta|, theta)``; with that layout Python's native tuple order is the
graded-lexicographic variable order used for printing and term ordering.

A monomial is a tuple of ``(symbol, exponent)`` pairs sorted in descending
symbol order; the empty tuple is the monomial 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from typing import NamedTuple

from .errors import DegreeError, SignatureError

__all__ = [
    "AlgebraSignature",
    "DerivOp",
    "DiffVar",
    "DiffPoly",
    "Degrees",
    "poly_arith",
    "apply_theta",
    "degrees",
    "rho_components",
    "substitute",
    "derivops_up_to",
]


@dataclass(frozen=True)
class AlgebraSignature:
    """Number of differential indeterminates ``n`` and derivations ``m``."""

    n: int
    m: int = 1

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise SignatureError(f"need n >= 1, got {self.n!r}")
        if not (isinstance(self.m, int) and self.m >= 1):
            raise SignatureError(f"need m >= 1, got {self.m!r}")


class DerivOp(tuple):
    """A derivative operator ``delta_1^i1 ... delta_m^im`` as its exponent vector.

    Composition is componentwise addition, written ``theta * sigma``.
    """

    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return tuple.__new__(cls, exps)

    @classmethod
    def identity(cls, m):
        return tuple.__new__(cls, (0,) * m)

    @classmethod
    def delta(cls, m, k):
        """The single derivation ``delta_k`` (1-based) among ``m``."""
        if not 1 <= k <= m:
            raise ValueError(f"derivation index {k} out of range 1..{m}")
        return tuple.__new__(cls, tuple(1 if j == k - 1 else 0 for j in range(m)))

    @property
    def order(self):
        return sum(self)

    @property
    def key(self):
        """Sort key for the graded-lexicographic order."""
        return (sum(self), tuple(self))

    def __mul__(self, other):
        if len(self) != len(other):
            raise SignatureError("derivative operators over different Delta")
        return tuple.__new__(DerivOp, tuple(a + b for a, b in zip(self, other)))

    def divides(self, other):
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return tuple.__new__(DerivOp, tuple(a - b for a, b in zip(self, other)))

    def __repr__(self):
        return f"DerivOp({tuple(self)})"


class DiffVar(NamedTuple):
    """The symbol ``x_{var_index}^theta``; tuple order is the term order."""

    var_index: int
    order: int
    theta: tuple

    @classmethod
    def make(cls, var_index, theta):
        theta = tuple(theta)
        return cls(var_index, sum(theta), theta)


class Degrees(NamedTuple):
    """Degree data of a nonzero differential polynomial.

    ``deg``, ``d`` and ``rho`` are ``None`` when the polynomial is not
    homogeneous with respect to that degree function.
    """

    deg: int | None
    d: int | None
    rho: int | None
    per_var: tuple

    def deg_in_var(self, i):
        """Largest x_i-degree over the monomials (1-based ``i``)."""
        return self.per_var[i - 1]


def derivops_up_to(m, s):
    """All derivative operators of order at most ``s``, graded-lex ascending."""
    ops = [DerivOp(e) for e in product(range(s + 1), repeat=m) if sum(e) <= s]
    ops.sort(key=lambda t: t.key)
    return ops


# products with more term pairs than this go through FLINT
_FLINT_MUL_THRESHOLD = 4000


# -- monomial helpers -------------------------------------------------------

def _sorted_mono(d):
    return tuple(sorted(d.items(), reverse=True))


@lru_cache(maxsize=1 << 16)
def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return _sorted_mono(d)


def _mono_deg(u):
    return sum(e for _, e in u)


def _mono_key(u):
    return (_mono_deg(u), u)


def _mono_divides(a, b):
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def _mono_div(b, a):
    d = dict(b)
    for v, e in a:
        r = d[v] - e
        if r:
            d[v] = r
        else:
            del d[v]
    return _sorted_mono(d)


def _mono_gcd(a, b):
    db = dict(b)
    return _sorted_mono({v: min(e, db[v]) for v, e in a if v in db})


@lru_cache(maxsize=1 << 16)
def _mono_derive(u, k):
    """delta_k of a monomial as a list of (coefficient, monomial)."""
    out = []
    d = dict(u)
    for v, e in u:
        i, order, theta = v
        t = list(theta)
        t[k] += 1
        w = (i, order + 1, tuple(t))
        nd = dict(d)
        if e == 1:
            del nd[v]
        else:
            nd[v] = e - 1
        nd[w] = nd.get(w, 0) + 1
        out.append((e, _sorted_mono(nd)))
    return tuple(out)


def _coerce_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _format_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_var(v, m):
    i, order, theta = v
    if order == 0:
        return f"x{i}"
    if m == 1:
        return f"x{i}" + "'" * order
    return f"x{i}^[{','.join(str(t) for t in theta)}]"


def format_monomial(u, m):
    parts = []
    for v, e in u:
        s = format_var(v, m)
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


# -- differential polynomials ----------------------------------------------

class DiffPoly:
    """An element of Q{x1..xn}: a finite map monomial -> nonzero rational.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("sig", "terms", "_hash")

    def __init__(self, sig, terms=None):
        self.sig = sig
        clean = {}
        if terms:
            for u, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    clean[u] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _new(cls, sig, terms):
        obj = object.__new__(cls)
        obj.sig = sig
        obj.terms = terms
        obj._hash = None
        return obj

    # construction

    @classmethod
    def zero(cls, sig):
        return cls._new(sig, {})

    @classmethod
    def constant(cls, sig, c):
        c = _coerce_coeff(c)
        return cls._new(sig, {(): c} if c else {})

    @classmethod
    def one(cls, sig):
        return cls._new(sig, {(): Fraction(1)})

    @classmethod
    def variable(cls, sig, i, theta=None):
        """The symbol ``x_i^theta`` (``i`` is 1-based; theta defaults to 1)."""
        if not 1 <= i <= sig.n:
            raise SignatureError(f"variable index {i} out of range 1..{sig.n}")
        theta = (0,) * sig.m if theta is None else tuple(theta)
        if len(theta) != sig.m or any(t < 0 for t in theta):
            raise SignatureError(f"bad derivative exponents {theta} for m={sig.m}")
        v = (i, sum(theta), theta)
        return cls._new(sig, {((v, 1),): Fraction(1)})

    @classmethod
    def from_monomial(cls, sig, mono, c=1):
        return cls._new(sig, {tuple(mono): _coerce_coeff(c)})

    # coercion

    def _lift(self, other):
        if isinstance(other, DiffPoly):
            if other.sig != self.sig:
                raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")
            return other
        if isinstance(other, (int, Fraction)):
            return DiffPoly.constant(self.sig, other)
        return None

    # ring operations

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        t = dict(self.terms)
        for u, c in other.terms.items():
            s = t.get(u)
            if s is None:
                t[u] = c
            else:
                s += c
                if s:
                    t[u] = s
                else:
                    del t[u]
        return DiffPoly._new(self.sig, t)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly._new(self.sig, {u: -c for u, c in self.terms.items()})

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
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(self.terms) * len(other.terms) > _FLINT_MUL_THRESHOLD:
            from .polygcd import poly_mul
            return poly_mul(self, other)
        t = {}
        for u, a in self.terms.items():
            for w, b in other.terms.items():
                uw = _mono_mul(u, w)
                s = t.get(uw)
                t[uw] = a * b if s is None else s + a * b
        return DiffPoly._new(self.sig, {u: c for u, c in t.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = DiffPoly.one(self.sig)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = _coerce_coeff(c)
        if not c:
            return DiffPoly.zero(self.sig)
        return DiffPoly._new(self.sig, {u: a * c for u, a in self.terms.items()})

    # comparisons

    def __eq__(self, other):
        if isinstance(other, DiffPoly):
            return self.sig == other.sig and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    # structure

    def sorted_terms(self):
        """Terms in descending (degree, lex) order."""
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def leading_term(self):
        u = max(self.terms, key=_mono_key)
        return u, self.terms[u]

    def total_degree(self):
        return max((_mono_deg(u) for u in self.terms), default=-1)

    def variables(self):
        return {v for u in self.terms for v, _ in u}

    def monomial_content(self):
        """The gcd of all monomials (the empty monomial for zero)."""
        it = iter(self.terms)
        g = next(it, ())
        for u in it:
            if not g:
                break
            g = _mono_gcd(g, u)
        return g

    def rational_content(self):
        """Positive rational c with self/c integral and of content 1."""
        if not self.terms:
            return Fraction(1)
        nums = 0
        dens = 1
        for c in self.terms.values():
            nums = gcd(nums, c.numerator)
            dens = lcm(dens, c.denominator)
        return Fraction(nums, dens)

    def divide_monomial(self, mono):
        return DiffPoly._new(self.sig, {_mono_div(u, mono): c for u, c in self.terms.items()})

    def mul_monomial(self, mono):
        return DiffPoly._new(self.sig, {_mono_mul(u, mono): c for u, c in self.terms.items()})

    def divide_exact(self, g):
        """Return ``q`` with ``q * g == self``, or ``None`` if ``g`` does not divide."""
        g = self._lift(g)
        if not g.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        gu, gc = g.leading_term()
        if len(g.terms) == 1:
            if not all(_mono_divides(gu, u) for u in self.terms):
                return None
            return DiffPoly._new(self.sig, {_mono_div(u, gu): c / gc for u, c in self.terms.items()})
        q = {}
        r = dict(self.terms)
        gterms = list(g.terms.items())
        while r:
            ru = max(r, key=_mono_key)
            if not _mono_divides(gu, ru):
                return None
            tu = _mono_div(ru, gu)
            tc = r[ru] / gc
            q[tu] = tc
            for w, b in gterms:
                uw = _mono_mul(tu, w)
                s = r.get(uw, 0) - tc * b
                if s:
                    r[uw] = s
                else:
                    r.pop(uw, None)
        return DiffPoly._new(self.sig, q)

    # differential structure

    def derive(self, k=1):
        """Apply the derivation ``delta_k`` (1-based)."""
        if not 1 <= k <= self.sig.m:
            raise SignatureError(f"derivation index {k} out of range 1..{self.sig.m}")
        t = {}
        for u, c in self.terms.items():
            for e, w in _mono_derive(u, k - 1):
                s = t.get(w)
                t[w] = c * e if s is None else s + c * e
        return DiffPoly._new(self.sig, {u: c for u, c in t.items() if c})

    def apply_theta(self, theta):
        if len(theta) != self.sig.m:
            raise SignatureError(f"operator {tuple(theta)} has wrong arity for m={self.sig.m}")
        f = self
        for k, times in enumerate(theta, start=1):
            for _ in range(times):
                f = f.derive(k)
        return f

    def partial(self, v):
        """Ordinary partial derivative with respect to the symbol ``v``."""
        v = tuple(v)
        t = {}
        for u, c in self.terms.items():
            for w, e in u:
                if w == v:
                    d = dict(u)
                    if e == 1:
                        del d[w]
                    else:
                        d[w] = e - 1
                    t[_sorted_mono(d)] = c * e
                    break
        return DiffPoly._new(self.sig, t)

    # display

    def __str__(self):
        if not self.terms:
            return "0"
        m = self.sig.m
        out = []
        for u, c in self.sorted_terms():
            if not u:
                s = _format_coeff(c)
            elif c == 1:
                s = format_monomial(u, m)
            elif c == -1:
                s = "-" + format_monomial(u, m)
            else:
                s = f"{_format_coeff(c)}*{format_monomial(u, m)}"
            if out:
                out.append(" - " + s[1:] if s.startswith("-") else " + " + s)
            else:
                out.append(s)
        return "".join(out)

    def __repr__(self):
        return f"DiffPoly({str(self)!r})"


# -- operations -------------------------------------------------------------

def poly_arith(op, f, g):
    """Exact ring arithmetic: ``op`` is one of add, sub, mul, pow."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "pow":
        return f ** g
    raise ValueError(f"unknown operation {op!r}")


def apply_theta(theta, f):
    return f.apply_theta(theta)


def degrees(f):
    if not f.terms:
        raise DegreeError("degrees of the zero polynomial are undefined")
    degs, ds, rhos = set(), set(), set()
    per_var = [0] * f.sig.n
    for u in f.terms:
        deg = d = 0
        by_var = [0] * f.sig.n
        for (i, order, _), e in u:
            deg += e
            d += order * e
            by_var[i - 1] += e
        degs.add(deg)
        ds.add(d)
        rhos.add(deg - d)
        per_var = [max(a, b) for a, b in zip(per_var, by_var)]

    def single(s):
        return next(iter(s)) if len(s) == 1 else None

    return Degrees(single(degs), single(ds), single(rhos), tuple(per_var))


def _mono_rho(u):
    return sum(e * (1 - order) for (_, order, _), e in u)


def rho_components(f):
    """Split ``f`` into rho-homogeneous parts, ascending in rho.

    The last entry is the highest homogeneous part.
    """
    groups = {}
    for u, c in f.terms.items():
        groups.setdefault(_mono_rho(u), {})[u] = c
    return [(r, DiffPoly._new(f.sig, groups[r])) for r in sorted(groups)]


def substitute(g, fs):
    """Replace each ``x_j^theta`` in ``g`` by ``theta(fs[j])`` and evaluate."""
    fs = list(fs)
    if len(fs) != g.sig.n:
        raise SignatureError(f"expected {g.sig.n} substitutes, got {len(fs)}")
    if not fs:
        raise SignatureError("nothing to substitute")
    sig = fs[0].sig
    for f in fs:
        if f.sig != sig:
            raise SignatureError("substitutes have different signatures")
    if sig.m != g.sig.m:
        raise SignatureError(f"derivation count mismatch: {g.sig.m} vs {sig.m}")

    images = {}

    def image(v):
        r = images.get(v)
        if r is None:
            i, _, theta = v
            r = images[v] = fs[i - 1].apply_theta(theta)
        return r

    total = DiffPoly.zero(sig)
    for u, c in g.terms.items():
        term = DiffPoly.constant(sig, c)
        for v, e in u:
            term = term * image(v) ** e
        total = total + term
    return total

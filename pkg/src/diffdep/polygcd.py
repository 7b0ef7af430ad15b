"""Multivariate polynomial gcd, delegated to FLINT.

Only the symbols that actually occur are passed to FLINT, so a call costs
one conversion each way plus the gcd itself.  ``FractionContext`` keeps
values in FLINT form across a whole elimination.
"""

from __future__ import annotations

from fractions import Fraction

import flint

from .core import DiffPoly, _mono_key

__all__ = ["poly_mul", "poly_gcd", "poly_lcm", "cancel_common_factor", "FractionContext"]


def _context(nvars):
    return flint.fmpq_mpoly_ctx.get(tuple(f"v{k}" for k in range(nvars)), "lex")


def _to_flint(p, index, ctx):
    n = len(index)
    data = {}
    for u, c in p.terms.items():
        exps = [0] * n
        for v, e in u:
            exps[index[v]] = e
        data[tuple(exps)] = flint.fmpq(c.numerator, c.denominator)
    return ctx.from_dict(data)


def _flint_monos(q, symbols):
    for exps in q.monoms():
        yield tuple((symbols[k], int(e)) for k in range(len(exps) - 1, -1, -1) if (e := exps[k]))


def _from_flint(q, symbols, sig):
    terms = {}
    for mono, c in zip(_flint_monos(q, symbols), q.coeffs()):
        terms[mono] = Fraction(int(c.numerator), int(c.denominator))
    return DiffPoly._new(sig, terms)


def _setup(*polys):
    symbols = sorted(set().union(*(p.variables() for p in polys)))
    index = {v: k for k, v in enumerate(symbols)}
    ctx = _context(len(symbols))
    return symbols, [_to_flint(p, index, ctx) for p in polys]


def poly_mul(f, g):
    symbols, (ff, gg) = _setup(f, g)
    return _from_flint(ff * gg, symbols, f.sig)


def poly_gcd(f, g):
    """Monic gcd of ``f`` and ``g`` (zero only if both are zero)."""
    if f.is_zero() and g.is_zero():
        return f
    if f.is_constant() and not f.is_zero() or g.is_constant() and not g.is_zero():
        return DiffPoly.one(f.sig)
    symbols, (ff, gg) = _setup(f, g)
    return _from_flint(ff.gcd(gg), symbols, f.sig)


def cancel_common_factor(num, den):
    """Divide ``num`` and ``den`` by their gcd."""
    if num.is_constant() or den.is_constant():
        return num, den
    symbols, (nf, df) = _setup(num, den)
    g = nf.gcd(df)
    if g.total_degree() == 0:
        return num, den
    return _from_flint(nf / g, symbols, num.sig), _from_flint(df / g, symbols, num.sig)


def poly_lcm(f, g):
    """Return ``(l, l/f, l/g)`` for a least common multiple ``l``."""
    one = DiffPoly.one(f.sig)
    if f == g:
        return f, one, one
    if f.is_constant():
        return g, g.scale(1 / f.constant_value()), one
    if g.is_constant():
        return f, one, f.scale(1 / g.constant_value())
    symbols, (ff, gg) = _setup(f, g)
    d = ff.gcd(gg)
    cf = gg / d
    cg = ff / d
    return _from_flint(ff * cf, symbols, f.sig), _from_flint(cf, symbols, f.sig), _from_flint(cg, symbols, f.sig)


class FractionContext:
    """Fractions of FLINT polynomials over the symbols of a fixed set of inputs.

    Elements are pairs ``(num, den)`` with coprime parts and a monic
    denominator, so equality and zero tests are structural.  Used for the
    inner loops of elimination; results are converted back at the end.
    """

    def __init__(self, sig, polys):
        self.sig = sig
        self.symbols = sorted(set().union(*(p.variables() for p in polys)))
        self.index = {v: k for k, v in enumerate(self.symbols)}
        self.ctx = _context(max(len(self.symbols), 1))
        self.zero = (self.ctx.from_dict({}), self.ctx.from_dict({(0,) * self.ctx.nvars(): 1}))
        self.one = (self.zero[1], self.zero[1])

    def poly(self, p):
        if not p.terms:
            return self.zero[0]
        n = self.ctx.nvars()
        data = {}
        for u, c in p.terms.items():
            exps = [0] * n
            for v, e in u:
                exps[self.index[v]] = e
            data[tuple(exps)] = flint.fmpq(c.numerator, c.denominator)
        return self.ctx.from_dict(data)

    def lift(self, r):
        return self.reduce(self.poly(r.num), self.poly(r.den))

    def to_diffpoly(self, q):
        if not self.symbols:
            c = q.to_dict().get((0,) * self.ctx.nvars(), 0)
            return DiffPoly.constant(self.sig, Fraction(int(c.numerator), int(c.denominator)) if c else 0)
        return _from_flint(q, self.symbols, self.sig)

    def drop(self, x):
        from .ratfunc import RatFunc
        num, den = x
        if den.is_one():
            return RatFunc.from_poly(self.to_diffpoly(num))
        return RatFunc(self.to_diffpoly(num), self.to_diffpoly(den))

    def reduce(self, num, den):
        if num.is_zero():
            return self.zero
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_constant():
                num = num / g
                den = den / g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        return num, den

    def mul(self, x, y):
        if x[0].is_zero() or y[0].is_zero():
            return self.zero
        return self.reduce(x[0] * y[0], x[1] * y[1])

    def inverse(self, x):
        return self.reduce(x[1], x[0])

    def neg(self, x):
        return -x[0], x[1]

    def sub(self, x, y):
        if y[0].is_zero():
            return x
        if x[1] == y[1]:
            return self.reduce(x[0] - y[0], x[1])
        g = x[1].gcd(y[1])
        cx = y[1] / g
        return self.reduce(x[0] * cx - y[0] * (x[1] / g), x[1] * cx)

    def leading_sign(self, q):
        """Sign of the leading coefficient of ``q`` in the DiffPoly term order."""
        monos = list(_flint_monos(q, self.symbols)) if self.symbols else [()]
        k = max(range(len(monos)), key=lambda i: _mono_key(monos[i]))
        return 1 if q.coeffs()[k] > 0 else -1

    @staticmethod
    def is_zero(x):
        return x[0].is_zero()

    @staticmethod
    def size(x):
        return len(x[0]) + len(x[1])

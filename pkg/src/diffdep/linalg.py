"""Exact elimination over B (rational differential functions) and over A.

Two routines are needed by the decision procedures: the first kernel vector
of a matrix over the field B, and the rank of a polynomial matrix over the
fraction field of A via fraction-free elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import flint

from .polygcd import FractionContext
from .ratfunc import RatFunc

__all__ = ["first_kernel_vector", "bareiss_rank", "normalizing_factor", "normalize_vector"]


def _entries(matrix):
    for r in matrix:
        for e in r:
            if e is not None:
                yield e


def _context_for(scalars, sig):
    polys = []
    for e in scalars:
        polys.append(e.num)
        polys.append(e.den)
    return FractionContext(sig, polys)


def first_kernel_vector(matrix, ncols, sig, normalize=False):
    """Kernel vector of ``matrix`` (rows of RatFunc or None) for the first free column.

    Returns ``None`` when the columns are independent.  The vector has a 1
    in the first free column and zeros in the later ones; such a vector is
    unique, so the result does not depend on pivot choices.  With
    ``normalize=True`` it is rescaled as by ``normalize_vector``.
    """
    F = _context_for(_entries(matrix), sig)
    rows = [[F.zero if e is None or e.is_zero() else F.lift(e) for e in r] for r in matrix]
    pivots = []  # (column, row)
    rank = 0
    for col in range(ncols):
        best = None
        for i in range(rank, len(rows)):
            e = rows[i][col]
            if not F.is_zero(e) and (best is None or F.size(e) < F.size(rows[best][col])):
                best = i
        if best is None:
            x = _back_substitute(F, rows, pivots, col, ncols)
            if normalize:
                polys = _normalize_pairs(F, x)[3]
                return [RatFunc.from_poly(F.to_diffpoly(p)) for p in polys]
            return [F.drop(e) for e in x]
        rows[rank], rows[best] = rows[best], rows[rank]
        prow = rows[rank]
        inv = F.inverse(prow[col])
        for j in range(col + 1, ncols):
            if not F.is_zero(prow[j]):
                prow[j] = F.mul(prow[j], inv)
        prow[col] = F.one
        for r in rows[rank + 1:]:
            f = r[col]
            if F.is_zero(f):
                continue
            for j in range(col + 1, ncols):
                if not F.is_zero(prow[j]):
                    r[j] = F.sub(r[j], F.mul(prow[j], f))
            r[col] = F.zero
        pivots.append((col, rank))
        rank += 1
    return None


def _back_substitute(F, rows, pivots, free, ncols):
    x = {free: F.one}
    for pcol, prow in reversed(pivots):
        acc = F.zero
        for j, v in x.items():
            e = rows[prow][j]
            if not F.is_zero(e):
                acc = F.sub(acc, F.mul(e, v))
        x[pcol] = acc
    return [x.get(j, F.zero) for j in range(ncols)]


def _normalize_pairs(F, xs):
    mult = F.one[0]
    for num, den in xs:
        if not den.is_one():
            mult = mult * (den / mult.gcd(den))
    polys = [num * (mult / den) for num, den in xs]
    common = None
    for p in polys:
        if p.is_zero():
            continue
        common = p if common is None else common.gcd(p)
        if common.is_constant():
            break
    if not common.is_constant():
        polys = [p / common for p in polys]
    else:
        common = F.one[0]
    num_g, den_l = 0, 1
    for p in polys:
        for c in p.coeffs():
            num_g = gcd(num_g, int(c.numerator))
            den_l = lcm(den_l, int(c.denominator))
    content = Fraction(num_g, den_l)
    first = next(p for p in polys if not p.is_zero())
    if F.leading_sign(first) < 0:
        content = -content
    scale = flint.fmpq(content.denominator, content.numerator)
    return mult, common, content, [p * scale for p in polys]


def normalize_vector(scalars):
    """Return ``(lam, [lam*s for s in scalars])``, see ``normalizing_factor``."""
    nonzero = [s for s in scalars if not s.is_zero()]
    sig = nonzero[0].sig
    F = _context_for(nonzero, sig)
    mult, common, content, polys = _normalize_pairs(F, [F.lift(s) for s in scalars])
    out = [RatFunc.from_poly(F.to_diffpoly(p)) for p in polys]
    lam = RatFunc(F.to_diffpoly(mult), F.to_diffpoly(common).scale(content))
    return lam, out


def normalizing_factor(scalars):
    """Nonzero lam in B making ``lam*s`` a primitive polynomial vector.

    The products are polynomials with no common polynomial factor, integer
    coefficients of content 1, and the first nonzero product has a positive
    leading coefficient.  ``scalars`` must contain a nonzero RatFunc.
    """
    return normalize_vector(scalars)[0]


def bareiss_rank(matrix):
    """Rank of a matrix of DiffPoly over Frac(A), fraction-free.

    Every division performed is exact; an inexact one raises
    ``ArithmeticError`` since it would indicate a bug.
    """
    entries = [e for r in matrix for e in r]
    if not entries:
        return 0
    F = FractionContext(entries[0].sig, entries)
    rows = [[F.poly(e) for e in r] for r in matrix]
    ncols = len(rows[0])
    prev = F.one[0]
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            e = rows[i][col]
            if not e.is_zero() and (piv is None or len(e) < len(rows[piv][col])):
                piv = i
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in rows[rank + 1:]:
            a = r[col]
            for j in range(col + 1, ncols):
                v = p[col] * r[j] - a * p[j]
                q, rem = divmod(v, prev)
                if not rem.is_zero():
                    raise ArithmeticError("inexact Bareiss division")
                r[j] = q
            r[col] = F.zero[0]
        prev = p[col]
        rank += 1
        if rank == len(rows):
            break
    return rank

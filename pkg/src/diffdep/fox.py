"""Fox derivatives d_{x_i}: B -> B[Delta] and Jacobian matrices.

For a polynomial the universal derivation sends the symbol ``x_i^theta`` to
``theta`` in slot ``i``, so ``d_{x_i}(f) = sum_theta (df/dx_i^theta) theta``.
Quotients follow ``d(p/q) = q^-2 (q d(p) - p d(q))`` with left scalars.
"""

from __future__ import annotations

from .core import DerivOp, DiffPoly
from .errors import SignatureError
from .ore import OrePoly, ore_mul, substitute_coefficients
from .ratfunc import RatFunc

__all__ = ["fox_gradient", "fox_derivative", "jacobian", "vector_matrix_product"]


def _poly_gradient(p):
    sig = p.sig
    slots = [dict() for _ in range(sig.n)]
    for v in p.variables():
        i, _, theta = v
        slots[i - 1][DerivOp(theta)] = RatFunc.from_poly(p.partial(v))
    return tuple(OrePoly._new(sig, s) for s in slots)


def fox_gradient(f):
    """The vector ``(d_{x_1}(f), ..., d_{x_n}(f))`` for f in A or B."""
    if isinstance(f, DiffPoly):
        return _poly_gradient(f)
    if not isinstance(f, RatFunc):
        raise TypeError(f"expected DiffPoly or RatFunc, got {type(f).__name__}")
    if f.is_polynomial():
        return _poly_gradient(f.num)
    num, den = f.num, f.den
    dn = _poly_gradient(num)
    dd = _poly_gradient(den)
    scale = RatFunc(DiffPoly.one(f.sig), den * den)
    out = []
    for a, b in zip(dn, dd):
        out.append((a.left_scale(den) - b.left_scale(num)).left_scale(scale))
    return tuple(out)


def fox_derivative(i, f):
    return fox_gradient(f)[i - 1]


def jacobian(fs):
    """Rows are the Fox gradients of ``fs``."""
    fs = list(fs)
    if not fs:
        raise ValueError("jacobian of an empty list")
    sig = fs[0].sig
    for f in fs:
        if f.sig != sig:
            raise SignatureError("inputs have different signatures")
    return tuple(fox_gradient(f) for f in fs)


def vector_matrix_product(vec, matrix):
    """Row vector times matrix over B[Delta]."""
    if len(vec) != len(matrix):
        raise SignatureError(f"length {len(vec)} vs {len(matrix)} rows")
    ncols = len(matrix[0])
    sig = matrix[0][0].sig
    out = []
    for j in range(ncols):
        acc = OrePoly.zero(sig)
        for v, row in zip(vec, matrix):
            if not v.is_zero() and not row[j].is_zero():
                acc = acc + ore_mul(v, row[j])
        out.append(acc)
    return tuple(out)


def chain_rule_product(f, gs):
    """``d(f)`` evaluated at ``gs``, times ``J(gs)``.

    ``f`` is a polynomial in ``len(gs)`` variables; the result is what the
    chain rule says ``fox_gradient(substitute(f, gs))`` must equal.
    """
    outer = [substitute_coefficients(op, gs) for op in fox_gradient(f)]
    return vector_matrix_product(outer, jacobian(gs))

"""Free Novikov algebras inside ordinary differential polynomials.

With one derivation, ``f o g = f * g'`` turns Q{x1..xn} into a Novikov
algebra, and the subalgebra generated by ``x1..xn`` is free.  It is spanned
by the monomials ``u`` with ``rho(u) = deg(u) - d(u) = 1``.  The unital
algebra N = Q + N0 is obtained by adjoining a formal identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .core import AlgebraSignature, DiffPoly, _mono_rho, _sorted_mono, rho_components
from .depsolve import diff_alg_dependent
from .errors import InvariantError, SignatureError
from .ore import DEFAULT_MAX_ORE_ORDER

__all__ = [
    "NovikovElement",
    "Var",
    "Const",
    "Circ",
    "Add",
    "Sub",
    "Scale",
    "scale",
    "nov_product",
    "embed",
    "nov_basis",
    "is_in_N0",
    "novikov_dependent",
    "witness_transform",
    "novikov_witness",
]


def is_in_N0(f):
    """True iff every monomial of ``f`` has rho = 1 (zero included)."""
    if f.sig.m != 1:
        raise SignatureError("Novikov algebras need exactly one derivation")
    return all(_mono_rho(u) == 1 for u in f.terms)


@dataclass(frozen=True)
class NovikovElement:
    """``scalar * 1 + body`` with ``body`` in N0."""

    scalar: Fraction
    body: DiffPoly

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if not is_in_N0(self.body):
            raise InvariantError(f"{self.body} is not in the rho = 1 span")

    @property
    def sig(self):
        return self.body.sig

    @classmethod
    def generator(cls, sig, i):
        return cls(Fraction(0), DiffPoly.variable(sig, i))

    @classmethod
    def constant(cls, sig, c):
        return cls(Fraction(c), DiffPoly.zero(sig))

    def __add__(self, other):
        return NovikovElement(self.scalar + other.scalar, self.body + other.body)

    def __sub__(self, other):
        return NovikovElement(self.scalar - other.scalar, self.body - other.body)

    def __neg__(self):
        return NovikovElement(-self.scalar, -self.body)

    def scaled(self, c):
        c = Fraction(c)
        return NovikovElement(self.scalar * c, self.body.scale(c))

    def __matmul__(self, other):
        return nov_product(self, other)

    def is_zero(self):
        return not self.scalar and self.body.is_zero()

    def __str__(self):
        if not self.scalar:
            return str(self.body)
        if self.body.is_zero():
            return str(self.scalar)
        return f"{self.body} + {self.scalar}" if self.scalar > 0 else f"{self.body} - {-self.scalar}"


def nov_product(f, g):
    """``(a + f) o (b + g) = ab + a g + b f + f g'`` with a formal identity."""
    if f.sig != g.sig:
        raise SignatureError(f"signature mismatch: {f.sig} vs {g.sig}")
    body = f.body * g.body.derive(1)
    if not is_in_N0(body):
        raise InvariantError("product left the rho = 1 span")
    body = body + g.body.scale(f.scalar) + f.body.scale(g.scalar)
    return NovikovElement(f.scalar * g.scalar, body)


# -- expression trees ------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Circ:
    left: object
    right: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Scale:
    factor: Fraction
    operand: object

    def __post_init__(self):
        object.__setattr__(self, "factor", Fraction(self.factor))
        if isinstance(self.operand, Const):
            raise ValueError("use scale() to multiply constants")


def scale(c, e):
    """Scalar multiple, folding into a constant when ``e`` is one."""
    if isinstance(e, Const):
        return Const(Fraction(c) * e.value)
    return Scale(Fraction(c), e)


def embed(expr, sig):
    """Evaluate a Novikov expression tree in (Q{x1..xn}, o)."""
    if sig.m != 1:
        raise SignatureError("Novikov algebras need exactly one derivation")
    if isinstance(expr, Var):
        return NovikovElement.generator(sig, expr.index)
    if isinstance(expr, Const):
        return NovikovElement.constant(sig, expr.value)
    if isinstance(expr, Circ):
        return nov_product(embed(expr.left, sig), embed(expr.right, sig))
    if isinstance(expr, Add):
        return embed(expr.left, sig) + embed(expr.right, sig)
    if isinstance(expr, Sub):
        return embed(expr.left, sig) - embed(expr.right, sig)
    if isinstance(expr, Scale):
        return embed(expr.operand, sig).scaled(expr.factor)
    raise TypeError(f"not a Novikov expression: {expr!r}")


def nov_basis(n, w):
    """Monomials of degree ``w`` with rho = 1, a basis of N0 in degree ``w``.

    Returned as single-term DiffPoly objects in descending term order.
    """
    if n < 1 or w < 1:
        raise ValueError("need n >= 1 and w >= 1")
    sig = AlgebraSignature(n, 1)
    symbols = [(i, r, (r,)) for i in range(1, n + 1) for r in range(w)]
    monos = []
    for combo in combinations_with_replacement(symbols, w):
        if sum(v[1] for v in combo) != w - 1:
            continue
        counts = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        monos.append(_sorted_mono(counts))
    monos.sort(reverse=True)
    return [DiffPoly.from_monomial(sig, u) for u in monos]


def novikov_dependent(elements, max_ore_order=DEFAULT_MAX_ORE_ORDER, check=False):
    """Decide Novikov dependence; scalar parts do not affect it and are dropped."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    return diff_alg_dependent([e.body for e in elements], max_ore_order=max_ore_order, check=check)


def witness_transform(u, mode):
    """Move a rho-homogeneous relation ``u`` into rho = 1.

    ``differentiate`` applies the derivation ``s - 1`` times (needs s > 1);
    ``multiply`` returns ``u * z1^(|s| + 1)`` (needs s < 1).
    """
    if u.sig.m != 1:
        raise SignatureError("Novikov algebras need exactly one derivation")
    comps = rho_components(u)
    if not comps:
        raise ValueError("the zero polynomial has no rho degree")
    if len(comps) > 1:
        raise ValueError("input is not rho-homogeneous")
    s = comps[0][0]
    if s == 1:
        raise ValueError("rho is already 1; the element lies in N0")
    if mode == "differentiate":
        if s < 1:
            raise ValueError(f"differentiate needs rho > 1, got {s}")
        w = u
        for _ in range(s - 1):
            w = w.derive(1)
        return w
    if mode == "multiply":
        if s > 1:
            raise ValueError(f"multiply needs rho < 1, got {s}")
        return u * DiffPoly.variable(u.sig, 1) ** (abs(s) + 1)
    raise ValueError(f"unknown mode {mode!r}")


def novikov_witness(g):
    """A rho = 1 relation derived from a nonzero relation ``g``.

    If ``g(f) = 0`` for f in N0 then the highest rho-part of ``g`` also
    vanishes at f, and so does its transform returned here.
    """
    comps = rho_components(g)
    if not comps:
        raise ValueError("need a nonzero relation")
    s, top = comps[-1]
    if s == 1:
        return top
    return witness_transform(top, "differentiate" if s > 1 else "multiply")

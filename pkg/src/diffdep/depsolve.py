"""Deciding differential-algebraic dependence.

``f_1..f_m`` are differentially algebraically dependent exactly when the
rows of their Fox Jacobian are left dependent over B[Delta].  Left
dependence is decided by triangulating the Jacobian directly in B[Delta],
using common left multiples in place of division.  Every dependent verdict
carries an operator certificate ``(b_1..b_m)`` with ``sum b_i d(f_i) = 0``.

The commutative route is kept as an independent cross-check: the rank of
the ordinary Jacobian of all prolongations ``f_i^theta`` with
``|theta| <= s`` drops below their count iff those finitely many
derivatives are algebraically dependent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import derivops_up_to
from .errors import InvariantError, SignatureError
from .fox import jacobian, vector_matrix_product
from .linalg import bareiss_rank, normalizing_factor
from .ore import DEFAULT_MAX_ORE_ORDER, OrePoly, ore_common_multiple, ore_mul

__all__ = [
    "DependenceVerdict",
    "ProlongationRank",
    "left_dependent",
    "diff_alg_dependent",
    "verify_certificate",
    "verify_left_relation",
    "prolongation_rank",
    "prolongation_oracle",
]

DEPENDENT = "dependent"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class DependenceVerdict:
    status: str
    certificate: tuple | None = None
    pivots: tuple = ()

    @property
    def dependent(self):
        return self.status == DEPENDENT

    def __post_init__(self):
        if self.status not in (DEPENDENT, INDEPENDENT):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == DEPENDENT) != (self.certificate is not None):
            raise ValueError("a certificate is present exactly for dependent verdicts")


class ProlongationRank(NamedTuple):
    rank: int
    count: int

    @property
    def deficient(self):
        return self.rank < self.count


def _row_is_zero(row):
    return all(e.is_zero() for e in row)


def _flat_coefficients(vec):
    out = []
    for op in vec:
        out.extend(r for _, r in op.sorted_terms())
    return out


def _left_scale_row(lam, row):
    return [e.left_scale(lam) for e in row]


def _normalize_certificate(vec):
    lam = normalizing_factor(_flat_coefficients(vec))
    return tuple(e.left_scale(lam) for e in vec)


def verify_left_relation(rows, cert):
    """True iff ``cert`` is nonzero and ``sum cert_i * rows_i == 0``."""
    if len(cert) != len(rows):
        raise SignatureError(f"certificate length {len(cert)} vs {len(rows)} rows")
    if all(b.is_zero() for b in cert):
        return False
    return all(e.is_zero() for e in vector_matrix_product(list(cert), rows))


def left_dependent(rows, max_ore_order=DEFAULT_MAX_ORE_ORDER, check=False):
    """Decide left dependence of the rows of a matrix over B[Delta]."""
    original = [tuple(r) for r in rows]
    if not original or not original[0]:
        raise ValueError("left_dependent needs a nonempty matrix")
    ncols = len(original[0])
    if any(len(r) != ncols for r in original):
        raise SignatureError("rows have different lengths")
    sig = original[0][0].sig
    m = len(original)
    work = [list(r) for r in original]
    trans = [[OrePoly.one(sig) if i == j else OrePoly.zero(sig) for j in range(m)] for i in range(m)]

    def found(i, pivots):
        cert = _normalize_certificate(trans[i])
        if not verify_left_relation(original, cert):
            raise InvariantError("certificate failed verification")
        return DependenceVerdict(DEPENDENT, cert, tuple(pivots))

    pivots = []
    for i in range(m):
        if _row_is_zero(work[i]):
            return found(i, pivots)

    active = list(range(m))
    for col in range(ncols):
        cands = [i for i in active if not work[i][col].is_zero()]
        if not cands:
            continue
        p = min(cands, key=lambda i: (work[i][col].order, work[i][col].coefficient_degree(), i))
        a = work[p][col]
        for i in cands:
            if i == p:
                continue
            c, d, _ = ore_common_multiple(a, work[i][col], max_ore_order, check=check)
            work[i] = [ore_mul(c, x) - ore_mul(d, y) for x, y in zip(work[p], work[i])]
            trans[i] = [ore_mul(c, x) - ore_mul(d, y) for x, y in zip(trans[p], trans[i])]
            if not work[i][col].is_zero():
                raise InvariantError("pivot entry survived elimination")
            if _row_is_zero(work[i]):
                return found(i, pivots)
            lam = normalizing_factor(_flat_coefficients(work[i]))
            work[i] = _left_scale_row(lam, work[i])
            trans[i] = _left_scale_row(lam, trans[i])
        active.remove(p)
        pivots.append((p, col))
    if active:
        raise InvariantError("rows left without pivots but nonzero")
    return DependenceVerdict(INDEPENDENT, None, tuple(pivots))


def diff_alg_dependent(fs, max_ore_order=DEFAULT_MAX_ORE_ORDER, check=False):
    """Decide differential-algebraic dependence of differential polynomials."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one element")
    return left_dependent(jacobian(fs), max_ore_order=max_ore_order, check=check)


def verify_certificate(fs, cert):
    fs = list(fs)
    if len(cert) != len(fs):
        raise SignatureError(f"certificate length {len(cert)} vs {len(fs)} elements")
    return verify_left_relation(jacobian(fs), list(cert))


def prolongation_rank(fs, s):
    """Rank and count of the commutative Jacobian of all f_i^theta, |theta| <= s."""
    if s < 0:
        raise ValueError("prolongation order must be nonnegative")
    fs = list(fs)
    sig = fs[0].sig
    prolonged = [f.apply_theta(t) for f in fs for t in derivops_up_to(sig.m, s)]
    symbols = sorted(set().union(*(p.variables() for p in prolonged)))
    if not symbols:
        return ProlongationRank(0, len(prolonged))
    matrix = [[p.partial(v) for v in symbols] for p in prolonged]
    return ProlongationRank(bareiss_rank(matrix), len(prolonged))


def prolongation_oracle(fs, max_order=3):
    """First level ``s <= max_order`` with a rank drop.

    Returns ``(rank, count, s)``; when no level is deficient the last level
    is reported and the answer is inconclusive.
    """
    for s in range(max_order + 1):
        r = prolongation_rank(fs, s)
        if r.deficient:
            return r.rank, r.count, s
    return r.rank, r.count, max_order

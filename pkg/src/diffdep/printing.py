"""Text forms that the parser reads back unchanged."""

from __future__ import annotations

from .novikov import Add, Circ, Const, Scale, Sub, Var


def _format_theta(theta):
    parts = []
    for k, e in enumerate(theta, start=1):
        if e == 1:
            parts.append(f"D{k}")
        elif e > 1:
            parts.append(f"D{k}^{e}")
    return "*".join(parts)


def _format_coefficient(r):
    """Coefficient text and whether it is a bare unit (1 or -1)."""
    if r.is_polynomial():
        p = r.num
        if p.is_constant():
            return str(p)
        if len(p.terms) == 1:
            return str(p)
        return f"({p})"
    return f"(({r.num})/({r.den}))"


def format_orepoly(op):
    if op.is_zero():
        return "0"
    out = []
    for theta, r in op.sorted_terms():
        d = _format_theta(theta)
        c = _format_coefficient(r)
        if not d:
            s = c
        elif c == "1":
            s = d
        elif c == "-1":
            s = "-" + d
        else:
            s = f"{c}*{d}"
        if out:
            out.append(" - " + s[1:] if s.startswith("-") else " + " + s)
        else:
            out.append(s)
    return "".join(out)


def _format_fraction(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_novikov(expr):
    """Fully parenthesized form of a Novikov expression tree."""
    if isinstance(expr, Var):
        return f"x{expr.index}"
    if isinstance(expr, Const):
        return _format_fraction(expr.value)
    if isinstance(expr, Circ):
        return f"({format_novikov(expr.left)} @ {format_novikov(expr.right)})"
    if isinstance(expr, Add):
        return f"({format_novikov(expr.left)} + {format_novikov(expr.right)})"
    if isinstance(expr, Sub):
        return f"({format_novikov(expr.left)} - {format_novikov(expr.right)})"
    if isinstance(expr, Scale):
        return f"({_format_fraction(expr.factor)} * {format_novikov(expr.operand)})"
    raise TypeError(f"not a Novikov expression: {expr!r}")


def format_value(v):
    from .novikov import NovikovElement
    if isinstance(v, (Var, Const, Circ, Add, Sub, Scale)):
        return format_novikov(v)
    if isinstance(v, NovikovElement):
        return str(v)
    return str(v)

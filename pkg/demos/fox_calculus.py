"""Fox derivatives, Jacobians and the chain rule.

Run with ``python demos/fox_calculus.py``.
"""

from diffdep import AlgebraSignature, fox_gradient, jacobian, parse_expr, substitute
from diffdep.fox import chain_rule_product
from diffdep.printing import format_orepoly

S2 = AlgebraSignature(2, 1)


def poly(src):
    return parse_expr(src, "diffpoly", S2)


if __name__ == "__main__":
    f = poly("x1*x2' + x1'^2")
    print("f =", f)
    print("fox gradient:", [format_orepoly(a) for a in fox_gradient(f)])

    fs = [poly("x1 + x2'"), poly("x1*x2")]
    print("\nJacobian of", [str(g) for g in fs])
    for row in jacobian(fs):
        print("  ", [format_orepoly(a) for a in row])

    # the gradient of a composite equals the gradient times the Jacobian
    g = poly("x1*x2'")
    lhs = fox_gradient(substitute(g, fs))
    rhs = chain_rule_product(g, fs)
    print("\nchain rule holds:", lhs == rhs)

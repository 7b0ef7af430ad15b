"""Common left multiples of linear differential operators.

Run with ``python demos/ore_multiples.py``.
"""

from diffdep import AlgebraSignature, ore_apply, ore_common_multiple, ore_mul, parse_expr
from diffdep.printing import format_orepoly

S1 = AlgebraSignature(1, 1)


def op(src):
    return parse_expr(src, "orepoly", S1)


if __name__ == "__main__":
    D, x = op("D"), op("x")
    print("D*x =", format_orepoly(ore_mul(D, x)))
    print("(x*D) applied to x^3 =", ore_apply(op("x*D"), parse_expr("x^3", "diffpoly", S1)))

    for a, b in [("D", "x"), ("x*D + 1", "D^2"), ("x'*D", "x + D")]:
        c, d, s = ore_common_multiple(op(a), op(b), check=True)
        print(f"\na = {a}, b = {b}, order bound s = {s}")
        print(f"  c = {format_orepoly(c)}")
        print(f"  d = {format_orepoly(d)}")
        print(f"  c*a = d*b = {format_orepoly(ore_mul(c, op(a)))}")

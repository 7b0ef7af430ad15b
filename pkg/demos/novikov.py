"""Free Novikov algebras realised inside differential polynomials.

Run with ``python demos/novikov.py``.
"""

from diffdep import AlgebraSignature, embed, nov_basis, novikov_dependent, parse_expr
from diffdep.novikov import novikov_witness
from diffdep.printing import format_orepoly

S2 = AlgebraSignature(2, 1)

if __name__ == "__main__":
    tree = parse_expr("(x1@x2)@x1 - x1@(x2@x1)", "novikov", S2)
    print("embedded:", embed(tree, S2).body)

    for w in range(1, 6):
        print(f"basis of degree {w} in one generator: {len(nov_basis(1, w))} monomials")

    elems = [embed(parse_expr(s, "novikov", S2), S2) for s in ["x1", "x2", "x1@x2 + x2@x2"]]
    v = novikov_dependent(elems, check=True)
    print("\nstatus:", v.status)
    print("certificate:", [format_orepoly(c) for c in v.certificate])

    # relations of other rho degrees are moved to rho degree 1
    for src in ["x1^2*x2", "x1*x2''"]:
        g = parse_expr(src, "diffpoly", S2)
        print("witness for", g, "->", novikov_witness(g))

"""Decide whether differential polynomials satisfy a differential relation.

Run with ``python demos/dependence.py``.
"""

from diffdep import AlgebraSignature, diff_alg_dependent, parse_expr, prolongation_oracle, verify_certificate
from diffdep.printing import format_orepoly

S2 = AlgebraSignature(2, 1)


def show(*srcs):
    fs = [parse_expr(s, "diffpoly", S2) for s in srcs]
    v = diff_alg_dependent(fs, check=True)
    print(f"inputs: {', '.join(map(str, fs))}")
    print(f"  status: {v.status}")
    if v.dependent:
        print(f"  certificate: ({', '.join(format_orepoly(c) for c in v.certificate)})")
        print(f"  certificate annihilates the Fox Jacobian: {verify_certificate(fs, v.certificate)}")
    rank, count, s = prolongation_oracle(fs)
    print(f"  prolongation check at order {s}: rank {rank} of {count}")


if __name__ == "__main__":
    show("x1", "x2")
    # x1*x2' is built from x1 and x2, so a relation exists
    show("x1", "x2", "x1*x2'")
    show("x1^2 + x2", "x1'")
    show("x1", "x2", "x1'*x2 + x2''")

"""Hodge numbers of a sphere with n points all colored 2, for (r, s) = (5, 3).

The coefficients form the shallow diagonals of Pascal's triangle, so the
dimensions are Fibonacci numbers and the alternating sums are signatures.
"""
from su2hodge import ModelParams, SurfaceDatum, evaluate
from su2hodge.oracles import pascal_oracle

params = ModelParams(5, 3)

print("n   " + "Hodge polynomial".ljust(71) + "dim  sig")
for n in range(2, 13):
    res = evaluate(params, SurfaceDatum(0, (2,) * n))
    # the closed form is independent of the quotient ring
    assert res.polynomial == pascal_oracle(n)
    print(f"{n:<3d} {str(res.polynomial):<70s} {res.dimension:<4d} {res.signature}")

# Weight is half the color sum, so every term has p + q = n.
res = evaluate(params, SurfaceDatum(0, (2,) * 7))
print("\nterms of n=7:", [(p, q, c) for p, q, c in res.polynomial.items()])

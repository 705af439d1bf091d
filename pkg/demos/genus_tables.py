"""How the Hodge polynomial grows with the genus.

Each handle multiplies by the element Omega, whose counit is r - 1 in
genus one.  Dimensions match the Verlinde numbers at u = v = 1.
"""
from su2hodge import ModelParams, SurfaceDatum, build_algebra, evaluate

for r, s in [(3, 1), (5, 1), (5, 3), (7, 3)]:
    params = ModelParams(r, s)
    A = build_algebra(params)
    print(f"(r, s) = ({r}, {s})   eps(Omega) = {A.epsilon(A.omega)}")
    for g in range(4):
        res = evaluate(params, SurfaceDatum(g, ()))
        note = "  (formal)" if res.formal_value else ""
        print(f"  g={g}: e = {res.polynomial}   dim {res.dimension}{note}")
    print()

# A colored surface of genus 2 for (5, 3).  Negative powers of u can appear
# once s > 1 and g >= 2; the total degree is still half the color sum.
res = evaluate(ModelParams(5, 3), SurfaceDatum(2, (2, 2)))
print("g=2, colors (2, 2):", res.polynomial, " weight", res.weight)

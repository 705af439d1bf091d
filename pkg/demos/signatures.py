"""Signatures as specializations of Hodge polynomials.

At the point (u, v) = (-1, 1) or (1, -1), depending on the parity of
floor(2s/r), each Hodge polynomial evaluates to the signature of the
corresponding Hermitian form.  The sign of the [k-1] coefficient of
[k]*[1] follows the floor formula checked here.
"""
from su2hodge import ModelParams, SurfaceDatum, build_algebra, hodge_polynomial
from su2hodge.laurent import specialize
from su2hodge.su2_model import admissible_params, signature_point, weight_sequence

for params in admissible_params(9):
    r, s = params.r, params.s
    A = build_algebra(params)
    point = signature_point(params)
    w = "".join(str(x) for x in weight_sequence(params))
    signs = []
    for k in range(1, r - 1):
        e = hodge_polynomial(A, SurfaceDatum(0, (k, 1), k - 1))
        signs.append("+" if specialize(e, *point) > 0 else "-")
    print(f"r={r} s={s} weights {w:<8s} point {point}  signs {''.join(signs)}")

"""Three ways to evaluate the same number.

The quotient ring reduces polynomials in X modulo the characteristic
polynomial.  The structure constants come from the recurrence for [1][k]
alone.  The matrix path represents [k] by chi_k(M).  None of them shares
code with another beyond Laurent arithmetic.
"""
import time

from su2hodge import ModelParams, SurfaceDatum, build_algebra, hodge_polynomial
from su2hodge.oracles import matrix_oracle, sc_hodge_polynomial, structure_constants
from su2hodge.sweep import run_sweep
from su2hodge.su2_model import VALID_SWEEP

params = ModelParams(7, 3)
A = build_algebra(params)
d = SurfaceDatum(1, (1, 2, 3, 4))
print("quotient ring :", hodge_polynomial(A, d))
print("struct. const.:", sc_hodge_polynomial(params, d.colors, d.genus))
print("matrix        :", matrix_oracle(params, d))

c = structure_constants(params)
print("\n[2][3] in the named basis:", [str(x) for x in c[2][3]])

start = time.perf_counter()
count, bad = run_sweep(VALID_SWEEP[:4], genus_max=2, n_max=5)
print(f"\nsweep over {count} points: {len(bad)} mismatches "
      f"({time.perf_counter() - start:.1f}s)")

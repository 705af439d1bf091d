"""Exact Hodge numbers of SU(2) modular functors of level 2r, r odd.

Typical use::

    >>> from su2hodge import ModelParams, SurfaceDatum, evaluate
    >>> res = evaluate(ModelParams(5, 3), SurfaceDatum(0, (2, 2, 2, 2)))
    >>> str(res.polynomial), res.dimension, res.signature
    ('u*v^3 + u^2*v^2', 2, 0)
"""
from .frobenius import FrobeniusAlgebra, RingElement, UniPoly
from .hodge import (
    GapReport,
    HodgeResult,
    SurfaceDatum,
    apply_shift,
    evaluate,
    gap_scan,
    glue,
    hodge_polynomial,
    parity_vanishes,
    signature,
    weight_of,
)
from .laurent import LaurentPoly, parse
from .su2_model import ModelParams, build_algebra, validate, weight_sequence

__version__ = "0.1.0"

__all__ = [
    "FrobeniusAlgebra",
    "RingElement",
    "UniPoly",
    "GapReport",
    "HodgeResult",
    "SurfaceDatum",
    "apply_shift",
    "evaluate",
    "gap_scan",
    "glue",
    "hodge_polynomial",
    "parity_vanishes",
    "signature",
    "weight_of",
    "LaurentPoly",
    "parse",
    "ModelParams",
    "build_algebra",
    "validate",
    "weight_sequence",
]

"""Hodge polynomials of conformal blocks and the quantities derived from them.

The Hodge polynomial of ``V_g(mu; l_1, ..., l_n)`` is the ``[mu]``
coefficient of ``[l_1] * ... * [l_n] * Omega^g`` in the Frobenius algebra;
with no output color it is the counit of that product.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .frobenius import FrobeniusAlgebra, RingElement
from .laurent import ZERO, LaurentPoly, specialize
from .su2_model import ModelParams, build_algebra, signature_point

__all__ = [
    "SurfaceDatum",
    "GapReport",
    "HodgeResult",
    "ColorOutOfRange",
    "OutputColorUnsupported",
    "NotHomogeneous",
    "NonIntegerShift",
    "ZeroColorShift",
    "product_element",
    "boundary_vector",
    "hodge_polynomial",
    "parity_vanishes",
    "weight_of",
    "signature",
    "gap_scan",
    "apply_shift",
    "is_formal",
    "glue",
    "evaluate",
]


class ColorOutOfRange(ValueError):
    pass


class OutputColorUnsupported(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class NonIntegerShift(ValueError):
    pass


class ZeroColorShift(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceDatum:
    """Genus, input colors and optional output color of a colored surface."""

    genus: int
    colors: tuple[int, ...] = ()
    output_color: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative (got {self.genus})")

    @property
    def n_points(self) -> int:
        return len(self.colors) + (self.output_color is not None)


@dataclass(frozen=True)
class GapReport:
    has_type2_gap: bool
    p_support: tuple[int, ...]
    # integer bidegrees all lie in one class of Q/Z
    has_type1_gap: bool = False
    note: str = "type 1 gaps cannot occur with integer bidegrees"


@dataclass(frozen=True)
class HodgeResult:
    params: ModelParams
    datum: SurfaceDatum
    polynomial: LaurentPoly
    weight: Fraction
    dimension: int
    signature: int | None
    gaps: GapReport
    formal_value: bool = field(default=False)


def _check_colors(A: FrobeniusAlgebra, d: SurfaceDatum) -> None:
    n = A.rank
    for c in d.colors:
        if not 0 <= c < n:
            raise ColorOutOfRange(f"color {c} outside 0..{n - 1}")
    if d.output_color is not None and not 0 <= d.output_color < n:
        raise ColorOutOfRange(f"output color {d.output_color} outside 0..{n - 1}")


def product_element(A: FrobeniusAlgebra, colors: Sequence[int], genus: int = 0) -> RingElement:
    """``[l_1] * ... * [l_n] * Omega^genus`` in the power basis."""
    acc = A.one()
    for c in colors:
        acc = A.mul(acc, A.basis(c))
    if genus:
        acc = A.mul(acc, A.power(A.omega, genus))
    return acc


def boundary_vector(A: FrobeniusAlgebra, colors: Sequence[int], genus: int = 0) -> tuple[LaurentPoly, ...]:
    """Hodge polynomials of ``V_genus(mu; colors)`` for every output color ``mu``."""
    return A.to_named_basis(product_element(A, colors, genus))


def hodge_polynomial(A: FrobeniusAlgebra, d: SurfaceDatum) -> LaurentPoly:
    _check_colors(A, d)
    mu = 0 if d.output_color is None else d.output_color
    return boundary_vector(A, d.colors, d.genus)[mu]


def parity_vanishes(d: SurfaceDatum) -> bool:
    mu = d.output_color or 0
    return (sum(d.colors) - mu) % 2 == 1


def weight_of(d: SurfaceDatum) -> Fraction:
    mu = d.output_color or 0
    return Fraction(sum(d.colors) - mu, 2)


def is_formal(d: SurfaceDatum) -> bool:
    """True outside the tangent-stable range, where values are only formal."""
    return (d.genus, d.n_points) in {(0, 0), (0, 1), (1, 0)}


def signature(A: FrobeniusAlgebra, params: ModelParams, d: SurfaceDatum,
              e: LaurentPoly | None = None) -> int:
    """Signature of the invariant Hermitian form on a closed colored surface."""
    if d.output_color is not None:
        raise OutputColorUnsupported("signatures are only defined without an output color")
    if e is None:
        e = hodge_polynomial(A, d)
    value = specialize(e, *signature_point(params))
    assert value.denominator == 1
    return int(value)


def gap_scan(e: LaurentPoly) -> GapReport:
    if len(e.total_degrees()) > 1:
        raise NotHomogeneous(f"{e} is not homogeneous")
    support = tuple(sorted({p for p, _, _ in e.items()}))
    gap = bool(support) and (support[-1] - support[0] + 1 != len(support))
    return GapReport(has_type2_gap=gap, p_support=support)


def apply_shift(e: LaurentPoly, d: SurfaceDatum,
                delta: Mapping[int, tuple[Fraction | int, Fraction | int]]) -> LaurentPoly:
    """Hodge polynomial after shifting bidegrees color-wise by ``delta``.

    Input colors contribute ``+delta``; an output color contributes ``-delta``.
    Colors missing from ``delta`` are not shifted.
    """
    if any(Fraction(x) != 0 for x in delta.get(0, (0, 0))):
        raise ZeroColorShift("a shift must vanish on the color 0")
    dp = dq = Fraction(0)
    for c in d.colors:
        a, b = delta.get(c, (0, 0))
        dp += Fraction(a)
        dq += Fraction(b)
    if d.output_color is not None:
        a, b = delta.get(d.output_color, (0, 0))
        dp -= Fraction(a)
        dq -= Fraction(b)
    if dp.denominator != 1 or dq.denominator != 1:
        raise NonIntegerShift(f"aggregate shift ({dp}, {dq}) is not integral")
    return e.shift(int(dp), int(dq))


def glue(A: FrobeniusAlgebra, left: Sequence[LaurentPoly], right: Sequence[LaurentPoly]) -> LaurentPoly:
    """Pair two boundary vectors with ``eta``: ``sum_{j,k} a_j b_k eps([j][k])``."""
    total = ZERO
    gram = A.gram_matrix()
    for j, a in enumerate(left):
        if a:
            for k, b in enumerate(right):
                if b and gram[j][k]:
                    total = total + a * b * gram[j][k]
    return total


def evaluate(params: ModelParams, d: SurfaceDatum) -> HodgeResult:
    """Full record for one datum: polynomial, weight, dimension, signature, gaps."""
    A = build_algebra(params)
    e = hodge_polynomial(A, d)
    dim = specialize(e, 1, 1)
    sig = None if d.output_color is not None else signature(A, params, d, e)
    return HodgeResult(
        params=params,
        datum=d,
        polynomial=e,
        weight=weight_of(d),
        dimension=int(dim),
        signature=sig,
        gaps=gap_scan(e),
        formal_value=is_formal(d),
    )
